#include "gyrolab/subgyro.hpp"

#include <algorithm>
#include <stdexcept>

#include "gyrolab/topology.hpp"

namespace gyrolab {

namespace {

std::vector<Element> as_indices(std::initializer_list<int> xs) {
  std::vector<Element> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

int checked_inv(const FiniteGyrogroup& G, int a) {
  const int i = G.inv(a);
  if (i < 0) throw std::logic_error("table has no left inverse for element");
  return i;
}

}  // namespace

SubgyroVerdict is_subgyrogroup(const FiniteGyrogroup& G, const Subset& H) {
  if (H.empty()) throw std::invalid_argument("is_subgyrogroup: empty subset");
  if (H.universe() != G.size())
    throw std::invalid_argument("is_subgyrogroup: universe mismatch");
  for (int a = H.first(); a >= 0; a = H.next(a)) {
    const int ia = G.inv(a);
    if (ia < 0 || !H.test(ia)) return {false, std::pair{a, a}};
  }
  for (int a = H.first(); a >= 0; a = H.next(a))
    for (int b = H.first(); b >= 0; b = H.next(b))
      if (!H.test(G.op(a, b))) return {false, std::pair{a, b}};
  return {};
}

SubgyroVerdict is_L_subgyrogroup(const FiniteGyrogroup& G, const Subset& H) {
  if (const auto sub = is_subgyrogroup(G, H); !sub.ok)
    throw std::invalid_argument("is_L_subgyrogroup: H is not a subgyrogroup");
  const int n = G.size();
  for (int a = 0; a < n; ++a) {
    for (int h = H.first(); h >= 0; h = H.next(h)) {
      Subset image(n);
      for (int z = H.first(); z >= 0; z = H.next(z)) image.set(G.gyr(a, h, z));
      if (!(image == H)) return {false, std::pair{a, h}};
    }
  }
  return {};
}

Subset generate(const FiniteGyrogroup& G, const Subset& X) {
  if (X.empty()) throw std::invalid_argument("generate: empty generating set");
  if (X.universe() != G.size())
    throw std::invalid_argument("generate: universe mismatch");
  const int n = G.size();
  Subset Y(n);
  Y.set(0);
  for (int a = X.first(); a >= 0; a = X.next(a)) {
    Y.set(a);
    Y.set(checked_inv(G, a));
  }
  for (;;) {
    Subset sums(n);
    for (int a = Y.first(); a >= 0; a = Y.next(a))
      for (int b = Y.first(); b >= 0; b = Y.next(b)) sums.set(G.op(a, b));
    Subset next = sums;
    for (int s = sums.first(); s >= 0; s = sums.next(s)) next.set(checked_inv(G, s));
    if (next == Y) return Y;
    Y = next;
  }
}

std::vector<Element> generate_elements(const GyrogroupContract& G,
                                       std::vector<Element> X, std::size_t budget) {
  if (X.empty()) throw std::invalid_argument("generate_elements: empty generating set");
  std::vector<Element> Y;
  auto push = [&](const Element& e) {
    for (const auto& m : Y)
      if (G.equal(m, e)) return false;
    Y.push_back(e);
    return true;
  };
  push(G.zero);
  for (const auto& x : X) {
    push(x);
    push(G.neg(x));
  }
  for (;;) {
    bool grew = false;
    const std::size_t frozen = Y.size();
    for (std::size_t i = 0; i < frozen; ++i) {
      for (std::size_t j = 0; j < frozen; ++j) {
        const Element s = G.add(Y[i], Y[j]);
        if (push(s)) grew = true;
        if (push(G.neg(s))) grew = true;
        if (Y.size() > budget)
          throw std::runtime_error(
              "generate_elements: partial closure, budget exceeded at " +
              std::to_string(Y.size()) + " elements");
      }
    }
    if (!grew) return Y;
  }
}

json CanonicalDecomposition::to_json() const {
  json chain_j = json::array(), blocks_j = json::array();
  for (const auto& g : chain) chain_j.push_back(g.to_indices());
  for (const auto& h : blocks) blocks_j.push_back(h.to_indices());
  return json{{"enumeration", enumeration},
              {"chain", std::move(chain_j)},
              {"blocks", std::move(blocks_j)}};
}

CanonicalDecomposition CanonicalDecomposition::from_json(const json& j) {
  CanonicalDecomposition dec;
  dec.enumeration = j.at("enumeration").get<std::vector<int>>();
  const int n = static_cast<int>(dec.enumeration.size());
  for (const auto& arr : j.at("chain"))
    dec.chain.push_back(Subset::of(n, arr.get<std::vector<int>>()));
  for (const auto& arr : j.at("blocks"))
    dec.blocks.push_back(Subset::of(n, arr.get<std::vector<int>>()));
  return dec;
}

CanonicalDecomposition canonical_decomposition(const FiniteGyrogroup& G,
                                               std::vector<int> enumeration) {
  const int n = G.size();
  if (enumeration.empty()) {
    enumeration.resize(n);
    for (int i = 0; i < n; ++i) enumeration[i] = i;
  }
  if (static_cast<int>(enumeration.size()) != n)
    throw std::invalid_argument("canonical_decomposition: enumeration size mismatch");
  std::vector<char> seen(n, 0);
  for (int e : enumeration) {
    if (e < 0 || e >= n || seen[e]++)
      throw std::invalid_argument("canonical_decomposition: not a permutation");
  }
  if (enumeration[0] != 0)
    throw std::invalid_argument("canonical_decomposition: enumeration must start at 0");

  CanonicalDecomposition dec;
  dec.enumeration = enumeration;
  Subset covered = generate(G, Subset::of(n, {0}));
  dec.chain.push_back(covered);
  while (!covered.is_full()) {
    int next = -1;
    for (int e : enumeration) {
      if (!covered.test(e)) {
        next = e;
        break;
      }
    }
    Subset seed = covered;
    seed.set(next);
    covered = generate(G, seed);
    dec.chain.push_back(covered);
  }
  dec.blocks.push_back(dec.chain.front());
  for (std::size_t k = 1; k < dec.chain.size(); ++k)
    dec.blocks.push_back(dec.chain[k].minus(dec.chain[k - 1]));
  return dec;
}

VerificationReport verify_decomposition(const FiniteGyrogroup& G,
                                        const CanonicalDecomposition& dec) {
  VerificationReport rep;
  const int n = G.size();
  if (dec.chain.empty() || dec.blocks.size() != dec.chain.size())
    throw std::invalid_argument("verify_decomposition: malformed decomposition");
  for (const auto& s : dec.chain)
    if (s.universe() != n) throw std::invalid_argument("verify_decomposition: universe mismatch");
  const auto m = dec.chain.size();

  {
    bool ok = true;
    std::vector<Element> wit;
    for (std::size_t k = 0; k < m && ok; ++k) {
      if (dec.chain[k].empty()) {
        ok = false;
        wit = as_indices({int(k)});
        break;
      }
      const auto v = is_subgyrogroup(G, dec.chain[k]);
      if (!v.ok) {
        ok = false;
        wit = as_indices({int(k), v.witness->first, v.witness->second});
      }
    }
    if (ok)
      rep.add_pass("(1) chain members are subgyrogroups", true, m);
    else
      rep.add_fail("(1) chain members are subgyrogroups", true, m, wit);
  }
  {
    bool ok = dec.chain.back().is_full();
    std::size_t at = m;
    for (std::size_t k = 0; k + 1 < m && ok; ++k)
      if (!(dec.chain[k].subset_of(dec.chain[k + 1]) &&
            !(dec.chain[k] == dec.chain[k + 1]))) {
        ok = false;
        at = k;
      }
    if (ok)
      rep.add_pass("(2) chain strictly increasing to G", true, m);
    else
      rep.add_fail("(2) chain strictly increasing to G", true, m,
                   at < m ? as_indices({int(at)}) : std::vector<Element>{});
  }
  rep.skip("(3) |G_a| = |a|: infinite cardinal arithmetic, no finite restatement");
  {
    bool ok = true;
    std::size_t at = m;
    Subset acc(n);
    for (std::size_t k = 0; k < m; ++k) {
      acc = acc | dec.blocks[k];
      if (!(acc == dec.chain[k])) {
        ok = false;
        at = k;
        break;
      }
    }
    if (ok)
      rep.add_pass("(4) chain equals prefix unions of blocks", true, m);
    else
      rep.add_fail("(4) chain equals prefix unions of blocks", true, m,
                   as_indices({int(at)}));
  }
  {
    bool ok = true;
    std::vector<Element> wit;
    Subset acc(n);
    for (std::size_t k = 0; k < m && ok; ++k) {
      if (dec.blocks[k].empty() || acc.intersects(dec.blocks[k])) {
        ok = false;
        wit = as_indices({int(k)});
      }
      acc = acc | dec.blocks[k];
    }
    if (ok && !acc.is_full()) {
      ok = false;
      wit = {};
    }
    if (ok)
      rep.add_pass("(5) blocks partition the carrier", true, m);
    else
      rep.add_fail("(5) blocks partition the carrier", true, m, wit);
  }
  {
    bool ok = true;
    std::vector<Element> wit;
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = a + 1; b < m && ok; ++b) {
        for (int gelem = dec.blocks[a].first(); gelem >= 0;
             gelem = dec.blocks[a].next(gelem)) {
          if (!(translate(G, gelem, dec.blocks[b], Side::left) == dec.blocks[b]) ||
              !(translate(G, gelem, dec.blocks[b], Side::right) == dec.blocks[b])) {
            ok = false;
            wit = as_indices({int(a), int(b), gelem});
            break;
          }
        }
      }
    }
    if (ok)
      rep.add_pass("(6) later blocks absorb earlier elements", true, m * m);
    else
      rep.add_fail("(6) later blocks absorb earlier elements", true, m * m, wit);
  }
  {
    bool ok = true;
    std::size_t at = m;
    for (std::size_t k = 0; k < m; ++k) {
      Subset negs(n);
      for (int a = dec.blocks[k].first(); a >= 0; a = dec.blocks[k].next(a)) {
        const int ia = G.inv(a);
        if (ia < 0) {
          ok = false;
          break;
        }
        negs.set(ia);
      }
      if (!ok || !(negs == dec.blocks[k])) {
        ok = false;
        at = k;
        break;
      }
    }
    if (ok)
      rep.add_pass("(7) blocks are symmetric", true, m);
    else
      rep.add_fail("(7) blocks are symmetric", true, m, as_indices({int(at)}));
  }
  rep.skip("(8) cofinal unions have cardinality kappa: out of scope at finite scale");
  return rep;
}

Subset translate(const FiniteGyrogroup& G, int g, const Subset& S, Side side) {
  if (S.universe() != G.size()) throw std::invalid_argument("translate: universe mismatch");
  Subset out(G.size());
  for (int s = S.first(); s >= 0; s = S.next(s))
    out.set(side == Side::left ? G.op(g, s) : G.op(s, g));
  return out;
}

TranslateDefect translate_defect(const FiniteGyrogroup& G,
                                 const CanonicalDecomposition& dec,
                                 const Subset& block_indices, int g, int h) {
  const int n = G.size();
  const int m = static_cast<int>(dec.blocks.size());
  if (block_indices.universe() != m)
    throw std::invalid_argument("translate_defect: index set universe must be block count");
  Subset HA(n);
  for (int i = block_indices.first(); i >= 0; i = block_indices.next(i))
    HA = HA | dec.blocks[i];
  const Subset moved = translate(G, h, translate(G, g, HA, Side::left), Side::left);
  TranslateDefect result{moved.minus(HA), false};

  auto block_of = [&](int x) {
    for (int k = 0; k < m; ++k)
      if (dec.blocks[k].test(x)) return k;
    throw std::invalid_argument("translate_defect: element outside every block");
  };
  const int bound = std::max(block_of(g), block_of(h));
  result.contained = result.defect.subset_of(dec.chain[bound]);
  return result;
}

json CoverCertificate::to_json() const {
  return json{{"U", U.to_indices()}, {"A", A.to_indices()}, {"size", size},
              {"exact", exact}};
}

CoverCertificate covering_number(const FiniteGyrogroup& G, const Subset& U,
                                 int exact_cap) {
  const int n = G.size();
  if (U.universe() != n) throw std::invalid_argument("covering_number: universe mismatch");
  if (!U.test(0)) throw std::invalid_argument("covering_number: 0 must belong to U");

  std::vector<Subset> cover;
  cover.reserve(n);
  for (int a = 0; a < n; ++a) cover.push_back(translate(G, a, U, Side::left));

  Subset A(n);
  bool exact = true;
  if (n <= exact_cap) {
    // min set cover by DP over covered masks; deterministic reconstruction.
    const std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1u);
    std::vector<std::uint32_t> cv(n);
    for (int a = 0; a < n; ++a) cv[a] = static_cast<std::uint32_t>(cover[a].to_mask());
    std::vector<std::uint8_t> best(std::size_t(full) + 1, 0xff);
    best[0] = 0;
    for (std::uint32_t m = 1; m <= full; ++m) {
      const int b = std::countr_zero(m);
      std::uint8_t v = 0xff;
      for (int a = 0; a < n; ++a) {
        if (!((cv[a] >> b) & 1u)) continue;
        const std::uint8_t cand = best[m & ~cv[a]];
        if (cand != 0xff && cand + 1 < v) v = static_cast<std::uint8_t>(cand + 1);
      }
      best[m] = v;
    }
    std::uint32_t m = full;
    while (m) {
      const int b = std::countr_zero(m);
      for (int a = 0; a < n; ++a) {
        if (!((cv[a] >> b) & 1u)) continue;
        if (best[m & ~cv[a]] != 0xff && best[m & ~cv[a]] + 1 == best[m]) {
          A.set(a);
          m &= ~cv[a];
          break;
        }
      }
    }
  } else {
    exact = false;
    Subset uncovered = Subset::full(n);
    while (!uncovered.empty()) {
      int pick = -1, gain = -1;
      for (int a = 0; a < n; ++a) {
        const int c = (cover[a] & uncovered).count();
        if (c > gain) {
          gain = c;
          pick = a;
        }
      }
      A.set(pick);
      uncovered = uncovered.minus(cover[pick]);
    }
  }

  Subset covered(n);
  for (int a = A.first(); a >= 0; a = A.next(a)) covered = covered | cover[a];
  if (!covered.is_full())
    throw std::logic_error("covering_number: certificate failed re-verification");
  return CoverCertificate{U, A, A.count(), exact};
}

Subset bounded_cover_for_sub(const FiniteGyrogroup& G, const Subset& H,
                             const Subset& B, const Subset& V, const Subset& W) {
  const int n = G.size();
  if (const auto v = is_subgyrogroup(G, H); !v.ok)
    throw std::invalid_argument("bounded_cover_for_sub: H is not a subgyrogroup");
  Subset BV(n);
  for (int b = B.first(); b >= 0; b = B.next(b))
    BV = BV | translate(G, b, V, Side::left);
  if (!BV.is_full())
    throw std::invalid_argument("bounded_cover_for_sub: B (+) V does not cover G");
  Subset VV(n);
  for (int v = V.first(); v >= 0; v = V.next(v))
    VV = VV | translate(G, v, V, Side::left);
  if (!(VV & H).subset_of(W))
    throw std::invalid_argument("bounded_cover_for_sub: (V (+) V) n H not inside W");
  if (!W.subset_of(H))
    throw std::invalid_argument("bounded_cover_for_sub: W not inside H");

  Subset A(n);
  for (int c = B.first(); c >= 0; c = B.next(c)) {
    const Subset reach = translate(G, c, V, Side::left) & H;
    const int pick = reach.first();
    if (pick >= 0) A.set(pick);
  }
  Subset AW(n);
  for (int a = A.first(); a >= 0; a = A.next(a))
    AW = AW | translate(G, a, W, Side::left);
  if (!(AW == H))
    throw std::runtime_error(
        "bounded_cover_for_sub: postcondition A (+) W = H failed (is V "
        "gyration-stable and symmetric?)");
  return A;
}

Subset maximal_disjoint_set(const FiniteGyrogroup& G, const Subset& V) {
  const int n = G.size();
  if (V.universe() != n)
    throw std::invalid_argument("maximal_disjoint_set: universe mismatch");
  Subset A(n);
  Subset blocked(n);
  for (int x = 0; x < n; ++x) {
    const Subset tx = translate(G, x, V, Side::left);
    if (!tx.intersects(blocked)) {
      A.set(x);
      blocked = blocked | tx;
    }
  }
  return A;
}

InvarianceVerdict gyr_invariant_set(const FiniteGyrogroup& G, const Subset& U,
                                    Exec exec) {
  const int n = G.size();
  if (U.universe() != n)
    throw std::invalid_argument("gyr_invariant_set: universe mismatch");
  const std::uint64_t n2 = std::uint64_t(n) * n;
  auto bad = find_first_violation(exec, n2, [&](std::uint64_t p) {
    const int x = int(p / n), y = int(p % n);
    Subset image(n);
    for (int u = U.first(); u >= 0; u = U.next(u)) image.set(G.gyr(x, y, u));
    return !(image == U);
  });
  if (bad == n2) return {};
  return {false, std::pair{int(bad / n), int(bad % n)}};
}

ElementInvarianceVerdict gyr_invariant_set(const GyrogroupContract& G,
                                           const std::vector<Element>& U,
                                           const Sampled& mode) {
  if (U.empty()) return {};
  auto pairs = G.draw(2 * mode.count, mode.seed);
  const double slack = G.tol.abs;
  for (std::uint64_t i = 0; i < mode.count; ++i) {
    const auto &x = pairs[2 * i], &y = pairs[2 * i + 1];
    for (const auto& u : U) {
      const Element moved = G.gyr(x, y, u);
      double nearest = element_distance(moved, U.front());
      for (const auto& m : U) nearest = std::min(nearest, element_distance(moved, m));
      if (nearest > slack + G.tol.rel) return {false, {x, y, u}};
    }
  }
  return {};
}

Subset symmetrize(const FiniteGyrogroup& G, const Subset& U) {
  Subset out = U;
  for (int u = U.first(); u >= 0; u = U.next(u)) out.set(checked_inv(G, u));
  return out;
}

OpenLSubgyro open_L_subgyrogroup(const TopoGyroModel& model, const Subset& U) {
  const auto& G = *model.gyro;
  const int n = G.size();
  if (U.universe() != n)
    throw std::invalid_argument("open_L_subgyrogroup: universe mismatch");
  if (!U.test(0)) throw std::invalid_argument("open_L_subgyrogroup: 0 must belong to U");
  if (!model.topology.is_open(U.to_mask()))
    throw std::invalid_argument("open_L_subgyrogroup: U is not open");
  if (const auto inv = gyr_invariant_set(G, U); !inv.invariant)
    throw std::invalid_argument("open_L_subgyrogroup: U is not gyration-stable");

  Subset H = U;
  for (;;) {
    Subset sums(n);
    for (int a = H.first(); a >= 0; a = H.next(a))
      for (int b = H.first(); b >= 0; b = H.next(b)) sums.set(G.op(a, b));
    Subset next = sums;
    for (int s = sums.first(); s >= 0; s = sums.next(s)) next.set(checked_inv(G, s));
    if (next == H) break;
    H = next;
  }

  OpenLSubgyro out{H, {}};
  const auto sub = is_subgyrogroup(G, H);
  if (sub.ok)
    out.report.add_pass("H is a subgyrogroup", true, std::uint64_t(H.count()) * H.count());
  else
    out.report.add_fail("H is a subgyrogroup", true,
                        std::uint64_t(H.count()) * H.count(),
                        as_indices({sub.witness->first, sub.witness->second}));
  const auto inv = gyr_invariant_set(G, H);
  if (inv.invariant)
    out.report.add_pass("gyr[x,y](H) = H for all x,y", true, std::uint64_t(n) * n);
  else
    out.report.add_fail("gyr[x,y](H) = H for all x,y", true, std::uint64_t(n) * n,
                        as_indices({inv.witness->first, inv.witness->second}));
  if (model.topology.is_open(H.to_mask()))
    out.report.add_pass("H is open", true, 1);
  else
    out.report.add_fail("H is open", true, 1, {});
  return out;
}

}  // namespace gyrolab
