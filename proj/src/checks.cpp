#include "gyrolab/checks.hpp"

#include <stdexcept>
#include <vector>

namespace gyrolab {

namespace {

// Derived gyration of (x,y) as a full permutation candidate. Returns false
// when the table is too broken to form it (missing left inverse).
bool gyr_row(const FiniteGyrogroup& g, int x, int y, std::vector<int>& out) {
  const int w = g.op(x, y);
  const int iw = g.inv(w);
  if (iw < 0) return false;
  const int n = g.size();
  out.resize(n);
  for (int z = 0; z < n; ++z) out[z] = g.op(iw, g.op(x, g.op(y, z)));
  return true;
}

std::vector<Element> as_indices(std::initializer_list<int> xs) {
  std::vector<Element> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

VerificationReport axioms_finite(const FiniteGyrogroup& g, Exec exec) {
  VerificationReport rep;
  const int n = g.size();
  const std::uint64_t n2 = std::uint64_t(n) * n, n3 = n2 * n;

  // G1: two-sided identity, then a scan for second identities.
  {
    auto bad = find_first_violation(exec, n, [&](std::uint64_t a) {
      return g.op(0, int(a)) != int(a) || g.op(int(a), 0) != int(a);
    });
    if (bad == std::uint64_t(n))
      rep.add_pass("G1 identity two-sided", true, n);
    else
      rep.add_fail("G1 identity two-sided", true, n, as_indices({int(bad)}));
  }
  {
    auto bad = find_first_violation(exec, n > 1 ? n - 1 : 0, [&](std::uint64_t i) {
      const int e = int(i) + 1;
      for (int a = 0; a < n; ++a)
        if (g.op(e, a) != a || g.op(a, e) != a) return false;
      return true;  // a second identity is the violation
    });
    if (bad == std::uint64_t(n > 1 ? n - 1 : 0))
      rep.add_pass("G1 identity unique", true, n > 1 ? n - 1 : 0);
    else
      rep.add_fail("G1 identity unique", true, n - 1, as_indices({int(bad) + 1}),
                   "second identity element");
  }

  // G2: a two-sided inverse exists and is unique for every element.
  {
    auto bad = find_first_violation(exec, n, [&](std::uint64_t ai) {
      const int a = int(ai);
      int count = 0;
      for (int b = 0; b < n; ++b)
        if (g.op(b, a) == 0 && g.op(a, b) == 0) ++count;
      return count != 1;
    });
    if (bad == std::uint64_t(n))
      rep.add_pass("G2 inverse two-sided unique", true, n);
    else
      rep.add_fail("G2 inverse two-sided unique", true, n, as_indices({int(bad)}));
  }

  // G3: derived gyration is a permutation, satisfies the gyroassociativity
  // equation, and is an operation homomorphism; all per pair (x,y).
  {
    auto bad = find_first_violation(exec, n2, [&](std::uint64_t p) {
      const int x = int(p / n), y = int(p % n);
      std::vector<int> perm;
      if (!gyr_row(g, x, y, perm)) return true;
      std::vector<char> seen(n, 0);
      for (int z = 0; z < n; ++z)
        if (seen[perm[z]]++) return true;
      return false;
    });
    if (bad == n2)
      rep.add_pass("G3 gyration bijective", true, n2);
    else
      rep.add_fail("G3 gyration bijective", true, n2,
                   as_indices({int(bad / n), int(bad % n)}));
  }
  {
    auto bad = find_first_violation(exec, n3, [&](std::uint64_t t) {
      const int x = int(t / n2), y = int((t / n) % n), z = int(t % n);
      const int iw = g.inv(g.op(x, y));
      if (iw < 0) return true;
      return g.op(g.op(x, y), g.gyr(x, y, z)) != g.op(x, g.op(y, z));
    });
    if (bad == n3)
      rep.add_pass("G3 gyroassociativity", true, n3);
    else
      rep.add_fail("G3 gyroassociativity", true, n3,
                   as_indices({int(bad / n2), int((bad / n) % n), int(bad % n)}));
  }
  {
    auto bad = find_first_violation(exec, n2, [&](std::uint64_t p) {
      const int x = int(p / n), y = int(p % n);
      std::vector<int> perm;
      if (!gyr_row(g, x, y, perm)) return true;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (perm[g.op(a, b)] != g.op(perm[a], perm[b])) return true;
      return false;
    });
    if (bad == n2) {
      rep.add_pass("G3 gyration homomorphism", true, n2 * n2);
    } else {
      const int x = int(bad / n), y = int(bad % n);
      std::vector<int> perm;
      std::vector<Element> wit = as_indices({x, y});
      if (gyr_row(g, x, y, perm)) {
        for (int a = 0; a < n && wit.size() == 2; ++a)
          for (int b = 0; b < n; ++b)
            if (perm[g.op(a, b)] != g.op(perm[a], perm[b])) {
              wit.emplace_back(a);
              wit.emplace_back(b);
              break;
            }
      }
      rep.add_fail("G3 gyration homomorphism", true, n2 * n2, std::move(wit));
    }
  }

  // G4: gyr[x (+) y, y] = gyr[x, y] pointwise.
  {
    auto bad = find_first_violation(exec, n3, [&](std::uint64_t t) {
      const int x = int(t / n2), y = int((t / n) % n), z = int(t % n);
      if (g.inv(g.op(x, y)) < 0 || g.inv(g.op(g.op(x, y), y)) < 0) return true;
      return g.gyr(g.op(x, y), y, z) != g.gyr(x, y, z);
    });
    if (bad == n3)
      rep.add_pass("G4 loop property", true, n3);
    else
      rep.add_fail("G4 loop property", true, n3,
                   as_indices({int(bad / n2), int((bad / n) % n), int(bad % n)}));
  }
  return rep;
}

struct SampleBank {
  std::vector<Element> pool;  // 5 per case: x, y, z, a, b
  std::uint64_t cases = 0;
  const Element& x(std::uint64_t i) const { return pool[5 * i]; }
  const Element& y(std::uint64_t i) const { return pool[5 * i + 1]; }
  const Element& z(std::uint64_t i) const { return pool[5 * i + 2]; }
  const Element& a(std::uint64_t i) const { return pool[5 * i + 3]; }
  const Element& b(std::uint64_t i) const { return pool[5 * i + 4]; }
};

SampleBank make_bank(const GyrogroupContract& G, const Sampled& mode) {
  SampleBank bank;
  bank.cases = mode.count;
  bank.pool = G.draw(5 * mode.count, mode.seed);
  return bank;
}

void run_sampled(VerificationReport& rep, const std::string& name, Exec exec,
                 const SampleBank& bank,
                 const std::function<bool(std::uint64_t)>& violates,
                 const std::function<std::vector<Element>(std::uint64_t)>& witness) {
  auto bad = find_first_violation(exec, bank.cases, violates);
  if (bad == bank.cases)
    rep.add_pass(name, false, bank.cases);
  else
    rep.add_fail(name, false, bank.cases, witness(bad));
}

VerificationReport axioms_sampled(const GyrogroupContract& G, const Sampled& mode,
                                  Exec exec) {
  VerificationReport rep;
  const SampleBank bank = make_bank(G, mode);

  run_sampled(
      rep, "G1 identity two-sided", exec, bank,
      [&](std::uint64_t i) {
        const auto& x = bank.x(i);
        return !G.equal(G.add(G.zero, x), x) || !G.equal(G.add(x, G.zero), x);
      },
      [&](std::uint64_t i) { return std::vector<Element>{bank.x(i)}; });

  run_sampled(
      rep, "G2 inverse two-sided", exec, bank,
      [&](std::uint64_t i) {
        const auto& x = bank.x(i);
        return !G.equal(G.add(G.neg(x), x), G.zero) ||
               !G.equal(G.add(x, G.neg(x)), G.zero);
      },
      [&](std::uint64_t i) { return std::vector<Element>{bank.x(i)}; });

  run_sampled(
      rep, "G3 gyroassociativity", exec, bank,
      [&](std::uint64_t i) {
        const auto &x = bank.x(i), &y = bank.y(i), &z = bank.z(i);
        return !G.equal(G.add(x, G.add(y, z)), G.add(G.add(x, y), G.gyr(x, y, z)));
      },
      [&](std::uint64_t i) {
        return std::vector<Element>{bank.x(i), bank.y(i), bank.z(i)};
      });

  run_sampled(
      rep, "G3 gyration homomorphism", exec, bank,
      [&](std::uint64_t i) {
        const auto &x = bank.x(i), &y = bank.y(i), &a = bank.a(i), &b = bank.b(i);
        return !G.equal(G.gyr(x, y, G.add(a, b)),
                        G.add(G.gyr(x, y, a), G.gyr(x, y, b)));
      },
      [&](std::uint64_t i) {
        return std::vector<Element>{bank.x(i), bank.y(i), bank.a(i), bank.b(i)};
      });

  run_sampled(
      rep, "G3 gyration fixes zero", exec, bank,
      [&](std::uint64_t i) {
        return !G.equal(G.gyr(bank.x(i), bank.y(i), G.zero), G.zero);
      },
      [&](std::uint64_t i) { return std::vector<Element>{bank.x(i), bank.y(i)}; });

  run_sampled(
      rep, "G4 loop property", exec, bank,
      [&](std::uint64_t i) {
        const auto &x = bank.x(i), &y = bank.y(i), &z = bank.z(i);
        return !G.equal(G.gyr(G.add(x, y), y, z), G.gyr(x, y, z));
      },
      [&](std::uint64_t i) {
        return std::vector<Element>{bank.x(i), bank.y(i), bank.z(i)};
      });

  if (!G.is_finite()) {
    rep.skip("G1/G2 uniqueness: not checked on continuous carriers");
    rep.skip("G3 gyration bijectivity: analytic on continuous carriers, not sampled");
  }
  return rep;
}

VerificationReport identities_finite(const FiniteGyrogroup& g, Exec exec) {
  VerificationReport rep;
  const int n = g.size();
  const std::uint64_t n2 = std::uint64_t(n) * n;

  auto pair_scan = [&](const std::string& name, auto&& violates) {
    auto bad = find_first_violation(exec, n2, [&](std::uint64_t p) {
      return violates(int(p / n), int(p % n));
    });
    if (bad == n2)
      rep.add_pass(name, true, n2);
    else
      rep.add_fail(name, true, n2, as_indices({int(bad / n), int(bad % n)}));
  };

  pair_scan("left cancellation", [&](int x, int y) {
    const int ix = g.inv(x);
    return ix < 0 || g.op(ix, g.op(x, y)) != y;
  });
  pair_scan("right cancellation", [&](int x, int y) {
    const int iy = g.inv(y);
    if (iy < 0 || g.inv(g.op(x, iy)) < 0) return true;
    return g.op(g.op(x, iy), g.gyr(x, iy, y)) != x;
  });
  pair_scan("gyration inverse cancellation", [&](int x, int y) {
    const int iy = g.inv(y);
    if (iy < 0 || g.inv(g.op(x, y)) < 0) return true;
    return g.op(g.op(x, g.gyr(x, y, iy)), y) != x;
  });
  rep.skip("derived gyration vs native: no native gyration on table models");
  return rep;
}

VerificationReport identities_sampled(const GyrogroupContract& G, const Sampled& mode,
                                      Exec exec) {
  VerificationReport rep;
  const SampleBank bank = make_bank(G, mode);

  run_sampled(
      rep, "left cancellation", exec, bank,
      [&](std::uint64_t i) {
        const auto &x = bank.x(i), &y = bank.y(i);
        return !G.equal(G.add(G.neg(x), G.add(x, y)), y);
      },
      [&](std::uint64_t i) { return std::vector<Element>{bank.x(i), bank.y(i)}; });

  run_sampled(
      rep, "right cancellation", exec, bank,
      [&](std::uint64_t i) {
        const auto &x = bank.x(i), &y = bank.y(i);
        const Element ny = G.neg(y);
        return !G.equal(G.add(G.add(x, ny), G.gyr(x, ny, y)), x);
      },
      [&](std::uint64_t i) { return std::vector<Element>{bank.x(i), bank.y(i)}; });

  run_sampled(
      rep, "gyration inverse cancellation", exec, bank,
      [&](std::uint64_t i) {
        const auto &x = bank.x(i), &y = bank.y(i);
        return !G.equal(G.add(G.add(x, G.gyr(x, y, G.neg(y))), y), x);
      },
      [&](std::uint64_t i) { return std::vector<Element>{bank.x(i), bank.y(i)}; });

  if (G.native_gyr) {
    run_sampled(
        rep, "derived gyration matches native", exec, bank,
        [&](std::uint64_t i) {
          const auto &x = bank.x(i), &y = bank.y(i), &z = bank.z(i);
          return !G.equal(G.derived_gyr(x, y, z), G.native_gyr(x, y, z));
        },
        [&](std::uint64_t i) {
          return std::vector<Element>{bank.x(i), bank.y(i), bank.z(i)};
        });
  } else {
    rep.skip("derived gyration vs native: no native gyration provided");
  }
  return rep;
}

}  // namespace

VerificationReport check_axioms(const GyrogroupContract& G, const Mode& mode,
                                Exec exec) {
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (!G.is_finite())
      throw std::invalid_argument("check_axioms: continuous carriers require sampled mode");
    return axioms_finite(G.table(), exec);
  }
  return axioms_sampled(G, std::get<Sampled>(mode), exec);
}

VerificationReport check_identities(const GyrogroupContract& G, const Mode& mode,
                                    Exec exec) {
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (!G.is_finite())
      throw std::invalid_argument(
          "check_identities: continuous carriers require sampled mode");
    return identities_finite(G.table(), exec);
  }
  return identities_sampled(G, std::get<Sampled>(mode), exec);
}

GroupVerdict is_group(const GyrogroupContract& G, const Mode& mode, Exec exec) {
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (!G.is_finite())
      throw std::invalid_argument("is_group: continuous carriers require sampled mode");
    const auto& g = G.table();
    const int n = g.size();
    const std::uint64_t n2 = std::uint64_t(n) * n, n3 = n2 * n;
    auto bad = find_first_violation(exec, n3, [&](std::uint64_t t) {
      const int x = int(t / n2), y = int((t / n) % n), z = int(t % n);
      return g.op(g.op(x, y), z) != g.op(x, g.op(y, z));
    });
    if (bad == n3) return {true, std::nullopt};
    return {false, std::array<Element, 3>{Element(int(bad / n2)),
                                          Element(int((bad / n) % n)),
                                          Element(int(bad % n))}};
  }
  const auto& sampled = std::get<Sampled>(mode);
  auto wit = nonassoc_witness(G, sampled.count, sampled.seed);
  if (wit) return {false, wit};
  return {true, std::nullopt};
}

VerificationReport check_homomorphism(const ElementMap& f, const GyrogroupContract& G1,
                                      const GyrogroupContract& G2, const Mode& mode,
                                      bool bijectivity, Exec exec) {
  VerificationReport rep;
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (!G1.is_finite())
      throw std::invalid_argument(
          "check_homomorphism: continuous carriers require sampled mode");
    const auto& g = G1.table();
    const int n = g.size();
    const std::uint64_t n2 = std::uint64_t(n) * n;
    // images precomputed serially: f is caller code and may not be thread-safe
    std::vector<Element> image(n);
    for (int i = 0; i < n; ++i) image[i] = f(Element(i));
    auto bad = find_first_violation(exec, n2, [&](std::uint64_t p) {
      const int x = int(p / n), y = int(p % n);
      return !G2.equal(image[g.op(x, y)], G2.add(image[x], image[y]));
    });
    if (bad == n2)
      rep.add_pass("homomorphism", true, n2);
    else
      rep.add_fail("homomorphism", true, n2, as_indices({int(bad / n), int(bad % n)}));
    if (bijectivity) {
      if (!G2.is_finite()) {
        rep.skip("bijectivity: codomain continuous, not checked");
      } else {
        const int m = G2.table().size();
        std::vector<char> seen(m, 0);
        bool ok = (n == m);
        int dup = -1;
        for (int i = 0; i < n && ok; ++i) {
          const int v = image[i].index();
          if (v < 0 || v >= m || seen[v]++) {
            ok = false;
            dup = i;
          }
        }
        if (ok)
          rep.add_pass("bijective (automorphism candidate)", true, n);
        else
          rep.add_fail("bijective (automorphism candidate)", true, n,
                       dup >= 0 ? as_indices({dup}) : std::vector<Element>{});
      }
    }
    return rep;
  }
  const auto& sampled = std::get<Sampled>(mode);
  auto xs = G1.draw(2 * sampled.count, sampled.seed);
  auto bad = find_first_violation(exec, sampled.count, [&](std::uint64_t i) {
    const auto &x = xs[2 * i], &y = xs[2 * i + 1];
    return !G2.equal(f(G1.add(x, y)), G2.add(f(x), f(y)));
  });
  if (bad == sampled.count)
    rep.add_pass("homomorphism", false, sampled.count);
  else
    rep.add_fail("homomorphism", false, sampled.count, {xs[2 * bad], xs[2 * bad + 1]});
  if (bijectivity) rep.skip("bijectivity: not checked in sampled mode");
  return rep;
}

std::optional<std::array<Element, 3>> nonassoc_witness(const GyrogroupContract& G,
                                                       std::uint64_t budget,
                                                       std::uint64_t seed) {
  auto violates = [&](const Element& x, const Element& y, const Element& z) {
    return !G.equal(G.add(G.add(x, y), z), G.add(x, G.add(y, z)));
  };
  if (G.is_finite()) {
    const auto verdict = is_group(G, Exhaustive{});
    if (verdict.group) return std::nullopt;
    return verdict.witness;
  }
  for (const auto& probe : G.probe_triples)
    if (violates(probe[0], probe[1], probe[2])) return probe;
  auto xs = G.draw(3 * budget, seed);
  for (std::uint64_t i = 0; i < budget; ++i) {
    const auto &x = xs[3 * i], &y = xs[3 * i + 1], &z = xs[3 * i + 2];
    if (violates(x, y, z)) return std::array<Element, 3>{x, y, z};
  }
  return std::nullopt;
}

}  // namespace gyrolab
