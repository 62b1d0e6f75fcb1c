#include "gyrolab/topology.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gyrolab {

namespace {

void check_n(int n) {
  if (n <= 0 || n > 64)
    throw std::invalid_argument("FiniteTopology: carrier size must be in 1..64");
}

void check_bound(int n, int bound, const char* who) {
  if (n > bound)
    throw std::invalid_argument(std::string(who) + ": carrier size " +
                                std::to_string(n) + " exceeds bound " +
                                std::to_string(bound));
}

Subset to_subset(int n, std::uint64_t mask) { return Subset::from_mask(n, mask); }

}  // namespace

void FiniteTopology::precompute() {
  full_ = n_ == 64 ? ~0ull : ((1ull << n_) - 1);
  minimal_.assign(n_, full_);
  for (int x = 0; x < n_; ++x)
    for (auto o : opens_)
      if ((o >> x) & 1u) minimal_[x] &= o;
}

FiniteTopology FiniteTopology::from_opens(int n, std::vector<std::uint64_t> opens) {
  check_n(n);
  FiniteTopology t;
  t.n_ = n;
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  t.opens_ = std::move(opens);
  t.precompute();
  for (auto o : t.opens_)
    if (o & ~t.full_)
      throw std::invalid_argument("FiniteTopology: open set exceeds carrier");
  std::unordered_set<std::uint64_t> members(t.opens_.begin(), t.opens_.end());
  if (!members.count(0) || !members.count(t.full_))
    throw std::invalid_argument("FiniteTopology: empty set and carrier must be open");
  for (int x = 0; x < n; ++x)
    if (!members.count(t.minimal_[x]))
      throw std::invalid_argument(
          "FiniteTopology: not intersection-closed (minimal open at " +
          std::to_string(x) + " is missing)");
  if (n <= 22) {
    // exact cross-check: the family must be precisely the up-sets of the
    // minimal-open preorder
    const std::uint64_t lim = 1ull << n;
    for (std::uint64_t m = 0; m < lim; ++m) {
      bool upset = true;
      for (int x = 0; x < n && upset; ++x)
        if (((m >> x) & 1u) && (t.minimal_[x] & ~m)) upset = false;
      if (upset != (members.count(m) != 0))
        throw std::invalid_argument(
            "FiniteTopology: family not closed under union/intersection (offending "
            "set " + to_subset(n, m).str() + ")");
    }
  } else {
    if (t.opens_.size() > 8192)
      throw std::invalid_argument(
          "FiniteTopology: family too large to validate at this carrier size");
    for (auto a : t.opens_)
      for (auto b : t.opens_) {
        if (!members.count(a | b))
          throw std::invalid_argument("FiniteTopology: not union-closed");
        if (!members.count(a & b))
          throw std::invalid_argument("FiniteTopology: not intersection-closed");
      }
  }
  return t;
}

FiniteTopology FiniteTopology::generate_from_subbasis(
    int n, const std::vector<std::uint64_t>& sets) {
  check_n(n);
  if (n > 22)
    throw std::invalid_argument("generate_from_subbasis: carrier size exceeds 22");
  FiniteTopology t;
  t.n_ = n;
  t.full_ = n == 64 ? ~0ull : ((1ull << n) - 1);
  t.minimal_.assign(n, t.full_);
  for (int x = 0; x < n; ++x)
    for (auto s : sets)
      if ((s >> x) & 1u) t.minimal_[x] &= s;
  const std::uint64_t lim = 1ull << n;
  for (std::uint64_t m = 0; m < lim; ++m) {
    bool upset = true;
    for (int x = 0; x < n && upset; ++x)
      if (((m >> x) & 1u) && (t.minimal_[x] & ~m)) upset = false;
    if (upset) t.opens_.push_back(m);
  }
  return t;
}

FiniteTopology FiniteTopology::discrete(int n) {
  check_n(n);
  if (n > 20) throw std::invalid_argument("discrete: carrier size exceeds 20");
  FiniteTopology t;
  t.n_ = n;
  t.full_ = (n == 64) ? ~0ull : ((1ull << n) - 1);
  t.opens_.resize(std::size_t(1) << n);
  for (std::uint64_t m = 0; m < t.opens_.size(); ++m) t.opens_[m] = m;
  t.minimal_.resize(n);
  for (int x = 0; x < n; ++x) t.minimal_[x] = 1ull << x;
  return t;
}

FiniteTopology FiniteTopology::indiscrete(int n) {
  check_n(n);
  FiniteTopology t;
  t.n_ = n;
  t.full_ = (n == 64) ? ~0ull : ((1ull << n) - 1);
  t.opens_ = {0, t.full_};
  t.minimal_.assign(n, t.full_);
  return t;
}

FiniteTopology FiniteTopology::sierpinski() {
  FiniteTopology t;
  t.n_ = 2;
  t.full_ = 0b11;
  t.opens_ = {0b00, 0b01, 0b11};
  t.minimal_ = {0b01, 0b11};
  return t;
}

FiniteTopology FiniteTopology::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::uint64_t> opens;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    // trim
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    if (n < 0) {
      try {
        n = std::stoi(token);
      } catch (const std::exception&) {
        throw std::runtime_error(".topo: bad carrier size on line " +
                                 std::to_string(lineno));
      }
      check_n(n);
      continue;
    }
    try {
      opens.push_back(Subset::parse(n, token).to_mask());
    } catch (const std::exception& e) {
      throw std::runtime_error(".topo: line " + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  if (n < 0) throw std::runtime_error(".topo: empty input");
  return from_opens(n, std::move(opens));
}

FiniteTopology FiniteTopology::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

std::string FiniteTopology::serialize() const {
  std::ostringstream os;
  os << n_ << "\n";
  for (auto o : opens_) {
    if (o == 0) {
      os << "-\n";
      continue;
    }
    bool first = true;
    for (int x = 0; x < n_; ++x)
      if ((o >> x) & 1u) {
        os << (first ? "" : ",") << x;
        first = false;
      }
    os << "\n";
  }
  return os.str();
}

bool FiniteTopology::is_open(std::uint64_t s) const {
  if (s & ~full_) return false;
  for (int x = 0; x < n_; ++x)
    if (((s >> x) & 1u) && (minimal_[x] & ~s)) return false;
  return true;
}

std::uint64_t FiniteTopology::interior(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x)
    if (!(minimal_[x] & ~s)) out |= 1ull << x;
  return out;
}

std::uint64_t FiniteTopology::closure(std::uint64_t s) const {
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x)
    if (minimal_[x] & s) out |= 1ull << x;
  return out;
}

bool FiniteTopology::is_dense(std::uint64_t s) const {
  for (int x = 0; x < n_; ++x)
    if (!(minimal_[x] & s)) return false;
  return true;
}

bool FiniteTopology::is_nowhere_dense(std::uint64_t s) const {
  return interior(closure(s)) == 0;
}

SubmaximalResult is_submaximal(const FiniteTopology& t, int bound, Exec exec) {
  check_bound(t.n(), bound, "is_submaximal");
  const std::uint64_t lim = 1ull << t.n();
  auto bad = find_first_violation(exec, lim, [&](std::uint64_t m) {
    return t.is_dense(m) && !t.is_open(m);
  });
  if (bad == lim) return {};
  return {false, to_subset(t.n(), bad)};
}

MaximalResult is_maximal(const FiniteTopology& t, int bound) {
  check_bound(t.n(), bound, "is_maximal");
  std::uint64_t isolated = 0;
  for (int x = 0; x < t.n(); ++x)
    if (t.minimal_open(x) == (1ull << x)) isolated |= 1ull << x;
  if (isolated) {
    return {false, "not applicable (isolated points exist)",
            to_subset(t.n(), isolated)};
  }
  const std::uint64_t lim = 1ull << t.n();
  for (std::uint64_t a = 0; a < lim; ++a) {
    if (t.is_open(a)) continue;
    // minimal opens of the refinement by a: M_x n a for x in a, M_x otherwise
    bool gains_isolated = false;
    for (int x = 0; x < t.n() && !gains_isolated; ++x)
      if (((a >> x) & 1u) && (t.minimal_open(x) & a) == (1ull << x))
        gains_isolated = true;
    if (!gains_isolated)
      return {false, "refinement without isolated points", to_subset(t.n(), a)};
  }
  return {true, "", std::nullopt};
}

IrresolvableResult is_irresolvable(const FiniteTopology& t, int bound, Exec exec) {
  check_bound(t.n(), bound, "is_irresolvable");
  const std::uint64_t lim = 1ull << t.n();
  const std::uint64_t full = t.universe();
  auto bad = find_first_violation(exec, lim, [&](std::uint64_t m) {
    return t.is_dense(m) && t.is_dense(full & ~m);
  });
  if (bad == lim) return {};
  return {false, std::pair{to_subset(t.n(), bad), to_subset(t.n(), full & ~bad)}};
}

DenseFamilyResult dense_family_check(const FiniteTopology& t,
                                     const std::vector<Subset>& family, int bound) {
  check_bound(t.n(), bound, "dense_family_check");
  if (family.empty())
    throw std::invalid_argument("dense_family_check: family must be nonempty");
  DenseFamilyResult res;
  std::unordered_set<std::uint64_t> members;
  for (const auto& f : family) {
    if (f.universe() != t.n())
      throw std::invalid_argument("dense_family_check: universe mismatch");
    members.insert(f.to_mask());
  }
  for (const auto& f : family)
    if (!t.is_dense(f.to_mask()))
      return {false, false, "member not dense", f};
  for (const auto& a : family)
    for (const auto& b : family) {
      const auto meet = a.to_mask() & b.to_mask();
      if (!members.count(meet))
        return {false, false, "intersection escapes the family",
                to_subset(t.n(), meet)};
    }
  const std::uint64_t lim = 1ull << t.n();
  for (std::uint64_t m = 0; m < lim; ++m) {
    if (members.count(m)) continue;
    for (const auto& f : family)
      if (!(f.to_mask() & ~m))
        return {false, false, "superset of a member missing", to_subset(t.n(), m)};
  }
  res.is_filter = true;
  // maximality: no dense set outside the family meets every member densely
  for (std::uint64_t m = 0; m < lim; ++m) {
    if (members.count(m) || !t.is_dense(m)) continue;
    bool compatible = true;
    for (const auto& f : family)
      if (!t.is_dense(m & f.to_mask())) {
        compatible = false;
        break;
      }
    if (compatible) {
      res.is_ultrafilter = false;
      res.note = "extendable by a dense set";
      res.witness = to_subset(t.n(), m);
      return res;
    }
  }
  res.is_ultrafilter = true;
  return res;
}

DispersionCharacter dispersion_character(const FiniteTopology& t) {
  DispersionCharacter d;
  d.per_point.resize(t.n());
  d.global = t.n();
  for (int x = 0; x < t.n(); ++x) {
    d.per_point[x] = std::popcount(t.minimal_open(x));
    d.global = std::min(d.global, d.per_point[x]);
  }
  return d;
}

namespace {
// Largest pairwise-disjoint subfamily, branch and bound with a
// remaining-count cut.
void max_disjoint(const std::vector<std::uint64_t>& sets, std::size_t i,
                  std::uint64_t occupied, int count, int& best) {
  best = std::max(best, count);
  if (i == sets.size()) return;
  if (count + static_cast<int>(sets.size() - i) <= best) return;
  if (!(sets[i] & occupied))
    max_disjoint(sets, i + 1, occupied | sets[i], count + 1, best);
  max_disjoint(sets, i + 1, occupied, count, best);
}
}  // namespace

int cellularity(const FiniteTopology& t) {
  std::vector<std::uint64_t> minimals(t.n());
  for (int x = 0; x < t.n(); ++x) minimals[x] = t.minimal_open(x);
  std::sort(minimals.begin(), minimals.end());
  minimals.erase(std::unique(minimals.begin(), minimals.end()), minimals.end());
  int best = 0;
  max_disjoint(minimals, 0, 0, 0, best);
  return best;
}

DiscreteFamilyResult is_discrete_family(const FiniteTopology& t,
                                        const std::vector<Subset>& family) {
  for (int x = 0; x < t.n(); ++x) {
    int hit = -1;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].universe() != t.n())
        throw std::invalid_argument("is_discrete_family: universe mismatch");
      if (t.minimal_open(x) & family[i].to_mask()) {
        if (hit >= 0) return {false, x, std::pair{hit, int(i)}};
        hit = int(i);
      }
    }
  }
  return {};
}

CwHausdorffResult is_collectionwise_hausdorff(const FiniteTopology& t, int bound,
                                              Exec exec) {
  check_bound(t.n(), bound, "is_collectionwise_hausdorff");
  const int n = t.n();
  const std::uint64_t lim = 1ull << n;
  auto bad = find_first_violation(exec, lim, [&](std::uint64_t A) {
    // discrete subset: every minimal open contains at most one point of A
    for (int x = 0; x < n; ++x)
      if (std::popcount(t.minimal_open(x) & A) > 1) return false;
    // separation by minimal opens must be a discrete family
    for (int x = 0; x < n; ++x) {
      int hits = 0;
      for (int p = 0; p < n; ++p) {
        if (!((A >> p) & 1u)) continue;
        if (t.minimal_open(x) & t.minimal_open(p)) {
          if (++hits > 1) return true;
        }
      }
    }
    return false;
  });
  if (bad == lim) return {};
  return {false, to_subset(n, bad)};
}

HausdorffResult is_hausdorff(const FiniteTopology& t) {
  for (int x = 0; x < t.n(); ++x)
    for (int y = x + 1; y < t.n(); ++y)
      if (t.minimal_open(x) & t.minimal_open(y)) return {false, std::pair{x, y}};
  return {};
}

Subset isolated_points(const FiniteTopology& t) {
  Subset out(t.n());
  for (int x = 0; x < t.n(); ++x)
    if (t.minimal_open(x) == (1ull << x)) out.set(x);
  return out;
}

TopoGyroModel make_topo_model(std::shared_ptr<const FiniteGyrogroup> gyro,
                              FiniteTopology topology,
                              std::optional<std::vector<std::uint64_t>> base) {
  if (!gyro) throw std::invalid_argument("make_topo_model: null gyrogroup");
  if (gyro->size() != topology.n())
    throw std::invalid_argument("make_topo_model: carrier sizes differ");
  if (base) {
    for (auto b : *base) {
      if (!topology.is_open(b))
        throw std::invalid_argument("make_topo_model: base member not open");
      if (!(b & 1ull))
        throw std::invalid_argument("make_topo_model: base member misses 0");
    }
    // base generates the neighborhood filter at 0
    for (auto o : topology.opens()) {
      if (!(o & 1ull)) continue;
      bool contained = false;
      for (auto b : *base)
        if (!(b & ~o)) {
          contained = true;
          break;
        }
      if (!contained)
        throw std::invalid_argument(
            "make_topo_model: base does not generate the filter at 0");
    }
  }
  return {std::move(gyro), std::move(topology), std::move(base)};
}

json ContinuityClassification::to_json() const {
  json bases = json::array();
  for (auto b : base_used) bases.push_back(Subset::from_mask(64, b).to_indices());
  return json{{"left", left},       {"right", right},       {"inverse", inverse},
              {"joint", joint},     {"strongly", strongly}, {"witnesses", witnesses},
              {"base", bases}};
}

ContinuityClassification classify_continuity(const TopoGyroModel& model) {
  const auto& G = *model.gyro;
  const auto& t = model.topology;
  const int n = G.size();
  ContinuityClassification out;
  out.witnesses = json::object();

  auto translate_mask = [&](int g, std::uint64_t mask, bool left) {
    std::uint64_t r = 0;
    for (int x = 0; x < n; ++x)
      if ((mask >> x) & 1u) r |= 1ull << (left ? G.op(g, x) : G.op(x, g));
    return r;
  };

  bool all_singletons_open = true;
  for (int x = 0; x < n && all_singletons_open; ++x)
    if (t.minimal_open(x) != (1ull << x)) all_singletons_open = false;

  if (!all_singletons_open) {
    for (int g = 0; g < n && out.left; ++g)
      for (auto U : t.opens()) {
        if (!t.is_open(translate_mask(g, U, true))) {
          out.left = false;
          out.witnesses["left"] = json{{"g", g}, {"U", to_subset(n, U).to_indices()}};
          break;
        }
      }
    for (int g = 0; g < n && out.right; ++g)
      for (auto U : t.opens()) {
        if (!t.is_open(translate_mask(g, U, false))) {
          out.right = false;
          out.witnesses["right"] = json{{"g", g}, {"U", to_subset(n, U).to_indices()}};
          break;
        }
      }
    for (auto U : t.opens()) {
      std::uint64_t neg = 0;
      for (int x = 0; x < n; ++x)
        if ((U >> x) & 1u) neg |= 1ull << G.inv(x);
      if (!t.is_open(neg)) {
        out.inverse = false;
        out.witnesses["inverse"] = json{{"U", to_subset(n, U).to_indices()}};
        break;
      }
    }
    // joint continuity at (a,b): image of M_a x M_b inside M_{a(+)b}
    for (int a = 0; a < n && out.joint; ++a)
      for (int b = 0; b < n; ++b) {
        const std::uint64_t target = t.minimal_open(G.op(a, b));
        bool ok = true;
        const auto ma = t.minimal_open(a), mb = t.minimal_open(b);
        for (int u = 0; u < n && ok; ++u) {
          if (!((ma >> u) & 1u)) continue;
          for (int v = 0; v < n; ++v) {
            if (!((mb >> v) & 1u)) continue;
            if (!((target >> G.op(u, v)) & 1u)) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) {
          out.joint = false;
          out.witnesses["joint"] = json{{"a", a}, {"b", b}};
          break;
        }
      }
  }

  out.base_used = model.base ? *model.base
                             : std::vector<std::uint64_t>{t.minimal_open(0)};
  for (auto b : out.base_used) {
    const auto verdict = gyr_invariant_set(G, Subset::from_mask(n, b));
    if (!verdict.invariant) {
      out.strongly = false;
      out.witnesses["strongly"] = json{{"U", to_subset(n, b).to_indices()},
                                       {"x", verdict.witness->first},
                                       {"y", verdict.witness->second}};
      break;
    }
  }
  out.strongly = out.strongly && out.joint && out.inverse;
  return out;
}

XiFamily xi_family(const TopoGyroModel& model, const CanonicalDecomposition& dec) {
  const int k = static_cast<int>(dec.blocks.size());
  if (k > 20) throw std::invalid_argument("xi_family: more than 20 blocks");
  const auto& t = model.topology;
  const int n = t.n();
  XiFamily out;
  out.block_count = k;
  const std::uint64_t lim = 1ull << k;
  std::vector<char> member(lim, 0);
  for (std::uint64_t A = 0; A < lim; ++A) {
    std::uint64_t HA = 0;
    for (int i = 0; i < k; ++i)
      if ((A >> i) & 1u) HA |= dec.blocks[i].to_mask();
    if (t.interior(HA) != 0) {
      member[A] = 1;
      out.members.push_back(Subset::from_mask(k, A));
    }
  }
  for (std::uint64_t A = 0; A < lim && out.upward_closed; ++A) {
    if (!member[A]) continue;
    for (int i = 0; i < k; ++i)
      if (!((A >> i) & 1u) && !member[A | (1ull << i)]) {
        out.upward_closed = false;
        break;
      }
  }
  if (out.members.size() > 4096)
    throw std::invalid_argument("xi_family: family too large for closure checks");
  for (const auto& a : out.members) {
    for (const auto& b : out.members)
      if (!member[a.to_mask() & b.to_mask()]) {
        out.intersection_closed = false;
        break;
      }
    if (!out.intersection_closed) break;
  }
  (void)n;
  return out;
}

VerificationReport cover_by_nowhere_dense(const TopoGyroModel& model,
                                          const CanonicalDecomposition& dec,
                                          const std::vector<Subset>& index_sets) {
  const int k = static_cast<int>(dec.blocks.size());
  const auto& t = model.topology;
  const int n = t.n();
  Subset used(k);
  for (const auto& A : index_sets) {
    if (A.universe() != k)
      throw std::invalid_argument("cover_by_nowhere_dense: index set universe mismatch");
    used = used | A;
  }
  if (!used.is_full())
    throw std::invalid_argument("cover_by_nowhere_dense: index sets leave blocks uncovered");

  VerificationReport rep;
  std::uint64_t covered = 0;
  for (std::size_t i = 0; i < index_sets.size(); ++i) {
    std::uint64_t HA = 0;
    for (int b = index_sets[i].first(); b >= 0; b = index_sets[i].next(b))
      HA |= dec.blocks[b].to_mask();
    covered |= HA;
    const std::string tag = "H_A" + std::to_string(i + 1);
    if (t.is_closed(HA))
      rep.add_pass(tag + " closed", true, 1);
    else
      rep.add_fail(tag + " closed", true, 1, {}, to_subset(n, HA).str());
    if (t.is_nowhere_dense(HA))
      rep.add_pass(tag + " nowhere dense", true, 1);
    else
      rep.add_fail(tag + " nowhere dense", true, 1, {},
                   "interior of closure " +
                       to_subset(n, t.interior(t.closure(HA))).str());
  }
  if (covered == t.universe())
    rep.add_pass("union covers the carrier", true, 1);
  else
    rep.add_fail("union covers the carrier", true, 1, {},
                 to_subset(n, covered).str());
  return rep;
}

VerificationReport yl5_conditions(const FiniteTopology& t,
                                  const std::vector<Subset>& parts,
                                  const std::vector<std::uint64_t>& assignment) {
  const int n = t.n();
  if (static_cast<int>(assignment.size()) != n)
    throw std::invalid_argument("yl5_conditions: assignment must cover the carrier");
  for (const auto& H : parts) {
    if (H.universe() != n)
      throw std::invalid_argument("yl5_conditions: universe mismatch");
    for (int x = H.first(); x >= 0; x = H.next(x)) {
      if (assignment[x] == 0)
        throw std::invalid_argument("yl5_conditions: assignment missing point " +
                                    std::to_string(x));
      if (!((assignment[x] >> x) & 1u))
        throw std::invalid_argument("yl5_conditions: V_" + std::to_string(x) +
                                    " does not contain its point");
      if (!t.is_open(assignment[x]))
        throw std::invalid_argument("yl5_conditions: V_" + std::to_string(x) +
                                    " is not open");
    }
  }

  VerificationReport rep;
  {
    bool ok = true;
    std::vector<Element> wit;
    for (std::size_t i = 0; i < parts.size() && ok; ++i) {
      const auto mask = parts[i].to_mask();
      if (!t.is_closed(mask)) {
        ok = false;
        wit = {Element(int(i))};
        break;
      }
      for (int x = parts[i].first(); x >= 0; x = parts[i].next(x))
        if ((t.minimal_open(x) & mask) != (1ull << x)) {
          ok = false;
          wit = {Element(int(i)), Element(x)};
          break;
        }
    }
    if (ok)
      rep.add_pass("(1) parts closed and discrete as subspaces", true, parts.size());
    else
      rep.add_fail("(1) parts closed and discrete as subspaces", true, parts.size(),
                   wit);
  }
  {
    bool ok = true;
    std::vector<Element> wit;
    for (std::size_t i = 0; i < parts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        if (parts[i].intersects(parts[j])) {
          ok = false;
          wit = {Element(int(i)), Element(int(j))};
          break;
        }
    if (ok)
      rep.add_pass("(2) parts pairwise disjoint", true,
                   parts.size() * parts.size());
    else
      rep.add_fail("(2) parts pairwise disjoint", true, parts.size() * parts.size(),
                   wit);
  }
  {
    bool ok = true;
    std::vector<Element> wit;
    for (std::size_t i = 0; i < parts.size() && ok; ++i) {
      std::vector<Subset> family;
      for (int x = parts[i].first(); x >= 0; x = parts[i].next(x))
        family.push_back(to_subset(n, assignment[x]));
      const auto verdict = is_discrete_family(t, family);
      if (!verdict.discrete) {
        ok = false;
        wit = {Element(int(i)), Element(*verdict.point)};
      }
    }
    if (ok)
      rep.add_pass("(3) assignments form discrete families", true, parts.size());
    else
      rep.add_fail("(3) assignments form discrete families", true, parts.size(), wit);
  }
  return rep;
}

json property_report(const FiniteTopology& t, int bound, const TopoGyroModel* model) {
  json entries = json::array();
  auto push = [&](const std::string& property, json verdict, json witness,
                  bool exhaustive) {
    entries.push_back(json{{"property", property},
                           {"verdict", std::move(verdict)},
                           {"witness", std::move(witness)},
                           {"exhaustive", exhaustive},
                           {"bound", bound}});
  };

  {
    const auto r = is_submaximal(t, bound);
    push("submaximal", r.submaximal,
         r.witness ? json(r.witness->to_indices()) : json(nullptr), true);
  }
  {
    const auto r = is_maximal(t, bound);
    json verdict = r.maximal;
    json witness = r.witness ? json(r.witness->to_indices()) : json(nullptr);
    if (!r.note.empty()) verdict = json{{"value", r.maximal}, {"note", r.note}};
    push("maximal", std::move(verdict), std::move(witness), true);
  }
  {
    const auto r = is_irresolvable(t, bound);
    push("irresolvable", r.irresolvable,
         r.witness ? json{r.witness->first.to_indices(),
                          r.witness->second.to_indices()}
                   : json(nullptr),
         true);
  }
  {
    const auto r = is_hausdorff(t);
    push("hausdorff", r.hausdorff,
         r.witness ? json{r.witness->first, r.witness->second} : json(nullptr), true);
  }
  {
    const auto r = is_collectionwise_hausdorff(t, bound);
    push("collectionwise_hausdorff", r.collectionwise_hausdorff,
         r.witness ? json(r.witness->to_indices()) : json(nullptr), true);
  }
  push("isolated_points", isolated_points(t).to_indices(), nullptr, true);
  {
    const auto d = dispersion_character(t);
    push("dispersion_character", json{{"per_point", d.per_point}, {"global", d.global}},
         nullptr, true);
  }
  push("cellularity", cellularity(t), nullptr, true);
  if (model) {
    const auto c = classify_continuity(*model);
    push("continuity", c.to_json(), nullptr, true);
  }
  return json{{"n", t.n()}, {"open_sets", t.opens().size()}, {"properties", entries}};
}

}  // namespace gyrolab
