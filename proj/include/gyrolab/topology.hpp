#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gyrolab/finite.hpp"
#include "gyrolab/json.hpp"
#include "gyrolab/report.hpp"
#include "gyrolab/scan.hpp"
#include "gyrolab/subgyro.hpp"
#include "gyrolab/subset.hpp"

namespace gyrolab {

// Exact finite topology on {0..n-1}, n <= 64, open sets as bitmasks. The
// workhorse is the minimal open set M_x (intersection of all opens containing
// x): membership, interior, closure, density, separation and continuity all
// reduce to minimal-open computations, which are exact on finite carriers.
class FiniteTopology {
 public:
  // Validates: empty and full sets present, family closed under pairwise
  // union and intersection. Input is deduplicated and sorted.
  static FiniteTopology from_opens(int n, std::vector<std::uint64_t> opens);
  // Closes a family under finite intersections and arbitrary unions.
  static FiniteTopology generate_from_subbasis(int n,
                                               const std::vector<std::uint64_t>& sets);

  static FiniteTopology discrete(int n);
  static FiniteTopology indiscrete(int n);
  static FiniteTopology sierpinski();  // {0} open, {1} not

  static FiniteTopology parse(std::string_view text);  // .topo
  static FiniteTopology load_file(const std::string& path);
  std::string serialize() const;

  int n() const { return n_; }
  std::uint64_t universe() const { return full_; }
  const std::vector<std::uint64_t>& opens() const { return opens_; }
  std::uint64_t minimal_open(int x) const { return minimal_[x]; }

  bool is_open(std::uint64_t s) const;    // s is a union of minimal opens
  bool is_closed(std::uint64_t s) const { return is_open(full_ & ~s); }
  std::uint64_t interior(std::uint64_t s) const;
  std::uint64_t closure(std::uint64_t s) const;
  bool is_dense(std::uint64_t s) const;
  bool is_nowhere_dense(std::uint64_t s) const;  // interior(closure(s)) empty

 private:
  FiniteTopology() = default;
  void precompute();

  int n_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> opens_;
  std::vector<std::uint64_t> minimal_;
};

// ----- property checkers (2^n subset scans are capped by `bound`) -----

struct SubmaximalResult {
  bool submaximal = true;
  std::optional<Subset> witness;  // dense but not open
};
SubmaximalResult is_submaximal(const FiniteTopology& t, int bound = 20,
                               Exec exec = Exec::parallel);

struct MaximalResult {
  bool maximal = false;
  std::string note;
  std::optional<Subset> witness;  // refinement set whose extension stays isolated-point-free
};
// True iff the topology has no isolated point and every single-set refinement
// introduces one (single sets are exact: any strictly finer topology contains
// such a refinement, and isolated points persist under refinement).
MaximalResult is_maximal(const FiniteTopology& t, int bound = 20);

struct IrresolvableResult {
  bool irresolvable = true;
  std::optional<std::pair<Subset, Subset>> witness;  // two disjoint dense sets
};
IrresolvableResult is_irresolvable(const FiniteTopology& t, int bound = 20,
                                   Exec exec = Exec::parallel);

struct DenseFamilyResult {
  bool is_filter = false;
  bool is_ultrafilter = false;
  std::string note;
  std::optional<Subset> witness;
};
// Filter of dense subsets: all members dense, closed under pairwise
// intersection, upward closed. Ultrafilter: additionally no dense set outside
// the family meets every member in a dense set.
DenseFamilyResult dense_family_check(const FiniteTopology& t,
                                     const std::vector<Subset>& family,
                                     int bound = 20);

struct DispersionCharacter {
  std::vector<int> per_point;  // size of the minimal open at each point
  int global = 0;
};
DispersionCharacter dispersion_character(const FiniteTopology& t);

// Largest pairwise-disjoint family of nonempty opens; computed exactly over
// distinct minimal opens (any disjoint open family refines to them).
int cellularity(const FiniteTopology& t);

struct DiscreteFamilyResult {
  bool discrete = true;
  std::optional<int> point;                      // sees two members
  std::optional<std::pair<int, int>> members;    // their indices in the family
};
DiscreteFamilyResult is_discrete_family(const FiniteTopology& t,
                                        const std::vector<Subset>& family);

struct CwHausdorffResult {
  bool collectionwise_hausdorff = true;
  std::optional<Subset> witness;  // discrete subset that minimal opens fail to separate
};
CwHausdorffResult is_collectionwise_hausdorff(const FiniteTopology& t,
                                              int bound = 20,
                                              Exec exec = Exec::parallel);

struct HausdorffResult {
  bool hausdorff = true;
  std::optional<std::pair<int, int>> witness;
};
HausdorffResult is_hausdorff(const FiniteTopology& t);

Subset isolated_points(const FiniteTopology& t);

// ----- gyrogroup + topology models -----

struct TopoGyroModel {
  std::shared_ptr<const FiniteGyrogroup> gyro;
  FiniteTopology topology;
  // Candidate neighborhood base at 0. When absent, {M_0} is used; on finite
  // carriers the minimal open at 0 is a base by itself and is
  // gyration-stable iff some gyration-stable base exists.
  std::optional<std::vector<std::uint64_t>> base;
};

// Validates carrier sizes and the base invariants (members open, contain 0,
// and every open containing 0 contains a member).
TopoGyroModel make_topo_model(std::shared_ptr<const FiniteGyrogroup> gyro,
                              FiniteTopology topology,
                              std::optional<std::vector<std::uint64_t>> base = {});

struct ContinuityClassification {
  bool left = true, right = true, inverse = true, joint = true, strongly = true;
  json witnesses;                    // per-flag witness objects
  std::vector<std::uint64_t> base_used;
  json to_json() const;
};
ContinuityClassification classify_continuity(const TopoGyroModel& model);

struct XiFamily {
  int block_count = 0;
  std::vector<Subset> members;  // index sets A with interior(H_A) nonempty
  bool upward_closed = true;
  bool intersection_closed = true;
};
// xi = {A c block-indices : Int(H_A) != empty}. No ultrafilter claim is made;
// the finite instance only reports closure properties. Block count <= 20.
XiFamily xi_family(const TopoGyroModel& model, const CanonicalDecomposition& dec);

// Checks each H_{A_i} closed and nowhere dense and that the union covers the
// carrier. On a nonempty finite space the conjunction necessarily fails (the
// carrier has nonempty interior); the report says which clause fails.
VerificationReport cover_by_nowhere_dense(const TopoGyroModel& model,
                                          const CanonicalDecomposition& dec,
                                          const std::vector<Subset>& index_sets);

// Condition checker for the weak-separation lemma: every H_i closed and
// discrete as a subspace, the H_i pairwise disjoint, and each per-point open
// assignment a discrete family. The assignment must cover every point of
// every H_i.
VerificationReport yl5_conditions(const FiniteTopology& t,
                                  const std::vector<Subset>& parts,
                                  const std::vector<std::uint64_t>& assignment);

// Full property report for the CLI and acceptance suite.
json property_report(const FiniteTopology& t, int bound = 20,
                     const TopoGyroModel* model = nullptr);

}  // namespace gyrolab
