#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gyrolab/contract.hpp"
#include "gyrolab/finite.hpp"
#include "gyrolab/json.hpp"
#include "gyrolab/report.hpp"
#include "gyrolab/scan.hpp"
#include "gyrolab/subset.hpp"

namespace gyrolab {

struct SubgyroVerdict {
  bool ok = true;
  // For a closure failure the witness is the pair (a,b) with a(+)b outside H;
  // for an inverse failure it is (a,a).
  std::optional<std::pair<int, int>> witness;
};

// Subgyrogroup criterion: H nonempty, closed under inverse and operation.
SubgyroVerdict is_subgyrogroup(const FiniteGyrogroup& G, const Subset& H);

// gyr[a,h](H) = H for every a in G and h in H. Requires H to pass the
// subgyrogroup criterion first.
SubgyroVerdict is_L_subgyrogroup(const FiniteGyrogroup& G, const Subset& H);

// Least subgyrogroup containing X, via the doubling iteration
// Y0 = X u (-X) u {0}, Y_{i+1} = -(Y_i (+) Y_i) u (Y_i (+) Y_i).
Subset generate(const FiniteGyrogroup& G, const Subset& X);

// Continuous variant: closure by element lists, deduplicated under the
// tolerance. Throws if the working set exceeds budget without reaching a
// fixpoint (partial closure).
std::vector<Element> generate_elements(const GyrogroupContract& G,
                                       std::vector<Element> X,
                                       std::size_t budget = 4096);

// The increasing chain of generated subgyrogroups along an enumeration of the
// carrier, with its difference blocks.
struct CanonicalDecomposition {
  std::vector<int> enumeration;  // permutation of the carrier, enumeration[0] = 0
  std::vector<Subset> chain;     // G_0 c G_1 c ... c G_m = G, strictly increasing
  std::vector<Subset> blocks;    // H_a = G_a \ (union of earlier G_b)

  json to_json() const;
  static CanonicalDecomposition from_json(const json& j);
};

// Runs the chain construction: G_0 = <{g_0}>; at every later step the least
// enumerated element outside the union so far is adjoined and the generated
// subgyrogroup recorded; stops when the union reaches the carrier.
// Default enumeration is carrier index order.
CanonicalDecomposition canonical_decomposition(const FiniteGyrogroup& G,
                                               std::vector<int> enumeration = {});

// Exhaustive verification of the decomposition properties that survive at
// finite scale: chain members are subgyrogroups, inclusion is strict, blocks
// partition the carrier and reassemble the chain, later blocks absorb earlier
// elements on both sides, and every block is symmetric. The two cardinality
// properties are infinite-cardinal statements and are recorded as skipped.
VerificationReport verify_decomposition(const FiniteGyrogroup& G,
                                        const CanonicalDecomposition& dec);

enum class Side { left, right };
Subset translate(const FiniteGyrogroup& G, int g, const Subset& S,
                 Side side = Side::left);

struct TranslateDefect {
  Subset defect;        // (h (+) (g (+) H_A)) \ H_A
  bool contained;       // defect inside G_max(alpha,beta) for the blocks of g,h
};
TranslateDefect translate_defect(const FiniteGyrogroup& G,
                                 const CanonicalDecomposition& dec,
                                 const Subset& block_indices, int g, int h);

struct CoverCertificate {
  Subset U;
  Subset A;
  int size = 0;
  bool exact = true;  // greedy fallback above the exact-solver cap clears this
  json to_json() const;
};

// Minimal-size A with A (+) U = G. Exact for |G| <= exact_cap via dynamic
// programming over covered masks; greedy with exact=false beyond that.
// Requires 0 in U. The certificate is re-verified before it is returned.
CoverCertificate covering_number(const FiniteGyrogroup& G, const Subset& U,
                                 int exact_cap = 20);

// The subgyrogroup-boundedness construction: given a cover B (+) V = G and a
// window (V (+) V) n H c W c H, picks one representative of (c (+) V) n H per
// useful c in B (least index) and returns A with A (+) W = H. Precondition
// violations throw with the failing set named; the postcondition is verified
// exhaustively.
Subset bounded_cover_for_sub(const FiniteGyrogroup& G, const Subset& H,
                             const Subset& B, const Subset& V, const Subset& W);

// Greedy-maximal V-disjoint set: scans the carrier in index order and keeps x
// whenever x (+) V misses every kept translate. For symmetric gyration-stable
// V this is the covering skeleton: A (+) (V (+) V) = G.
Subset maximal_disjoint_set(const FiniteGyrogroup& G, const Subset& V);

struct InvarianceVerdict {
  bool invariant = true;
  std::optional<std::pair<int, int>> witness;  // (x,y) with gyr[x,y](U) != U
};
InvarianceVerdict gyr_invariant_set(const FiniteGyrogroup& G, const Subset& U,
                                    Exec exec = Exec::parallel);

// Sampled continuous variant: gyrations of sampled pairs applied to the
// member list; set equality is nearest-member matching under the tolerance.
struct ElementInvarianceVerdict {
  bool invariant = true;
  std::vector<Element> witness;  // (x, y, u) with gyr[x,y](u) far from U
};
ElementInvarianceVerdict gyr_invariant_set(const GyrogroupContract& G,
                                           const std::vector<Element>& U,
                                           const Sampled& mode);

Subset symmetrize(const FiniteGyrogroup& G, const Subset& U);

struct TopoGyroModel;  // topology.hpp

struct OpenLSubgyro {
  Subset H;
  VerificationReport report;
};
// Doubling closure H_0 = U, H_{n+1} = -(H_n (+) H_n) u (H_n (+) H_n) run to
// its fixpoint, verified to be an open gyration-stable subgyrogroup.
// Preconditions: U open, 0 in U, U gyration-stable.
OpenLSubgyro open_L_subgyrogroup(const TopoGyroModel& model, const Subset& U);

}  // namespace gyrolab
