#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "gyrolab/contract.hpp"
#include "gyrolab/report.hpp"
#include "gyrolab/scan.hpp"

namespace gyrolab {

using ElementMap = std::function<Element(const Element&)>;

// Axioms G1-G4 with the gyration derived from the operation. Finite carriers
// support exhaustive mode (including uniqueness scans for identity and
// inverses); continuous carriers require sampled mode, where uniqueness and
// bijectivity are analytically true and deliberately not sampled.
VerificationReport check_axioms(const GyrogroupContract& G, const Mode& mode,
                                Exec exec = Exec::parallel);

// Cancellation laws and, when a native gyration exists, its agreement with
// the derived one.
VerificationReport check_identities(const GyrogroupContract& G, const Mode& mode,
                                    Exec exec = Exec::parallel);

struct GroupVerdict {
  bool group = true;  // associativity held on every tested triple
  std::optional<std::array<Element, 3>> witness;
};
GroupVerdict is_group(const GyrogroupContract& G, const Mode& mode,
                      Exec exec = Exec::parallel);

// f(x (+)1 y) = f(x) (+)2 f(y) on tested pairs; with bijectivity=true the
// report also carries an automorphism verdict (finite carriers only).
VerificationReport check_homomorphism(const ElementMap& f,
                                      const GyrogroupContract& G1,
                                      const GyrogroupContract& G2, const Mode& mode,
                                      bool bijectivity = false,
                                      Exec exec = Exec::parallel);

// First associativity violation: exhaustive scan on finite carriers, probe
// triples followed by seeded random triples (up to budget) on continuous ones.
std::optional<std::array<Element, 3>> nonassoc_witness(const GyrogroupContract& G,
                                                       std::uint64_t budget = 100000,
                                                       std::uint64_t seed = 0);

}  // namespace gyrolab
