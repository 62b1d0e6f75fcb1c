#pragma once

#include <vector>

#include "gyrolab/contract.hpp"

namespace gyrolab {

// Coordinatewise product of gyrogroups. All-finite products within the
// tabulation cap are materialized as a single Cayley table (so exhaustive
// checks apply); anything else becomes a tuple-valued contract restricted to
// sampled verification. Exhaustive axiom suites are O(n^3)-O(n^4), hence the
// small default caps.
GyrogroupContract product(std::vector<GyrogroupContract> factors,
                          std::size_t max_arity = 4, int max_tabulated = 4096);

}  // namespace gyrolab
