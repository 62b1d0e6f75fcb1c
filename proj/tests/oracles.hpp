#pragma once

// Test-only oracles. Each one recomputes an expected value through a route
// independent of the library code it is used to check.

#include <complex>
#include <cstdint>
#include <vector>

#include "gyrolab/finite.hpp"
#include "gyrolab/subset.hpp"
#include "gyrolab/topology.hpp"

namespace oracle {

inline std::complex<double> mobius_add(std::complex<double> a,
                                       std::complex<double> b) {
  return (a + b) / (1.0 + std::conj(a) * b);
}

inline std::complex<double> mobius_gyr(std::complex<double> a,
                                       std::complex<double> b,
                                       std::complex<double> c) {
  return ((1.0 + a * std::conj(b)) / (1.0 + std::conj(a) * b)) * c;
}

// Derived gyration straight from the cancellation formula.
inline std::complex<double> mobius_gyr_derived(std::complex<double> a,
                                               std::complex<double> b,
                                               std::complex<double> c) {
  const auto ab = mobius_add(a, b);
  return mobius_add(-ab, mobius_add(a, mobius_add(b, c)));
}

inline double einstein_collinear(double u, double v, double c) {
  return (u + v) / (1.0 + u * v / (c * c));
}

// Subgyrogroup criterion on a bitmask, written against the raw table.
inline bool closed_mask(const gyrolab::FiniteGyrogroup& g, std::uint64_t mask) {
  const int n = g.size();
  for (int a = 0; a < n; ++a) {
    if (!((mask >> a) & 1u)) continue;
    if (!((mask >> g.inv(a)) & 1u)) return false;
    for (int b = 0; b < n; ++b) {
      if (!((mask >> b) & 1u)) continue;
      if (!((mask >> g.op(a, b)) & 1u)) return false;
    }
  }
  return true;
}

// Least subgyrogroup containing X: full subset enumeration (n <= ~14),
// intersecting every closed superset of X.
inline gyrolab::Subset min_subgyro_containing(const gyrolab::FiniteGyrogroup& g,
                                              const gyrolab::Subset& X) {
  const int n = g.size();
  const std::uint64_t xmask = X.to_mask();
  std::uint64_t acc = (n == 64) ? ~0ull : ((1ull << n) - 1);
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    if ((xmask & ~mask) || !(mask & 1ull)) continue;  // must contain X and 0
    if (closed_mask(g, mask)) acc &= mask;
  }
  return gyrolab::Subset::from_mask(n, acc);
}

// Exhaustive minimal covering size over all subsets A.
inline int min_cover_size(const gyrolab::FiniteGyrogroup& g,
                          const gyrolab::Subset& U) {
  const int n = g.size();
  const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
  const std::uint64_t umask = U.to_mask();
  int best = n + 1;
  for (std::uint64_t A = 1; A < (1ull << n); ++A) {
    std::uint64_t covered = 0;
    int size = 0;
    for (int a = 0; a < n; ++a) {
      if (!((A >> a) & 1u)) continue;
      ++size;
      for (int u = 0; u < n; ++u)
        if ((umask >> u) & 1u) covered |= 1ull << g.op(a, u);
    }
    if (covered == full && size < best) best = size;
  }
  return best;
}

// Interior and closure straight from the open-set list, ignoring minimal
// opens: largest open inside S, complement of the largest open avoiding S.
inline std::uint64_t interior_by_opens(const gyrolab::FiniteTopology& t,
                                       std::uint64_t s) {
  std::uint64_t acc = 0;
  for (auto o : t.opens())
    if (!(o & ~s)) acc |= o;
  return acc;
}

inline std::uint64_t closure_by_opens(const gyrolab::FiniteTopology& t,
                                      std::uint64_t s) {
  std::uint64_t avoid = 0;
  for (auto o : t.opens())
    if (!(o & s)) avoid |= o;
  return t.universe() & ~avoid;
}

}  // namespace oracle
