#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "gyrolab/element.hpp"
#include "gyrolab/finite.hpp"
#include "gyrolab/tolerance.hpp"

namespace gyrolab {

struct FiniteCarrier {
  std::shared_ptr<const FiniteGyrogroup> table;
};

struct ContinuousCarrier {
  std::string domain;  // description of the domain guard, for reports
  std::function<Element(std::mt19937_64&)> sample;
};

using Carrier = std::variant<FiniteCarrier, ContinuousCarrier>;

struct Exhaustive {};
// Sampled verification is only constructible with a seed: reproducibility is
// part of the contract, not an option.
struct Sampled {
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
};
using Mode = std::variant<Exhaustive, Sampled>;

bool is_sampled(const Mode& m);
std::string mode_str(const Mode& m);

// The abstract gyrogroup interface every checker operates against. Gyration
// is always derivable from the operation (Lemma-style: gyr[x,y](z) =
// (-(x(+)y)) (+) (x (+) (y (+) z))); a native gyration, when present, is an
// optimization that verification cross-checks against the derived one.
class GyrogroupContract {
 public:
  std::string name;
  Carrier carrier;
  Element zero;
  std::function<Element(const Element&, const Element&)> add;
  std::function<Element(const Element&)> neg;
  std::function<Element(const Element&, const Element&, const Element&)> native_gyr;
  // Curated triples known to stress associativity; searched before random ones.
  std::vector<std::array<Element, 3>> probe_triples;
  Tolerance tol;

  bool is_finite() const;
  const FiniteGyrogroup& table() const;  // throws std::logic_error if continuous

  bool equal(const Element& a, const Element& b) const {
    return elements_close(a, b, tol);
  }
  Element derived_gyr(const Element& x, const Element& y, const Element& z) const {
    return add(neg(add(x, y)), add(x, add(y, z)));
  }
  Element gyr(const Element& x, const Element& y, const Element& z) const {
    return native_gyr ? native_gyr(x, y, z) : derived_gyr(x, y, z);
  }

  // Deterministic sample vector: one serial RNG, so results do not depend on
  // thread count.
  std::vector<Element> draw(std::uint64_t count, std::uint64_t seed) const;
};

GyrogroupContract finite_contract(FiniteGyrogroup g, std::string name,
                                  Tolerance tol = {});
GyrogroupContract finite_contract(std::shared_ptr<const FiniteGyrogroup> g,
                                  std::string name, Tolerance tol = {});

}  // namespace gyrolab
