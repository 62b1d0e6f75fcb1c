#include "gyrolab/mobius.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gyrolab {

namespace {
// Interior points keep |1 + conj(a) b| >= 1 - |a||b| > 0; anything smaller
// than this signals corrupted input rather than a legal operand pair.
constexpr double kDenominatorFloor = 1e-15;

std::complex<double> denominator(std::complex<double> a, std::complex<double> b) {
  const auto d = 1.0 + std::conj(a) * b;
  if (std::abs(d) < kDenominatorFloor)
    throw std::domain_error("mobius_add: degenerate denominator");
  return d;
}
}  // namespace

MobiusPoint mobius_add(const MobiusPoint& a, const MobiusPoint& b) {
  const auto za = a.value(), zb = b.value();
  return MobiusPoint((za + zb) / denominator(za, zb));
}

MobiusPoint mobius_neg(const MobiusPoint& a) { return MobiusPoint(-a.value()); }

std::complex<double> mobius_gyr_factor(const MobiusPoint& a, const MobiusPoint& b) {
  const auto za = a.value(), zb = b.value();
  return (1.0 + za * std::conj(zb)) / denominator(za, zb);
}

MobiusPoint mobius_gyr(const MobiusPoint& a, const MobiusPoint& b,
                       const MobiusPoint& c) {
  return MobiusPoint(mobius_gyr_factor(a, b) * c.value());
}

GyrogroupContract mobius_contract(Tolerance tol, double sample_radius) {
  GyrogroupContract g;
  g.name = "mobius";
  g.tol = tol;
  g.zero = Element(MobiusPoint());
  g.add = [](const Element& a, const Element& b) {
    return Element(mobius_add(a.mobius(), b.mobius()));
  };
  g.neg = [](const Element& a) { return Element(mobius_neg(a.mobius())); };
  g.native_gyr = [](const Element& a, const Element& b, const Element& c) {
    return Element(mobius_gyr(a.mobius(), b.mobius(), c.mobius()));
  };
  ContinuousCarrier carrier;
  carrier.domain = "complex open unit disk, samples within |z| <= " +
                   std::to_string(sample_radius);
  carrier.sample = [sample_radius](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = sample_radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return Element(MobiusPoint(r * std::cos(theta), r * std::sin(theta)));
  };
  g.carrier = std::move(carrier);
  g.probe_triples.push_back({Element(MobiusPoint(0.5, 0.0)),
                             Element(MobiusPoint(0.0, 0.5)),
                             Element(MobiusPoint(-0.5, 0.0))});
  return g;
}

}  // namespace gyrolab
