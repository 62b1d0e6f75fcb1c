#include "gyrolab/einstein.hpp"

#include <cmath>
#include <stdexcept>

namespace gyrolab {

double gamma_factor(const EinsteinVector& u) {
  const double c2 = u.c() * u.c();
  return 1.0 / std::sqrt(1.0 - u.dot(u) / c2);
}

EinsteinVector einstein_add(const EinsteinVector& u, const EinsteinVector& v) {
  if (u.c() != v.c())
    throw std::invalid_argument("einstein_add: operands carry different speed bounds");
  const double c2 = u.c() * u.c();
  const double uv = u.dot(v);
  const double gu = gamma_factor(u);
  const double lead = 1.0 / (1.0 + uv / c2);
  const double ucoef = 1.0 + (gu / (1.0 + gu)) * (uv / c2);
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i)
    out[i] = lead * (ucoef * u.v()[i] + v.v()[i] / gu);
  return EinsteinVector(out, u.c());
}

EinsteinVector einstein_neg(const EinsteinVector& u) {
  return EinsteinVector({-u.v()[0], -u.v()[1], -u.v()[2]}, u.c());
}

GyrogroupContract einstein_contract(double c, Tolerance tol, double sample_radius) {
  GyrogroupContract g;
  g.name = "einstein";
  g.tol = tol;
  g.zero = Element(EinsteinVector({0.0, 0.0, 0.0}, c));
  g.add = [](const Element& a, const Element& b) {
    return Element(einstein_add(a.einstein(), b.einstein()));
  };
  g.neg = [](const Element& a) { return Element(einstein_neg(a.einstein())); };
  ContinuousCarrier carrier;
  carrier.domain = "velocity ball of radius c=" + std::to_string(c) +
                   ", samples within " + std::to_string(sample_radius) + "c";
  carrier.sample = [c, sample_radius](std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::array<double, 3> d{gauss(rng), gauss(rng), gauss(rng)};
    double norm = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    if (norm == 0.0) {
      d = {1.0, 0.0, 0.0};
      norm = 1.0;
    }
    const double r = sample_radius * c * std::cbrt(unit(rng));
    for (auto& x : d) x *= r / norm;
    return Element(EinsteinVector(d, c));
  };
  g.carrier = std::move(carrier);
  return g;
}

}  // namespace gyrolab
