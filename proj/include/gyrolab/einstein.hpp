#pragma once

#include "gyrolab/contract.hpp"
#include "gyrolab/element.hpp"

namespace gyrolab {

// gamma_u = 1 / sqrt(1 - u.u / c^2)  (>= 1 inside the ball).
double gamma_factor(const EinsteinVector& u);

// Einstein velocity addition
//   u (+) v = (u + v/gamma_u + (gamma_u/(1+gamma_u)) (u.v)/c^2 u) / (1 + u.v/c^2).
// Operands must carry the same speed bound; mixed bounds are an error, not a
// conversion.
EinsteinVector einstein_add(const EinsteinVector& u, const EinsteinVector& v);
EinsteinVector einstein_neg(const EinsteinVector& u);

GyrogroupContract einstein_contract(double c = 1.0, Tolerance tol = {},
                                    double sample_radius = 0.9);

}  // namespace gyrolab
