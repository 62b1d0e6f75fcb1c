#pragma once

#include <complex>

#include "gyrolab/contract.hpp"
#include "gyrolab/element.hpp"

namespace gyrolab {

// a (+) b = (a + b) / (1 + conj(a) b) on the open unit disk.
MobiusPoint mobius_add(const MobiusPoint& a, const MobiusPoint& b);
MobiusPoint mobius_neg(const MobiusPoint& a);

// Unimodular rotation factor (1 + a conj(b)) / (1 + conj(a) b).
std::complex<double> mobius_gyr_factor(const MobiusPoint& a, const MobiusPoint& b);
MobiusPoint mobius_gyr(const MobiusPoint& a, const MobiusPoint& b, const MobiusPoint& c);

// Contract over the disk with the rotation form as native gyration and the
// known associativity-failure probe (1/2, i/2, -1/2) preloaded. Samples are
// drawn uniformly from the disk of radius sample_radius.
GyrogroupContract mobius_contract(Tolerance tol = {}, double sample_radius = 0.9);

}  // namespace gyrolab
