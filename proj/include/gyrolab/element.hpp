#pragma once

#include <array>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "gyrolab/json.hpp"
#include "gyrolab/tolerance.hpp"

namespace gyrolab {

// Constructors of continuous-domain elements reject points this close to the
// boundary; it keeps Mobius/Einstein denominators bounded away from zero.
inline constexpr double kDomainGuard = 1e-12;

// A point of the open complex unit disk.
class MobiusPoint {
 public:
  MobiusPoint() : z_(0.0, 0.0) {}
  explicit MobiusPoint(std::complex<double> z);
  MobiusPoint(double re, double im) : MobiusPoint(std::complex<double>(re, im)) {}

  std::complex<double> value() const { return z_; }
  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }
  double modulus() const { return std::abs(z_); }

 private:
  std::complex<double> z_;
};

// A velocity strictly inside the ball of radius c (units of c carried along).
class EinsteinVector {
 public:
  EinsteinVector() : v_{0.0, 0.0, 0.0} {}
  explicit EinsteinVector(std::array<double, 3> v, double c = 1.0);

  const std::array<double, 3>& v() const { return v_; }
  double c() const { return c_; }
  double norm() const;
  double dot(const EinsteinVector& other) const;

 private:
  std::array<double, 3> v_;
  double c_ = 1.0;
};

class Element;
using Tuple = std::vector<Element>;

// Type-erased carrier element: a finite-carrier index, a Mobius point, an
// Einstein vector, or a tuple of coordinates in a product gyrogroup.
class Element {
 public:
  using Value = std::variant<int, MobiusPoint, EinsteinVector, Tuple>;

  Element() : v_(0) {}
  Element(int index) : v_(index) {}
  Element(MobiusPoint p) : v_(p) {}
  Element(EinsteinVector v) : v_(v) {}
  Element(Tuple t) : v_(std::move(t)) {}

  const Value& value() const { return v_; }
  bool is_index() const { return std::holds_alternative<int>(v_); }
  int index() const { return std::get<int>(v_); }
  const MobiusPoint& mobius() const { return std::get<MobiusPoint>(v_); }
  const EinsteinVector& einstein() const { return std::get<EinsteinVector>(v_); }
  const Tuple& tuple() const { return std::get<Tuple>(v_); }

  json to_json() const;
  std::string str() const;

 private:
  Value v_;
};

// Tolerance-aware equality. Elements of different kinds are never equal;
// Einstein vectors with different speed bounds are an error, not a mismatch.
bool elements_close(const Element& a, const Element& b, const Tolerance& tol);

// Distance used for nearest-member matching of sampled sets: absolute
// difference for indices, Euclidean metric for continuous kinds.
double element_distance(const Element& a, const Element& b);

}  // namespace gyrolab
