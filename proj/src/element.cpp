#include "gyrolab/element.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gyrolab {

MobiusPoint::MobiusPoint(std::complex<double> z) : z_(z) {
  if (!(std::abs(z_) < 1.0 - kDomainGuard)) {
    std::ostringstream os;
    os << "MobiusPoint: modulus " << std::abs(z_) << " outside the open unit disk";
    throw std::domain_error(os.str());
  }
}

EinsteinVector::EinsteinVector(std::array<double, 3> v, double c) : v_(v), c_(c) {
  if (!(c > 0.0)) throw std::domain_error("EinsteinVector: speed bound must be positive");
  if (!(norm() < c * (1.0 - kDomainGuard))) {
    std::ostringstream os;
    os << "EinsteinVector: norm " << norm() << " outside the ball of radius " << c;
    throw std::domain_error(os.str());
  }
}

double EinsteinVector::norm() const {
  return std::sqrt(v_[0] * v_[0] + v_[1] * v_[1] + v_[2] * v_[2]);
}

double EinsteinVector::dot(const EinsteinVector& other) const {
  return v_[0] * other.v_[0] + v_[1] * other.v_[1] + v_[2] * other.v_[2];
}

json Element::to_json() const {
  json j;
  if (is_index()) {
    j = index();
  } else if (std::holds_alternative<MobiusPoint>(v_)) {
    const auto& p = mobius();
    j = json{{"re", p.re()}, {"im", p.im()}};
  } else if (std::holds_alternative<EinsteinVector>(v_)) {
    const auto& e = einstein();
    j = json{{"v", {e.v()[0], e.v()[1], e.v()[2]}}, {"c", e.c()}};
  } else {
    j = json::array();
    for (const auto& coord : tuple()) j.push_back(coord.to_json());
  }
  return j;
}

std::string Element::str() const { return to_json().dump(); }

bool elements_close(const Element& a, const Element& b, const Tolerance& tol) {
  if (a.value().index() != b.value().index()) return false;
  if (a.is_index()) return a.index() == b.index();
  if (std::holds_alternative<MobiusPoint>(a.value())) {
    const auto za = a.mobius().value(), zb = b.mobius().value();
    return tol.close(za.real(), zb.real()) && tol.close(za.imag(), zb.imag());
  }
  if (std::holds_alternative<EinsteinVector>(a.value())) {
    const auto& ea = a.einstein();
    const auto& eb = b.einstein();
    if (ea.c() != eb.c())
      throw std::invalid_argument("EinsteinVector comparison across speed bounds");
    for (int i = 0; i < 3; ++i)
      if (!tol.close(ea.v()[i], eb.v()[i])) return false;
    return true;
  }
  const auto& ta = a.tuple();
  const auto& tb = b.tuple();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i)
    if (!elements_close(ta[i], tb[i], tol)) return false;
  return true;
}

double element_distance(const Element& a, const Element& b) {
  if (a.value().index() != b.value().index())
    throw std::invalid_argument("element_distance across element kinds");
  if (a.is_index()) return a.index() == b.index() ? 0.0 : 1.0;
  if (std::holds_alternative<MobiusPoint>(a.value()))
    return std::abs(a.mobius().value() - b.mobius().value());
  if (std::holds_alternative<EinsteinVector>(a.value())) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = a.einstein().v()[i] - b.einstein().v()[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
  const auto& ta = a.tuple();
  const auto& tb = b.tuple();
  if (ta.size() != tb.size())
    throw std::invalid_argument("element_distance across arities");
  double s = 0.0;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    const double d = element_distance(ta[i], tb[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace gyrolab
