#include <doctest.h>

#include "gyrolab/element.hpp"

using namespace gyrolab;

TEST_CASE("mobius point domain guard") {
  CHECK_NOTHROW(MobiusPoint(0.9, 0.0));
  CHECK_NOTHROW(MobiusPoint(0.0, -0.999999));
  CHECK_THROWS_AS(MobiusPoint(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(MobiusPoint(0.8, 0.8), std::domain_error);
  // right at the guard
  CHECK_THROWS_AS(MobiusPoint(1.0 - 1e-13, 0.0), std::domain_error);
}

TEST_CASE("einstein vector domain guard") {
  CHECK_NOTHROW(EinsteinVector({0.5, 0.5, 0.5}, 1.0));
  CHECK_THROWS_AS(EinsteinVector({1.0, 0.0, 0.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(EinsteinVector({0.0, 0.0, 2.9}, 3.0), std::domain_error);
  CHECK_THROWS_AS(EinsteinVector({0.0, 0.0, 0.0}, -1.0), std::domain_error);
  CHECK_NOTHROW(EinsteinVector({0.0, 0.0, 2.9}, 3.01));
}

TEST_CASE("tolerant equality") {
  Tolerance tol;
  CHECK(elements_close(Element(3), Element(3), tol));
  CHECK_FALSE(elements_close(Element(3), Element(4), tol));
  CHECK_FALSE(elements_close(Element(3), Element(MobiusPoint(0.0, 0.0)), tol));
  CHECK(elements_close(Element(MobiusPoint(0.25, 0.0)),
                       Element(MobiusPoint(0.25 + 1e-12, 0.0)), tol));
  CHECK_FALSE(elements_close(Element(MobiusPoint(0.25, 0.0)),
                             Element(MobiusPoint(0.25 + 1e-6, 0.0)), tol));
  CHECK_THROWS_AS(
      elements_close(Element(EinsteinVector({0.1, 0, 0}, 1.0)),
                     Element(EinsteinVector({0.1, 0, 0}, 2.0)), tol),
      std::invalid_argument);
  Tuple a{Element(1), Element(MobiusPoint(0.1, 0.1))};
  Tuple b{Element(1), Element(MobiusPoint(0.1, 0.1))};
  CHECK(elements_close(Element(a), Element(b), tol));
  b.push_back(Element(0));
  CHECK_FALSE(elements_close(Element(a), Element(b), tol));
}

TEST_CASE("element json shapes") {
  CHECK(Element(5).to_json() == json(5));
  CHECK(Element(MobiusPoint(0.5, -0.5)).to_json()["re"] == 0.5);
  const auto ej = Element(EinsteinVector({0.1, 0.2, 0.3}, 1.0)).to_json();
  CHECK(ej["v"].size() == 3);
  CHECK(ej["c"] == 1.0);
  const auto tj = Element(Tuple{Element(1), Element(2)}).to_json();
  CHECK(tj.is_array());
  CHECK(tj.size() == 2);
}
