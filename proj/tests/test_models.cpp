#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gyrolab/checks.hpp"
#include "gyrolab/einstein.hpp"
#include "gyrolab/mobius.hpp"
#include "gyrolab/product.hpp"
#include "oracles.hpp"

using namespace gyrolab;
using doctest::Approx;

TEST_CASE("mobius addition against the complex-arithmetic oracle") {
  const MobiusPoint a(0.5, 0.0), b(0.0, 0.5);
  const auto s = mobius_add(a, b);
  // (0.5 + 0.5i)/(1 + 0.25i) = 10/17 + 6/17 i
  CHECK(s.re() == Approx(10.0 / 17.0).epsilon(1e-12));
  CHECK(s.im() == Approx(6.0 / 17.0).epsilon(1e-12));

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coord(-0.6, 0.6);
  for (int i = 0; i < 500; ++i) {
    const MobiusPoint x(coord(rng), coord(rng));
    const MobiusPoint y(coord(rng), coord(rng));
    const auto got = mobius_add(x, y).value();
    const auto want = oracle::mobius_add(x.value(), y.value());
    CHECK(std::abs(got - want) < 1e-12);
    // a (+) 0 = a and a (+) (-a) = 0
    CHECK(std::abs(mobius_add(x, MobiusPoint()).value() - x.value()) < 1e-15);
    CHECK(std::abs(mobius_add(x, mobius_neg(x)).value()) < 1e-15);
  }
}

TEST_CASE("mobius gyration: unimodular factor, oracle values, derived agreement") {
  const MobiusPoint a(0.5, 0.0), b(0.0, 0.5), c(0.5, 0.0);
  const auto factor = mobius_gyr_factor(a, b);
  // (1 + a conj b)/(1 + conj a b) = 15/17 - 8/17 i
  CHECK(factor.real() == Approx(15.0 / 17.0).epsilon(1e-12));
  CHECK(factor.imag() == Approx(-8.0 / 17.0).epsilon(1e-12));
  const auto rotated = mobius_gyr(a, b, c);
  CHECK(std::abs(rotated.value() - oracle::mobius_gyr(a.value(), b.value(), c.value())) <
        1e-15);

  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> coord(-0.63, 0.63);
  for (int i = 0; i < 2000; ++i) {
    const MobiusPoint x(coord(rng), coord(rng)), y(coord(rng), coord(rng)),
        z(coord(rng), coord(rng));
    // |gyr factor| = 1 to 1e-12
    CHECK(std::abs(std::abs(mobius_gyr_factor(x, y)) - 1.0) < 1e-12);
    // |gyr(x,y,z)| = |z| within tolerance
    CHECK(std::abs(mobius_gyr(x, y, z).modulus() - z.modulus()) < 1e-12);
    // native rotation agrees with the derived formula within 1e-9
    const auto derived = oracle::mobius_gyr_derived(x.value(), y.value(), z.value());
    CHECK(std::abs(mobius_gyr(x, y, z).value() - derived) < 1e-9);
    // gyr(x, 0, z) = z
    CHECK(std::abs(mobius_gyr(x, MobiusPoint(), z).value() - z.value()) < 1e-15);
  }
}

TEST_CASE("mobius left cancellation at the paper's points") {
  const MobiusPoint a(0.5, 0.0), b(0.0, 0.5);
  const auto back = mobius_add(mobius_neg(a), mobius_add(a, b));
  CHECK(std::abs(back.value() - b.value()) < 1e-9);
}

TEST_CASE("gamma factor") {
  CHECK(gamma_factor(EinsteinVector({0, 0, 0}, 1.0)) == 1.0);
  CHECK(gamma_factor(EinsteinVector({0.5, 0, 0}, 1.0)) ==
        Approx(1.1547005383792517).epsilon(1e-12));
  // monotone along rays
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  for (int i = 0; i < 200; ++i) {
    std::array<double, 3> d{unit(rng) - 0.5, unit(rng) - 0.5, unit(rng) - 0.5};
    const double norm = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    for (auto& x : d) x /= norm;
    double prev = 0.0;
    for (double r = 0.1; r < 0.95; r += 0.1) {
      const double g =
          gamma_factor(EinsteinVector({r * d[0], r * d[1], r * d[2]}, 1.0));
      CHECK(g > prev);
      CHECK(g >= 1.0);
      prev = g;
    }
  }
}

TEST_CASE("einstein addition: collinear closed form and closure") {
  const EinsteinVector u({0.5, 0, 0}, 1.0);
  const auto s = einstein_add(u, u);
  CHECK(s.v()[0] == Approx(oracle::einstein_collinear(0.5, 0.5, 1.0)).epsilon(1e-12));
  CHECK(s.v()[0] == Approx(0.8).epsilon(1e-12));
  CHECK(s.v()[1] == 0.0);
  CHECK(s.v()[2] == 0.0);

  // u (+) 0 = u; closure under 10000 seeded pairs
  const auto model = einstein_contract();
  const auto samples = model.draw(20000, 424242);
  for (std::size_t i = 0; i < samples.size(); i += 2) {
    const auto& a = samples[i].einstein();
    const auto& b = samples[i + 1].einstein();
    const auto sum = einstein_add(a, b);
    CHECK(sum.norm() < 1.0);
    const auto id = einstein_add(a, EinsteinVector({0, 0, 0}, 1.0));
    CHECK(std::abs(id.v()[0] - a.v()[0]) < 1e-15);
  }

  // collinear cases against the 1-D closed form, random speeds
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> sp(-0.9, 0.9);
  for (int i = 0; i < 500; ++i) {
    const double a = sp(rng), b = sp(rng);
    const auto got = einstein_add(EinsteinVector({a, 0, 0}, 1.0),
                                  EinsteinVector({b, 0, 0}, 1.0));
    CHECK(got.v()[0] == Approx(oracle::einstein_collinear(a, b, 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("einstein speed bounds are not coerced") {
  CHECK_THROWS_AS(einstein_add(EinsteinVector({0.1, 0, 0}, 1.0),
                               EinsteinVector({0.1, 0, 0}, 2.0)),
                  std::invalid_argument);
  // same c != 1 works and respects the bound
  const auto s = einstein_add(EinsteinVector({2.0, 0, 0}, 3.0),
                              EinsteinVector({2.0, 0, 0}, 3.0));
  CHECK(s.v()[0] == Approx(oracle::einstein_collinear(2.0, 2.0, 3.0)).epsilon(1e-12));
  CHECK(s.norm() < 3.0);
}

TEST_CASE("product: tabulated finite products") {
  const auto z4 = finite_contract(cyclic_group(4), "z4");
  const auto z2 = finite_contract(cyclic_group(2), "z2");
  const auto p = product({z4, z2});
  REQUIRE(p.is_finite());
  CHECK(p.table().size() == 8);
  CHECK(check_axioms(p, Exhaustive{}).overall());

  // gyration is coordinatewise on the tabulated product
  const auto& table = p.table();
  const std::vector<int> sizes{4, 2};
  const auto& a = z4.table();
  const auto& b = z2.table();
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int z = 0; z < 8; ++z) {
        const auto cx = product_decode(x, sizes), cy = product_decode(y, sizes),
                   cz = product_decode(z, sizes);
        const int want = product_encode(
            {a.gyr(cx[0], cy[0], cz[0]), b.gyr(cx[1], cy[1], cz[1])}, sizes);
        CHECK(table.gyr(x, y, z) == want);
      }
}

TEST_CASE("product: arity checks and caps") {
  CHECK_THROWS_AS(product({}), std::invalid_argument);
  const auto z2 = finite_contract(cyclic_group(2), "z2");
  CHECK_THROWS_AS(product({z2, z2, z2, z2, z2}), std::invalid_argument);
  CHECK_NOTHROW(product({z2, z2, z2, z2}));
}

TEST_CASE("product of k16 and z2 passes the axiom suite exhaustively") {
  auto k = fixtures::k16();
  if (!k) {
    MESSAGE("k16.gyro not found; skipping");
    return;
  }
  const auto p = product({finite_contract(*k, "k16"), finite_contract(cyclic_group(2), "z2")});
  REQUIRE(p.is_finite());
  CHECK(p.table().size() == 32);
  CHECK(check_axioms(p, Exhaustive{}).overall());
  CHECK_FALSE(is_group(p, Exhaustive{}).group);
}

TEST_CASE("disk squared reproduces the embedded non-associativity example") {
  const auto dd = product({mobius_contract(), mobius_contract()});
  REQUIRE_FALSE(dd.is_finite());
  const auto wit = nonassoc_witness(dd, 0, 0);
  REQUIRE(wit.has_value());
  // the witness is the probe triple embedded at coordinate 0
  const auto& x = (*wit)[0].tuple();
  REQUIRE(x.size() == 2);
  CHECK(x[0].mobius().re() == Approx(0.5));
  CHECK(x[1].mobius().modulus() == 0.0);
  const auto& y = (*wit)[1].tuple();
  CHECK(y[0].mobius().im() == Approx(0.5));
  // associativity fails at coordinate 0 exactly as in the plain disk
  const auto lhs = dd.add((*wit)[0], dd.add((*wit)[1], (*wit)[2]));
  const auto rhs = dd.add(dd.add((*wit)[0], (*wit)[1]), (*wit)[2]);
  CHECK(std::abs(lhs.tuple()[0].mobius().value() -
                 rhs.tuple()[0].mobius().value()) > 1e-3);
  CHECK(std::abs(lhs.tuple()[1].mobius().value() -
                 rhs.tuple()[1].mobius().value()) < 1e-15);

  // sampled axiom suite holds on the product
  CHECK(check_axioms(dd, Sampled{500, 13}).overall());
}

TEST_CASE("k16 file loads, verifies, and round-trips") {
  auto k = fixtures::k16();
  if (!k) {
    MESSAGE("k16.gyro not found; skipping");
    return;
  }
  CHECK(k->size() == 16);
  CHECK(FiniteGyrogroup::parse(k->serialize()) == *k);
}
