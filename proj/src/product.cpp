#include "gyrolab/product.hpp"

#include <memory>
#include <stdexcept>

namespace gyrolab {

namespace {

std::string joined_name(const std::vector<GyrogroupContract>& factors) {
  std::string name;
  for (const auto& f : factors) {
    if (!name.empty()) name += " x ";
    name += f.name;
  }
  return name;
}

}  // namespace

GyrogroupContract product(std::vector<GyrogroupContract> factors,
                          std::size_t max_arity, int max_tabulated) {
  if (factors.empty()) throw std::invalid_argument("product: arity 0");
  if (factors.size() > max_arity)
    throw std::invalid_argument("product: arity exceeds configured bound");
  if (factors.size() == 1) return factors[0];

  bool all_finite = true;
  long total = 1;
  for (const auto& f : factors) {
    if (!f.is_finite()) {
      all_finite = false;
      break;
    }
    total *= f.table().size();
    if (total > max_tabulated) break;
  }

  if (all_finite && total <= max_tabulated) {
    FiniteGyrogroup acc = factors[0].table();
    for (std::size_t i = 1; i < factors.size(); ++i)
      acc = table_product(acc, factors[i].table());
    auto c = finite_contract(std::move(acc), joined_name(factors), factors[0].tol);
    return c;
  }

  // Tuple-valued contract: coordinatewise everything. Sampled mode only.
  auto shared = std::make_shared<std::vector<GyrogroupContract>>(std::move(factors));
  GyrogroupContract g;
  g.name = joined_name(*shared);
  g.tol = shared->front().tol;
  Tuple zero;
  for (const auto& f : *shared) zero.push_back(f.zero);
  g.zero = Element(std::move(zero));
  g.add = [shared](const Element& a, const Element& b) {
    const auto& ta = a.tuple();
    const auto& tb = b.tuple();
    if (ta.size() != shared->size() || tb.size() != shared->size())
      throw std::invalid_argument("product: arity mismatch");
    Tuple out;
    out.reserve(shared->size());
    for (std::size_t i = 0; i < shared->size(); ++i)
      out.push_back((*shared)[i].add(ta[i], tb[i]));
    return Element(std::move(out));
  };
  g.neg = [shared](const Element& a) {
    Tuple out;
    out.reserve(shared->size());
    for (std::size_t i = 0; i < shared->size(); ++i)
      out.push_back((*shared)[i].neg(a.tuple()[i]));
    return Element(std::move(out));
  };
  bool all_native = true;
  for (const auto& f : *shared)
    if (!f.native_gyr) all_native = false;
  if (all_native) {
    g.native_gyr = [shared](const Element& x, const Element& y, const Element& z) {
      Tuple out;
      out.reserve(shared->size());
      for (std::size_t i = 0; i < shared->size(); ++i)
        out.push_back(
            (*shared)[i].native_gyr(x.tuple()[i], y.tuple()[i], z.tuple()[i]));
      return Element(std::move(out));
    };
  }
  ContinuousCarrier carrier;
  carrier.domain = "product of " + std::to_string(shared->size()) + " factors";
  carrier.sample = [shared](std::mt19937_64& rng) {
    Tuple out;
    out.reserve(shared->size());
    for (const auto& f : *shared) {
      if (f.is_finite()) {
        std::uniform_int_distribution<int> dist(0, f.table().size() - 1);
        out.push_back(Element(dist(rng)));
      } else {
        out.push_back(std::get<ContinuousCarrier>(f.carrier).sample(rng));
      }
    }
    return Element(std::move(out));
  };
  g.carrier = std::move(carrier);
  // Embed each factor's probe triples at its coordinate, zeros elsewhere.
  for (std::size_t i = 0; i < shared->size(); ++i) {
    for (const auto& probe : (*shared)[i].probe_triples) {
      std::array<Element, 3> embedded;
      for (int k = 0; k < 3; ++k) {
        Tuple t;
        for (std::size_t j = 0; j < shared->size(); ++j)
          t.push_back(j == i ? probe[k] : (*shared)[j].zero);
        embedded[k] = Element(std::move(t));
      }
      g.probe_triples.push_back(std::move(embedded));
    }
  }
  return g;
}

}  // namespace gyrolab
