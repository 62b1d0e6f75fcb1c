#include "gyrolab/contract.hpp"

#include <stdexcept>

namespace gyrolab {

bool is_sampled(const Mode& m) { return std::holds_alternative<Sampled>(m); }

std::string mode_str(const Mode& m) {
  if (const auto* s = std::get_if<Sampled>(&m))
    return "sampled(count=" + std::to_string(s->count) +
           ", seed=" + std::to_string(s->seed) + ")";
  return "exhaustive";
}

bool GyrogroupContract::is_finite() const {
  return std::holds_alternative<FiniteCarrier>(carrier);
}

const FiniteGyrogroup& GyrogroupContract::table() const {
  const auto* f = std::get_if<FiniteCarrier>(&carrier);
  if (!f) throw std::logic_error("GyrogroupContract: continuous carrier has no table");
  return *f->table;
}

std::vector<Element> GyrogroupContract::draw(std::uint64_t count,
                                             std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<Element> out;
  out.reserve(count);
  if (is_finite()) {
    std::uniform_int_distribution<int> dist(0, table().size() - 1);
    for (std::uint64_t i = 0; i < count; ++i) out.emplace_back(dist(rng));
    return out;
  }
  const auto& cont = std::get<ContinuousCarrier>(carrier);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(cont.sample(rng));
  return out;
}

GyrogroupContract finite_contract(FiniteGyrogroup g, std::string name, Tolerance tol) {
  return finite_contract(std::make_shared<const FiniteGyrogroup>(std::move(g)),
                         std::move(name), tol);
}

GyrogroupContract finite_contract(std::shared_ptr<const FiniteGyrogroup> g,
                                  std::string name, Tolerance tol) {
  GyrogroupContract c;
  c.name = std::move(name);
  c.carrier = FiniteCarrier{g};
  c.zero = Element(0);
  auto guard = [g](const Element& e) {
    const int i = e.index();
    if (i < 0 || i >= g->size())
      throw std::domain_error("finite carrier: index outside {0..n-1}");
    return i;
  };
  c.add = [g, guard](const Element& a, const Element& b) {
    return Element(g->op(guard(a), guard(b)));
  };
  c.neg = [g, guard](const Element& a) { return Element(g->inv(guard(a))); };
  c.tol = tol;
  return c;
}

}  // namespace gyrolab
