#include "gyrolab/registry.hpp"

#include <cstdlib>
#include <filesystem>
#include <memory>
#include <stdexcept>

#include "gyrolab/einstein.hpp"
#include "gyrolab/mobius.hpp"
#include "gyrolab/product.hpp"

#ifndef GYROLAB_DEFAULT_DATA_DIR
#define GYROLAB_DEFAULT_DATA_DIR ""
#endif

namespace gyrolab {

namespace {

bool has_prefix(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::optional<int> parse_suffix_int(const std::string& s, const std::string& prefix) {
  if (!has_prefix(s, prefix) || s.size() == prefix.size()) return std::nullopt;
  int value = 0;
  for (std::size_t i = prefix.size(); i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    value = value * 10 + (s[i] - '0');
  }
  return value;
}

}  // namespace

std::optional<std::string> find_data_file(const std::string& filename,
                                          const std::optional<std::string>& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> candidates;
  if (dir) candidates.push_back(*dir + "/" + filename);
  if (const char* env = std::getenv("GYROLAB_DATA_DIR"))
    candidates.push_back(std::string(env) + "/" + filename);
  candidates.push_back("data/" + filename);
  const std::string compiled = GYROLAB_DEFAULT_DATA_DIR;
  if (!compiled.empty()) candidates.push_back(compiled + "/" + filename);
  for (const auto& c : candidates)
    if (fs::exists(c)) return c;
  return std::nullopt;
}

GyrogroupContract resolve_model(const std::string& name, Tolerance tol,
                                const std::optional<std::string>& data_dir) {
  if (name == "mobius") return mobius_contract(tol);
  if (name == "einstein") return einstein_contract(1.0, tol);
  if (const auto n = parse_suffix_int(name, "z")) {
    if (*n < 1 || *n > 4096)
      throw std::invalid_argument("model z<n>: order out of range");
    return finite_contract(cyclic_group(*n), name, tol);
  }
  if (name == "k16") {
    const auto path = find_data_file("k16.gyro", data_dir);
    if (!path)
      throw std::runtime_error(
          "k16: data file k16.gyro not found (set GYROLAB_DATA_DIR or pass a "
          "data directory)");
    return finite_contract(FiniteGyrogroup::load_file(*path), "k16", tol);
  }
  if (has_prefix(name, "product:")) {
    std::vector<GyrogroupContract> factors;
    std::string rest = name.substr(8);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      const std::string part = rest.substr(pos, comma - pos);
      if (part.empty()) throw std::invalid_argument("product: empty factor name");
      factors.push_back(resolve_model(part, tol, data_dir));
      pos = comma + 1;
    }
    return product(std::move(factors));
  }
  if (name.size() > 5 && name.substr(name.size() - 5) == ".gyro")
    return finite_contract(FiniteGyrogroup::load_file(name), name, tol);
  throw std::invalid_argument("unknown model '" + name + "'");
}

FiniteTopology resolve_topology(const std::string& name) {
  if (name == "sierpinski") return FiniteTopology::sierpinski();
  if (const auto n = parse_suffix_int(name, "discrete")) {
    if (*n < 1 || *n > 20)
      throw std::invalid_argument("discrete<n>: carrier size out of range 1..20");
    return FiniteTopology::discrete(*n);
  }
  if (const auto n = parse_suffix_int(name, "indiscrete")) {
    if (*n < 1 || *n > 64)
      throw std::invalid_argument("indiscrete<n>: carrier size out of range 1..64");
    return FiniteTopology::indiscrete(*n);
  }
  if (name.size() > 5 && name.substr(name.size() - 5) == ".topo")
    return FiniteTopology::load_file(name);
  throw std::invalid_argument("unknown topology '" + name + "'");
}

}  // namespace gyrolab
