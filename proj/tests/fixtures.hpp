#pragma once

// Shared finite fixtures for the suites. k16 loads from the data directory
// and is optional: suites referencing it skip with a message when the file is
// absent.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gyrolab/contract.hpp"
#include "gyrolab/finite.hpp"
#include "gyrolab/registry.hpp"

#ifndef GYROLAB_DATA_DIR_TESTS
#define GYROLAB_DATA_DIR_TESTS "data"
#endif

namespace fixtures {

inline gyrolab::FiniteGyrogroup z(int n) { return gyrolab::cyclic_group(n); }

inline gyrolab::FiniteGyrogroup klein4() {
  return gyrolab::table_product(z(2), z(2));
}

inline std::optional<gyrolab::FiniteGyrogroup> k16() {
  const auto path =
      gyrolab::find_data_file("k16.gyro", std::string(GYROLAB_DATA_DIR_TESTS));
  if (!path) return std::nullopt;
  return gyrolab::FiniteGyrogroup::load_file(*path);
}

// Every valid finite fixture, k16 included when available.
inline std::vector<std::pair<std::string, gyrolab::FiniteGyrogroup>> all() {
  std::vector<std::pair<std::string, gyrolab::FiniteGyrogroup>> out;
  out.emplace_back("z1", z(1));
  out.emplace_back("z2", z(2));
  out.emplace_back("z4", z(4));
  out.emplace_back("z8", z(8));
  out.emplace_back("z2xz2", klein4());
  out.emplace_back("z4xz3", gyrolab::table_product(z(4), z(3)));
  if (auto k = k16()) {
    out.emplace_back("k16", *k);
    out.emplace_back("k16xz2", gyrolab::table_product(*k, z(2)));
  }
  return out;
}

inline std::vector<std::pair<std::string, gyrolab::FiniteGyrogroup>> small() {
  std::vector<std::pair<std::string, gyrolab::FiniteGyrogroup>> out;
  for (auto& [name, g] : all())
    if (g.size() <= 12) out.emplace_back(name, g);
  return out;
}

}  // namespace fixtures
