#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace gyrolab {

// Bitmask subset of a finite carrier {0..n-1}. Width is fixed at
// construction; operations on mismatched universes throw.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int n);
  static Subset full(int n);
  static Subset of(int n, std::initializer_list<int> indices);
  static Subset of(int n, const std::vector<int>& indices);
  static Subset from_mask(int n, std::uint64_t mask);  // n <= 64

  int universe() const { return n_; }
  bool test(int i) const;
  void set(int i);
  void reset(int i);
  int count() const;
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == n_; }

  Subset operator|(const Subset& o) const;
  Subset operator&(const Subset& o) const;
  Subset operator~() const;
  Subset minus(const Subset& o) const;
  bool operator==(const Subset& o) const;
  bool operator<(const Subset& o) const;  // lexicographic on words
  bool subset_of(const Subset& o) const;
  bool intersects(const Subset& o) const;

  // -1 when exhausted.
  int first() const;
  int next(int after) const;

  std::vector<int> to_indices() const;
  std::uint64_t to_mask() const;  // n <= 64

  // "0,2,5" or "0x25"; "-" denotes the empty set.
  static Subset parse(int n, std::string_view text);
  std::string str() const;  // {0,2,5}

 private:
  void check_same(const Subset& o) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gyrolab
