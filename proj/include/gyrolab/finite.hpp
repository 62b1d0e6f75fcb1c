#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gyrolab {

// Gyrogroup on {0..n-1} given by its Cayley table. Row i is the left
// translation by i; element 0 is the identity by convention. Structural
// invariants (rows and columns are permutations, row 0 and column 0 are the
// identity) are enforced by from_table/parse; the gyrogroup axioms themselves
// are a separate, reported check.
class FiniteGyrogroup {
 public:
  static FiniteGyrogroup from_table(int n, std::vector<int> table);
  // Range checks only; latin/identity violations are tolerated so corrupted
  // tables can be driven through check_axioms and fail with a witness.
  static FiniteGyrogroup from_table_unchecked(int n, std::vector<int> table);

  int size() const { return n_; }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  // Left inverse: the unique x with x (+) a = 0, or -1 on a broken column.
  int inv(int a) const { return inv_[a]; }
  // Derived gyration gyr[x,y](z) = (-(x(+)y)) (+) (x (+) (y (+) z)).
  int gyr(int x, int y, int z) const { return op(inv_[op(x, y)], op(x, op(y, z))); }
  // Latin square with identity row/column and total left inverses.
  bool structurally_valid() const { return valid_; }
  const std::vector<int>& table() const { return table_; }

  std::string serialize() const;
  static FiniteGyrogroup parse(std::string_view text);
  static FiniteGyrogroup load_file(const std::string& path);

  bool operator==(const FiniteGyrogroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  FiniteGyrogroup(int n, std::vector<int> table, bool validate);

  int n_ = 1;
  std::vector<int> table_;
  std::vector<int> inv_;
  bool valid_ = false;
};

// Z_n with addition mod n.
FiniteGyrogroup cyclic_group(int n);

// Wraps a group table (identity 0) as a gyrogroup; rejects non-associative
// input with a witness triple in the exception message. The derived gyrations
// of the result are all identity maps.
FiniteGyrogroup group_as_gyrogroup(int n, const std::vector<int>& table);

// Coordinatewise product table; index encoding is row-major over factor sizes.
FiniteGyrogroup table_product(const FiniteGyrogroup& a, const FiniteGyrogroup& b);

int product_encode(const std::vector<int>& coords, const std::vector<int>& sizes);
std::vector<int> product_decode(int index, const std::vector<int>& sizes);

}  // namespace gyrolab
