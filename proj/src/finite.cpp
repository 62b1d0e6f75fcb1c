#include "gyrolab/finite.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gyrolab {

namespace {

void check_shape(int n, const std::vector<int>& table) {
  if (n <= 0) throw std::invalid_argument("FiniteGyrogroup: carrier size must be positive");
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("FiniteGyrogroup: table is not n x n");
  for (int v : table)
    if (v < 0 || v >= n) throw std::out_of_range("FiniteGyrogroup: entry outside carrier");
}

}  // namespace

FiniteGyrogroup::FiniteGyrogroup(int n, std::vector<int> table, bool validate)
    : n_(n), table_(std::move(table)), inv_(n, -1) {
  check_shape(n_, table_);
  valid_ = true;
  std::vector<char> seen(n_);
  for (int i = 0; i < n_ && valid_; ++i) {
    // row i a permutation
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n_; ++j) {
      if (seen[op(i, j)]++) {
        if (validate) {
          std::ostringstream os;
          os << "FiniteGyrogroup: row " << i << " is not a permutation";
          throw std::invalid_argument(os.str());
        }
        valid_ = false;
        break;
      }
    }
    if (!valid_) break;
    // column i a permutation
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n_; ++j) {
      if (seen[op(j, i)]++) {
        if (validate) {
          std::ostringstream os;
          os << "FiniteGyrogroup: column " << i << " is not a permutation";
          throw std::invalid_argument(os.str());
        }
        valid_ = false;
        break;
      }
    }
  }
  if (valid_) {
    for (int j = 0; j < n_; ++j) {
      if (op(0, j) != j) {
        if (validate)
          throw std::invalid_argument("FiniteGyrogroup: row 0 is not the identity");
        valid_ = false;
        break;
      }
      if (op(j, 0) != j) {
        if (validate)
          throw std::invalid_argument("FiniteGyrogroup: column 0 is not the identity");
        valid_ = false;
        break;
      }
    }
  }
  // left inverses (unique per column when the table is latin; best-effort
  // otherwise so adversarial fixtures can still be probed)
  for (int a = 0; a < n_; ++a) {
    for (int x = 0; x < n_; ++x) {
      if (op(x, a) == 0) {
        inv_[a] = x;
        break;
      }
    }
    if (inv_[a] < 0) valid_ = false;
  }
  if (validate && !valid_)
    throw std::invalid_argument("FiniteGyrogroup: some element has no left inverse");
}

FiniteGyrogroup FiniteGyrogroup::from_table(int n, std::vector<int> table) {
  return FiniteGyrogroup(n, std::move(table), true);
}

FiniteGyrogroup FiniteGyrogroup::from_table_unchecked(int n, std::vector<int> table) {
  return FiniteGyrogroup(n, std::move(table), false);
}

std::string FiniteGyrogroup::serialize() const {
  std::ostringstream os;
  os << n_ << "\n";
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << op(i, j);
    os << "\n";
  }
  return os.str();
}

FiniteGyrogroup FiniteGyrogroup::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<int> numbers;
  long n = -1;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long v;
    while (ls >> v) {
      if (n < 0) {
        n = v;
        if (n <= 0 || n > 1 << 16)
          throw std::runtime_error(".gyro: bad carrier size on line " +
                                   std::to_string(lineno));
      } else {
        numbers.push_back(static_cast<int>(v));
      }
    }
    if (!ls.eof()) {
      std::string rest;
      ls.clear();
      ls >> rest;
      if (!rest.empty())
        throw std::runtime_error(".gyro: unexpected token '" + rest + "' on line " +
                                 std::to_string(lineno));
    }
  }
  if (n < 0) throw std::runtime_error(".gyro: empty input");
  if (numbers.size() != static_cast<std::size_t>(n) * n)
    throw std::runtime_error(".gyro: expected " + std::to_string(n * n) +
                             " entries, found " + std::to_string(numbers.size()));
  return from_table(static_cast<int>(n), std::move(numbers));
}

FiniteGyrogroup FiniteGyrogroup::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

FiniteGyrogroup cyclic_group(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return FiniteGyrogroup::from_table(n, std::move(table));
}

FiniteGyrogroup group_as_gyrogroup(int n, const std::vector<int>& table) {
  auto g = FiniteGyrogroup::from_table(n, table);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.op(g.op(x, y), z) != g.op(x, g.op(y, z))) {
          std::ostringstream os;
          os << "group_as_gyrogroup: associativity fails at (" << x << "," << y << ","
             << z << ")";
          throw std::invalid_argument(os.str());
        }
  return g;
}

FiniteGyrogroup table_product(const FiniteGyrogroup& a, const FiniteGyrogroup& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int ia = i / nb, ib = i % nb;
    for (int j = 0; j < n; ++j) {
      const int ja = j / nb, jb = j % nb;
      table[static_cast<std::size_t>(i) * n + j] = a.op(ia, ja) * nb + b.op(ib, jb);
    }
  }
  return FiniteGyrogroup::from_table(n, std::move(table));
}

int product_encode(const std::vector<int>& coords, const std::vector<int>& sizes) {
  if (coords.size() != sizes.size())
    throw std::invalid_argument("product_encode: arity mismatch");
  int idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= sizes[i])
      throw std::out_of_range("product_encode: coordinate outside factor");
    idx = idx * sizes[i] + coords[i];
  }
  return idx;
}

std::vector<int> product_decode(int index, const std::vector<int>& sizes) {
  std::vector<int> coords(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    coords[i] = index % sizes[i];
    index /= sizes[i];
  }
  if (index != 0) throw std::out_of_range("product_decode: index outside product");
  return coords;
}

}  // namespace gyrolab
