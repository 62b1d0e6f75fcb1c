#include "gyrolab/subset.hpp"

#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gyrolab {

namespace {
constexpr int kWordBits = 64;
int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

Subset::Subset(int n) : n_(n), words_(word_count(n), 0) {
  if (n <= 0) throw std::invalid_argument("Subset: universe must be positive");
}

Subset Subset::full(int n) {
  Subset s(n);
  for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ull;
  const int tail = n % kWordBits;
  if (tail) s.words_.back() &= (1ull << tail) - 1;
  return s;
}

Subset Subset::of(int n, std::initializer_list<int> indices) {
  Subset s(n);
  for (int i : indices) s.set(i);
  return s;
}

Subset Subset::of(int n, const std::vector<int>& indices) {
  Subset s(n);
  for (int i : indices) s.set(i);
  return s;
}

Subset Subset::from_mask(int n, std::uint64_t mask) {
  if (n > 64) throw std::invalid_argument("Subset::from_mask: universe exceeds 64");
  Subset s(n);
  if (n < 64 && (mask >> n)) throw std::out_of_range("Subset::from_mask: mask exceeds universe");
  s.words_[0] = mask;
  return s;
}

bool Subset::test(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("Subset::test: index outside universe");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void Subset::set(int i) {
  if (i < 0 || i >= n_) throw std::out_of_range("Subset::set: index outside universe");
  words_[i / kWordBits] |= 1ull << (i % kWordBits);
}

void Subset::reset(int i) {
  if (i < 0 || i >= n_) throw std::out_of_range("Subset::reset: index outside universe");
  words_[i / kWordBits] &= ~(1ull << (i % kWordBits));
}

int Subset::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

void Subset::check_same(const Subset& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Subset: universe mismatch");
}

Subset Subset::operator|(const Subset& o) const {
  check_same(o);
  Subset r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] |= o.words_[w];
  return r;
}

Subset Subset::operator&(const Subset& o) const {
  check_same(o);
  Subset r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
  return r;
}

Subset Subset::operator~() const {
  Subset r = full(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~words_[w];
  return r;
}

Subset Subset::minus(const Subset& o) const {
  check_same(o);
  Subset r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~o.words_[w];
  return r;
}

bool Subset::operator==(const Subset& o) const { return n_ == o.n_ && words_ == o.words_; }

bool Subset::operator<(const Subset& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return words_ < o.words_;
}

bool Subset::subset_of(const Subset& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~o.words_[w]) return false;
  return true;
}

bool Subset::intersects(const Subset& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & o.words_[w]) return true;
  return false;
}

int Subset::first() const { return next(-1); }

int Subset::next(int after) const {
  for (int i = after + 1; i < n_; ++i) {
    const auto w = words_[i / kWordBits] >> (i % kWordBits);
    if (w == 0) {
      i = (i / kWordBits + 1) * kWordBits - 1;
      continue;
    }
    if (w & 1u) return i;
  }
  return -1;
}

std::vector<int> Subset::to_indices() const {
  std::vector<int> out;
  for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
  return out;
}

std::uint64_t Subset::to_mask() const {
  if (n_ > 64) throw std::logic_error("Subset::to_mask: universe exceeds 64");
  return words_[0];
}

Subset Subset::parse(int n, std::string_view text) {
  Subset s(n);
  if (text == "-" || text.empty()) return s;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::uint64_t mask = 0;
    const auto* begin = text.data() + 2;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(begin, end, mask, 16);
    if (res.ec != std::errc{} || res.ptr != end)
      throw std::invalid_argument("Subset::parse: bad hex mask '" + std::string(text) + "'");
    return from_mask(n, mask);
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    int idx = 0;
    const auto* begin = text.data() + pos;
    const auto* end = text.data() + comma;
    const auto res = std::from_chars(begin, end, idx);
    if (res.ec != std::errc{} || res.ptr != end)
      throw std::invalid_argument("Subset::parse: bad index list '" + std::string(text) + "'");
    if (idx < 0 || idx >= n)
      throw std::out_of_range("Subset::parse: index outside universe");
    s.set(idx);
    pos = comma + 1;
  }
  return s;
}

std::string Subset::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = this->first(); i >= 0; i = next(i)) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace gyrolab
