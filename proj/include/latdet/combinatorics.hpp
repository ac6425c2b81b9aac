#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace latdet::combinatorics {

// Value table indexed by the subsets of {1,...,l}, encoded as bitmasks.
// The empty set holds the fixed convention value 1: it stands for the
// empty summation in the transforms below.
template <typename V>
class SubsetTable {
 public:
  explicit SubsetTable(int ground_set_size)
      : l_(ground_set_size) {
    if (l_ < 0 || l_ > 20)
      throw std::length_error("SubsetTable: ground set size must be in [0, 20]");
    values_.assign(std::size_t{1} << l_, V(0));
    values_[0] = V(1);
  }

  int ground_set_size() const { return l_; }
  std::size_t size() const { return values_.size(); }

  V& operator[](unsigned mask) { return values_.at(mask); }
  const V& operator[](unsigned mask) const { return values_.at(mask); }

  bool operator==(const SubsetTable& o) const {
    return l_ == o.l_ && values_ == o.values_;
  }

 private:
  int l_;
  std::vector<V> values_;
};

namespace detail {
template <typename V>
void require_empty_set_one(const SubsetTable<V>& t, const char* who) {
  if (!(t[0] == V(1)))
    throw std::invalid_argument(std::string(who) + ": empty-set entry must be 1");
}
}  // namespace detail

// f(S) = sum over T subset of S of g(T). In-place per-bit zeta transform,
// O(l 2^l); exact over rational values.
template <typename V>
SubsetTable<V> forward(SubsetTable<V> g) {
  detail::require_empty_set_one(g, "forward");
  const int l = g.ground_set_size();
  for (int b = 0; b < l; ++b)
    for (unsigned mask = 0; mask < (1u << l); ++mask)
      if (mask & (1u << b)) g[mask] += g[mask ^ (1u << b)];
  return g;
}

// g(S) = sum over T subset of S of (-1)^{|S|-|T|} f(T); the two-sided
// inverse of forward. Per-bit Moebius transform.
template <typename V>
SubsetTable<V> invert(SubsetTable<V> f) {
  detail::require_empty_set_one(f, "invert");
  const int l = f.ground_set_size();
  for (int b = 0; b < l; ++b)
    for (unsigned mask = 0; mask < (1u << l); ++mask)
      if (mask & (1u << b)) f[mask] -= f[mask ^ (1u << b)];
  return f;
}

}  // namespace latdet::combinatorics
