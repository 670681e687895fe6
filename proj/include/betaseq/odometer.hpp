#pragma once

// Addition-by-one on admissible digit strings (the G-odometer) and orbit
// iteration.  successor implements the carry-block form: find the smallest
// horizon j such that the low block value plus one still fits below
// G_{j+1} - 1, re-expand that block greedily, keep everything above.

#include <cstdint>
#include <iterator>
#include <stdexcept>

#include "numeration.hpp"

namespace betaseq {

inline DigitString successor(const DigitString& x, const NumerationSystem& sys) {
  if (!is_admissible(x, sys)) throw std::invalid_argument("odometer state must be admissible");
  const std::int64_t n = expansion_value(x, sys);

  // smallest carry horizon: all of the string is the low block, so we need
  // the first j >= top with x(j) < G_{j+1} - 1, i.e. G_{j+1} >= n + 2
  int j = x.top_index() < 0 ? 0 : x.top_index();
  while (true) {
    if (j + 1 > sys.max_index())
      throw std::out_of_range("odometer carry exceeds precomputed base-sequence range");
    if (sys.G(j + 1) >= n + 2) break;
    ++j;
  }

  DigitString out = greedy_expansion(n + 1, sys);  // re-expansion of the low block
  // the carry stayed inside positions 0..j; higher digits are untouched zeros
  if (out.top_index() > j) throw NumericError("carry horizon bound violated");
  return out;
}

// Lazily yields start, tau(start), tau^2(start), ...
class OrbitRange {
 public:
  class iterator {
   public:
    using value_type = DigitString;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;
    using pointer = const DigitString*;
    using reference = const DigitString&;

    iterator() = default;
    iterator(DigitString cur, const NumerationSystem* sys, std::int64_t remaining)
        : cur_(std::move(cur)), sys_(sys), remaining_(remaining) {}

    reference operator*() const { return cur_; }
    pointer operator->() const { return &cur_; }

    iterator& operator++() {
      if (--remaining_ > 0) cur_ = successor(cur_, *sys_);
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.remaining_ == b.remaining_;
    }
    friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

   private:
    DigitString cur_;
    const NumerationSystem* sys_ = nullptr;
    std::int64_t remaining_ = 0;
  };

  OrbitRange(DigitString start, const NumerationSystem& sys, std::int64_t count)
      : start_(std::move(start)), sys_(&sys), count_(count) {
    if (count < 1) throw std::invalid_argument("orbit count must be positive");
  }

  iterator begin() const { return iterator(start_, sys_, count_); }
  iterator end() const { return iterator(); }

 private:
  DigitString start_;
  const NumerationSystem* sys_;
  std::int64_t count_;
};

inline OrbitRange orbit(DigitString start, const NumerationSystem& sys, std::int64_t count) {
  return OrbitRange(std::move(start), sys, count);
}

}  // namespace betaseq
