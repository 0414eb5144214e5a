#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alstat/bitstring.hpp"

namespace alstat {

/// Finite nonempty subset of B^n, stored as the sorted list of element
/// values. Serialization is canonical: sorted, deduplicated.
class FiniteModel {
 public:
  FiniteModel(int n, std::vector<std::uint32_t> elements);
  static FiniteModel full_universe(int n);
  static FiniteModel singleton(const BitString& x) { return FiniteModel(x.length(), {x.value()}); }

  int universe_bits() const { return n_; }
  std::uint64_t cardinality() const { return elems_.size(); }
  const std::vector<std::uint32_t>& elements() const { return elems_; }
  bool contains(std::uint32_t v) const;
  bool contains(const BitString& x) const { return x.length() == n_ && contains(x.value()); }
  bool contains_all(const StringTuple& xs) const;
  /// Position of v in the sorted element list.
  std::uint64_t index_of(std::uint32_t v) const;
  BitString element(std::uint64_t index) const;
  bool is_full_universe() const { return n_ <= 24 && elems_.size() == (1ull << n_); }

  std::string serialize() const;

  bool operator==(const FiniteModel& o) const { return n_ == o.n_ && elems_ == o.elems_; }
  bool operator<(const FiniteModel& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return elems_ < o.elems_;
  }

 private:
  std::uint8_t n_;
  std::vector<std::uint32_t> elems_;
};

}  // namespace alstat
