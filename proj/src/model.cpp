#include "alstat/model.hpp"

#include <algorithm>

#include "alstat/errors.hpp"

namespace alstat {

FiniteModel::FiniteModel(int n, std::vector<std::uint32_t> elements) : elems_(std::move(elements)) {
  if (n < 1 || n > 24) fail(Errc::ObjectOutOfBounds, "model universe length must be in [1,24]");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty()) fail(Errc::EmptyModel, "model must be nonempty");
  if (elems_.back() >> n) fail(Errc::ObjectOutOfBounds, "model element wider than universe");
  n_ = static_cast<std::uint8_t>(n);
}

FiniteModel FiniteModel::full_universe(int n) {
  if (n < 1 || n > 24) fail(Errc::ObjectOutOfBounds, "universe length must be in [1,24]");
  std::vector<std::uint32_t> all(1ull << n);
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return FiniteModel(n, std::move(all));
}

bool FiniteModel::contains(std::uint32_t v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool FiniteModel::contains_all(const StringTuple& xs) const {
  if (xs.length_n() != n_) return false;
  for (const auto& x : xs.elements())
    if (!contains(x.value())) return false;
  return true;
}

std::uint64_t FiniteModel::index_of(std::uint32_t v) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
  if (it == elems_.end() || *it != v) fail(Errc::NotAMember, "element not in model");
  return static_cast<std::uint64_t>(it - elems_.begin());
}

BitString FiniteModel::element(std::uint64_t index) const {
  if (index >= elems_.size()) fail(Errc::ObjectOutOfBounds, "index out of range");
  return BitString(n_, elems_[index]);
}

std::string FiniteModel::serialize() const {
  std::string s = "n=" + std::to_string(n_) + ":{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s.push_back(',');
    s += BitString(n_, elems_[i]).to_string();
  }
  s.push_back('}');
  return s;
}

}  // namespace alstat
