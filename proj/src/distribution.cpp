#include "alstat/distribution.hpp"

#include <algorithm>
#include <map>

#include "alstat/errors.hpp"

namespace alstat {

RationalDistribution::RationalDistribution(int n,
                                           std::vector<std::pair<std::uint32_t, Rat>> entries)
    : entries_(std::move(entries)) {
  if (n < 1 || n > 24) fail(Errc::ObjectOutOfBounds, "distribution universe length must be in [1,24]");
  n_ = static_cast<std::uint8_t>(n);
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Rat total(0);
  std::uint32_t prev = 0;
  bool first = true;
  for (const auto& [v, p] : entries_) {
    if (!first && v == prev) fail(Errc::ParseError, "duplicate support element");
    if (v >> n) fail(Errc::ObjectOutOfBounds, "support element wider than universe");
    if (p <= 0) fail(Errc::ZeroLikelihood, "probabilities must be positive");
    total += p;
    prev = v;
    first = false;
  }
  if (entries_.empty() || total != 1) fail(Errc::WeightSumNotOne, "probabilities must sum to 1");
}

Rat RationalDistribution::prob(std::uint32_t v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const auto& e, std::uint32_t x) { return e.first < x; });
  if (it == entries_.end() || it->first != v) return Rat(0);
  return it->second;
}

FiniteModel RationalDistribution::support_model() const {
  std::vector<std::uint32_t> vs;
  vs.reserve(entries_.size());
  for (const auto& [v, p] : entries_) vs.push_back(v);
  return FiniteModel(n_, std::move(vs));
}

Rat RationalDistribution::likelihood(const StringTuple& xs) const {
  if (xs.length_n() != n_) return Rat(0);
  Rat prod(1);
  for (const auto& x : xs.elements()) {
    Rat p = prob(x.value());
    if (p == 0) return Rat(0);
    prod *= p;
  }
  return prod;
}

std::string RationalDistribution::serialize() const {
  std::string s = "n=" + std::to_string(n_) + ":{";
  bool first = true;
  for (const auto& [v, p] : entries_) {
    if (!first) s.push_back(',');
    first = false;
    s += BitString(n_, v).to_string();
    s.push_back(':');
    s += boost::multiprecision::numerator(p).str();
    s.push_back('/');
    s += boost::multiprecision::denominator(p).str();
  }
  s.push_back('}');
  return s;
}

int RationalDistribution::shannon_len(std::uint32_t v) const {
  Rat p = prob(v);
  if (p == 0) fail(Errc::ZeroLikelihood, "no Shannon code off support");
  return static_cast<int>(ceil_neg_log2(p));
}

void RationalDistribution::build_shannon() const {
  if (!shannon_.empty()) return;
  // Decreasing probability, ties by value; cumulative F(y) truncated to
  // ceil(-log2 P(y)) bits.
  std::vector<std::pair<std::uint32_t, Rat>> order(entries_.begin(), entries_.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  Rat cum(0);
  for (const auto& [v, p] : order) {
    int len = static_cast<int>(ceil_neg_log2(p));
    BitVec code;
    Rat f = cum;
    for (int j = 0; j < len; ++j) {
      f *= 2;
      if (f >= 1) {
        code.push_back(1);
        f -= 1;
      } else {
        code.push_back(0);
      }
    }
    shannon_.emplace_back(std::move(code), v);
    cum += p;
  }
}

BitVec RationalDistribution::shannon_code(std::uint32_t v) const {
  build_shannon();
  for (const auto& [code, val] : shannon_)
    if (val == v) return code;
  fail(Errc::ZeroLikelihood, "no Shannon code off support");
}

std::optional<std::uint32_t> RationalDistribution::shannon_decode(BitReader& r) const {
  build_shannon();
  // Match incrementally: codewords are prefix-free, so at most one fits.
  std::vector<std::size_t> alive(shannon_.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t depth = 0;
  while (true) {
    for (std::size_t idx : alive)
      if (shannon_[idx].first.size() == depth) return shannon_[idx].second;
    auto b = r.bit();
    if (!b) return std::nullopt;
    std::vector<std::size_t> next;
    for (std::size_t idx : alive)
      if (shannon_[idx].first.size() > depth && shannon_[idx].first.bit(depth) == *b)
        next.push_back(idx);
    if (next.empty()) return std::nullopt;
    alive = std::move(next);
    ++depth;
  }
}

bool RationalDistribution::operator<(const RationalDistribution& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return serialize() < o.serialize();
}

RationalDistribution uniform_over(const FiniteModel& a) {
  Rat p(BigInt(1), BigInt(a.cardinality()));
  std::vector<std::pair<std::uint32_t, Rat>> entries;
  entries.reserve(a.elements().size());
  for (auto v : a.elements()) entries.emplace_back(v, p);
  return RationalDistribution(a.universe_bits(), std::move(entries));
}

RationalDistribution mixture(const std::vector<std::pair<Rat, FiniteModel>>& components) {
  if (components.empty()) fail(Errc::WeightSumNotOne, "mixture needs components");
  const int n = components[0].second.universe_bits();
  Rat total(0);
  std::map<std::uint32_t, Rat> acc;
  for (const auto& [w, a] : components) {
    if (a.universe_bits() != n) fail(Errc::MixedUniverse, "mixture components over different universes");
    if (w <= 0) fail(Errc::WeightSumNotOne, "mixture weights must be positive");
    total += w;
    Rat share = w / Rat(BigInt(a.cardinality()));
    for (auto v : a.elements()) acc[v] += share;
  }
  if (total != 1) fail(Errc::WeightSumNotOne, "mixture weights must sum to 1");
  std::vector<std::pair<std::uint32_t, Rat>> entries(acc.begin(), acc.end());
  return RationalDistribution(n, std::move(entries));
}

}  // namespace alstat
