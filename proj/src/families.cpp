#include "alstat/families.hpp"

#include <algorithm>

#include "alstat/errors.hpp"
#include "alstat/gf2k.hpp"

namespace alstat {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

constexpr int kMaxFamilyUniverse = 24;

// Combinadic rank of a position set within the weight-m subsets of
// {0..n-1}; positions ascending.
std::uint64_t mask_rank(const std::vector<int>& pos) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) r += binomial(pos[i], static_cast<int>(i) + 1);
  return r;
}

std::vector<int> mask_unrank(std::uint64_t rank, int n, int m) {
  std::vector<int> pos(static_cast<std::size_t>(m));
  for (int i = m; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < n && binomial(c + 1, i) <= rank) ++c;
    pos[static_cast<std::size_t>(i - 1)] = c;
    rank -= binomial(c, i);
  }
  return pos;
}

// Positions are counted from the left of the string (position 0 = leftmost).
std::uint32_t pos_bit(int n, int p) { return 1u << (n - 1 - p); }

// ---------------------------------------------------------------------------
// Cylinders: fix m positions to a pattern. Params:
//   gamma(n) gamma(m+1) rank[width C(n,m)] pattern[m]
// ---------------------------------------------------------------------------
class Cylinders final : public ModelFamily {
 public:
  Cylinders() : ModelFamily("cylinders", "0") {}
  bool contains_all_singletons() const override { return true; }
  bool supports_universe(int n) const override { return n >= 1 && n <= kMaxFamilyUniverse; }

  static FiniteModel build(int n, const std::vector<int>& pos, std::uint32_t pattern) {
    std::vector<std::uint32_t> elems;
    const int free_bits = n - static_cast<int>(pos.size());
    elems.reserve(1ull << free_bits);
    std::vector<int> free_pos;
    std::uint32_t fixed = 0;
    {
      std::vector<bool> is_fixed(static_cast<std::size_t>(n), false);
      for (std::size_t i = 0; i < pos.size(); ++i) {
        is_fixed[static_cast<std::size_t>(pos[i])] = true;
        if ((pattern >> (pos.size() - 1 - i)) & 1) fixed |= pos_bit(n, pos[i]);
      }
      for (int p = 0; p < n; ++p)
        if (!is_fixed[static_cast<std::size_t>(p)]) free_pos.push_back(p);
    }
    for (std::uint32_t f = 0; f < (1u << free_bits); ++f) {
      std::uint32_t v = fixed;
      for (int i = 0; i < free_bits; ++i)
        if ((f >> (free_bits - 1 - i)) & 1) v |= pos_bit(n, free_pos[static_cast<std::size_t>(i)]);
      elems.push_back(v);
    }
    return FiniteModel(n, std::move(elems));
  }

  static BitVec params(int n, const std::vector<int>& pos, std::uint32_t pattern) {
    BitWriter w;
    const int m = static_cast<int>(pos.size());
    w.gamma(static_cast<std::uint64_t>(n));
    w.gamma(static_cast<std::uint64_t>(m) + 1);
    w.uint(mask_rank(pos), index_width(binomial(n, m)));
    w.uint(pattern, m);
    return w.take();
  }

  void enumerate(int n, const EnumFn& fn) const override {
    for (int m = 0; m <= n; ++m) {
      const std::uint64_t nmasks = binomial(n, m);
      for (std::uint64_t r = 0; r < nmasks; ++r) {
        auto pos = mask_unrank(r, n, m);
        for (std::uint32_t pat = 0; pat < (1u << m); ++pat) fn(params(n, pos, pat), build(n, pos, pat));
      }
    }
  }

  std::vector<BitVec> param_codes_for(const FiniteModel& a) const override {
    const int n = a.universe_bits();
    std::uint32_t all_and = ~0u, all_or = 0;
    for (auto v : a.elements()) {
      all_and &= v;
      all_or |= v;
    }
    std::vector<int> pos;
    std::uint32_t pattern = 0;
    for (int p = 0; p < n; ++p) {
      const std::uint32_t b = pos_bit(n, p);
      if ((all_and & b) == (all_or & b)) {
        pattern = (pattern << 1) | ((all_and & b) ? 1u : 0u);
        pos.push_back(p);
      }
    }
    // Constant positions determine the only candidate mask; the size check
    // settles whether a is really this cylinder.
    if (a.cardinality() != (1ull << (n - pos.size()))) return {};
    return {params(n, pos, pattern)};
  }

  std::optional<FiniteModel> decode_params(BitReader& r) const override {
    auto n = r.gamma();
    if (!n || *n < 1 || *n > kMaxFamilyUniverse) return std::nullopt;
    auto mp1 = r.gamma();
    if (!mp1 || *mp1 < 1 || *mp1 > *n + 1) return std::nullopt;
    const int m = static_cast<int>(*mp1 - 1);
    auto rank = r.uint(index_width(binomial(static_cast<int>(*n), m)));
    if (!rank || *rank >= binomial(static_cast<int>(*n), m)) return std::nullopt;
    auto pat = r.uint(m);
    if (!pat) return std::nullopt;
    auto pos = mask_unrank(*rank, static_cast<int>(*n), m);
    return build(static_cast<int>(*n), pos, static_cast<std::uint32_t>(*pat));
  }
};

// ---------------------------------------------------------------------------
// Singletons. Params: gamma(n) x[n]
// ---------------------------------------------------------------------------
class Singletons final : public ModelFamily {
 public:
  Singletons() : ModelFamily("singletons", "10") {}
  bool contains_all_singletons() const override { return true; }
  bool supports_universe(int n) const override { return n >= 1 && n <= kMaxFamilyUniverse; }

  static BitVec params(int n, std::uint32_t v) {
    BitWriter w;
    w.gamma(static_cast<std::uint64_t>(n));
    w.uint(v, n);
    return w.take();
  }

  void enumerate(int n, const EnumFn& fn) const override {
    for (std::uint32_t v = 0; v < (1u << n); ++v) fn(params(n, v), FiniteModel(n, {v}));
  }

  std::vector<BitVec> param_codes_for(const FiniteModel& a) const override {
    if (a.cardinality() != 1) return {};
    return {params(a.universe_bits(), a.elements()[0])};
  }

  std::optional<FiniteModel> decode_params(BitReader& r) const override {
    auto n = r.gamma();
    if (!n || *n < 1 || *n > kMaxFamilyUniverse) return std::nullopt;
    auto v = r.uint(static_cast<int>(*n));
    if (!v) return std::nullopt;
    return FiniteModel(static_cast<int>(*n), {static_cast<std::uint32_t>(*v)});
  }
};

// ---------------------------------------------------------------------------
// Hamming balls. Params: gamma(n) center[n] gamma(r+1)
// ---------------------------------------------------------------------------
class HammingBalls final : public ModelFamily {
 public:
  HammingBalls() : ModelFamily("hamming_balls", "110") {}
  bool contains_all_singletons() const override { return true; }  // r = 0
  bool supports_universe(int n) const override { return n >= 1 && n <= kMaxFamilyUniverse; }

  static std::uint64_t ball_size(int n, int r) {
    std::uint64_t s = 0;
    for (int i = 0; i <= r; ++i) s += binomial(n, i);
    return s;
  }

  static FiniteModel build(int n, std::uint32_t center, int r) {
    std::vector<std::uint32_t> elems;
    for (std::uint32_t v = 0; v < (1u << n); ++v)
      if (std::popcount(v ^ center) <= r) elems.push_back(v);
    return FiniteModel(n, std::move(elems));
  }

  static BitVec params(int n, std::uint32_t center, int r) {
    BitWriter w;
    w.gamma(static_cast<std::uint64_t>(n));
    w.uint(center, n);
    w.gamma(static_cast<std::uint64_t>(r) + 1);
    return w.take();
  }

  void enumerate(int n, const EnumFn& fn) const override {
    for (std::uint32_t c = 0; c < (1u << n); ++c)
      for (int r = 0; r <= n; ++r) fn(params(n, c, r), build(n, c, r));
  }

  std::vector<BitVec> param_codes_for(const FiniteModel& a) const override {
    const int n = a.universe_bits();
    int r = -1;
    for (int cand = 0; cand <= n; ++cand)
      if (ball_size(n, cand) == a.cardinality()) {
        r = cand;
        break;
      }
    if (r < 0) return {};
    std::vector<BitVec> codes;
    if (r == n) {
      // The full universe: every center works.
      for (std::uint32_t c = 0; c < (1u << n); ++c) codes.push_back(params(n, c, r));
      return codes;
    }
    for (auto c : a.elements()) {
      bool ok = true;
      for (auto v : a.elements())
        if (std::popcount(v ^ c) > r) {
          ok = false;
          break;
        }
      if (ok) codes.push_back(params(n, c, r));
    }
    return codes;
  }

  std::optional<FiniteModel> decode_params(BitReader& r) const override {
    auto n = r.gamma();
    if (!n || *n < 1 || *n > kMaxFamilyUniverse) return std::nullopt;
    auto c = r.uint(static_cast<int>(*n));
    if (!c) return std::nullopt;
    auto rp1 = r.gamma();
    if (!rp1 || *rp1 < 1 || *rp1 > *n + 1) return std::nullopt;
    return build(static_cast<int>(*n), static_cast<std::uint32_t>(*c), static_cast<int>(*rp1 - 1));
  }
};

// ---------------------------------------------------------------------------
// Prefix sets: all strings extending a prefix of length t in [0,n].
// Params: gamma(n) gamma(t+1) prefix[t]
// ---------------------------------------------------------------------------
class PrefixSets final : public ModelFamily {
 public:
  PrefixSets() : ModelFamily("prefix_sets", "1110") {}
  bool contains_all_singletons() const override { return true; }  // t = n
  bool supports_universe(int n) const override { return n >= 1 && n <= kMaxFamilyUniverse; }

  static FiniteModel build(int n, int t, std::uint32_t prefix) {
    std::vector<std::uint32_t> elems;
    const std::uint32_t lo = prefix << (n - t);
    elems.reserve(1ull << (n - t));
    for (std::uint32_t v = lo; v < lo + (1u << (n - t)); ++v) elems.push_back(v);
    return FiniteModel(n, std::move(elems));
  }

  static BitVec params(int n, int t, std::uint32_t prefix) {
    BitWriter w;
    w.gamma(static_cast<std::uint64_t>(n));
    w.gamma(static_cast<std::uint64_t>(t) + 1);
    w.uint(prefix, t);
    return w.take();
  }

  void enumerate(int n, const EnumFn& fn) const override {
    for (int t = 0; t <= n; ++t)
      for (std::uint32_t p = 0; p < (1u << t); ++p) fn(params(n, t, p), build(n, t, p));
  }

  std::vector<BitVec> param_codes_for(const FiniteModel& a) const override {
    const int n = a.universe_bits();
    const std::uint64_t size = a.cardinality();
    if ((size & (size - 1)) != 0) return {};
    const int free_bits = ilog2(size);
    const int t = n - free_bits;
    const std::uint32_t lo = a.elements().front();
    if (lo & ((1u << free_bits) - 1)) return {};
    if (a.elements().back() != lo + size - 1) return {};
    // Sorted unique elements spanning [lo, lo+size-1] exactly.
    if (a.elements().size() != size) return {};
    return {params(n, t, lo >> free_bits)};
  }

  std::optional<FiniteModel> decode_params(BitReader& r) const override {
    auto n = r.gamma();
    if (!n || *n < 1 || *n > kMaxFamilyUniverse) return std::nullopt;
    auto tp1 = r.gamma();
    if (!tp1 || *tp1 < 1 || *tp1 > *n + 1) return std::nullopt;
    const int t = static_cast<int>(*tp1 - 1);
    auto p = r.uint(t);
    if (!p) return std::nullopt;
    return build(static_cast<int>(*n), t, static_cast<std::uint32_t>(*p));
  }
};

// ---------------------------------------------------------------------------
// Lex intervals [lo, hi]. Params: gamma(n) lo[n] hi[n], lo <= hi.
// ---------------------------------------------------------------------------
class LexIntervals final : public ModelFamily {
 public:
  LexIntervals() : ModelFamily("lex_intervals", "11110") {}
  bool contains_all_singletons() const override { return true; }  // lo = hi
  bool supports_universe(int n) const override { return n >= 1 && n <= kMaxFamilyUniverse; }

  static FiniteModel build(int n, std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> elems;
    elems.reserve(hi - lo + 1);
    for (std::uint32_t v = lo; v <= hi; ++v) elems.push_back(v);
    return FiniteModel(n, std::move(elems));
  }

  static BitVec params(int n, std::uint32_t lo, std::uint32_t hi) {
    BitWriter w;
    w.gamma(static_cast<std::uint64_t>(n));
    w.uint(lo, n);
    w.uint(hi, n);
    return w.take();
  }

  void enumerate(int n, const EnumFn& fn) const override {
    for (std::uint32_t lo = 0; lo < (1u << n); ++lo)
      for (std::uint32_t hi = lo; hi < (1u << n); ++hi) fn(params(n, lo, hi), build(n, lo, hi));
  }

  std::vector<BitVec> param_codes_for(const FiniteModel& a) const override {
    const std::uint32_t lo = a.elements().front(), hi = a.elements().back();
    if (a.cardinality() != static_cast<std::uint64_t>(hi) - lo + 1) return {};
    return {params(a.universe_bits(), lo, hi)};
  }

  std::optional<FiniteModel> decode_params(BitReader& r) const override {
    auto n = r.gamma();
    if (!n || *n < 1 || *n > kMaxFamilyUniverse) return std::nullopt;
    auto lo = r.uint(static_cast<int>(*n));
    auto hi = r.uint(static_cast<int>(*n));
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return build(static_cast<int>(*n), static_cast<std::uint32_t>(*lo), static_cast<std::uint32_t>(*hi));
  }
};

// ---------------------------------------------------------------------------
// Plane lines: non-vertical lines v = a*u + b over GF(2^k), encoded as sets
// of 2k-bit points u||v. Does not contain singletons, which is the point.
// Params: gamma(k) a[k] b[k]
// ---------------------------------------------------------------------------
class PlaneLines final : public ModelFamily {
 public:
  PlaneLines() : ModelFamily("plane_lines", "111110") {}
  bool contains_all_singletons() const override { return false; }
  bool supports_universe(int n) const override { return n >= 4 && n <= kMaxFamilyUniverse && n % 2 == 0; }

  static FiniteModel build(int k, std::uint32_t a, std::uint32_t b) {
    const GF2k& f = GF2k::field(k);
    std::vector<std::uint32_t> elems;
    elems.reserve(f.order());
    for (std::uint32_t u = 0; u < f.order(); ++u)
      elems.push_back((u << k) | f.add(f.mul(a, u), b));
    return FiniteModel(2 * k, std::move(elems));
  }

  static BitVec params(int k, std::uint32_t a, std::uint32_t b) {
    BitWriter w;
    w.gamma(static_cast<std::uint64_t>(k));
    w.uint(a, k);
    w.uint(b, k);
    return w.take();
  }

  void enumerate(int n, const EnumFn& fn) const override {
    const int k = n / 2;
    const GF2k& f = GF2k::field(k);
    for (std::uint32_t a = 0; a < f.order(); ++a)
      for (std::uint32_t b = 0; b < f.order(); ++b) fn(params(k, a, b), build(k, a, b));
  }

  std::vector<BitVec> param_codes_for(const FiniteModel& m) const override {
    const int n = m.universe_bits();
    if (!supports_universe(n)) return {};
    const int k = n / 2;
    const GF2k& f = GF2k::field(k);
    if (m.cardinality() != f.order()) return {};
    const std::uint32_t kmask = f.order() - 1;
    auto u_of = [&](std::uint32_t e) { return e >> k; };
    auto v_of = [&](std::uint32_t e) { return e & kmask; };
    const auto& es = m.elements();
    std::uint32_t u1 = u_of(es[0]), v1 = v_of(es[0]), u2 = u_of(es[1]), v2 = v_of(es[1]);
    if (u1 == u2) return {};
    std::uint32_t a = f.mul(f.add(v1, v2), f.inv(f.add(u1, u2)));
    std::uint32_t b = f.add(v1, f.mul(a, u1));
    for (auto e : es)
      if (v_of(e) != f.add(f.mul(a, u_of(e)), b)) return {};
    return {params(k, a, b)};
  }

  std::optional<FiniteModel> decode_params(BitReader& r) const override {
    auto k = r.gamma();
    if (!k || *k < 2 || *k > 12) return std::nullopt;
    auto a = r.uint(static_cast<int>(*k));
    auto b = r.uint(static_cast<int>(*k));
    if (!a || !b) return std::nullopt;
    return build(static_cast<int>(*k), static_cast<std::uint32_t>(*a), static_cast<std::uint32_t>(*b));
  }
};

// ---------------------------------------------------------------------------
// All nonempty subsets, n <= 4 only. Params: gamma(n) bitmap[2^n]
// ---------------------------------------------------------------------------
class AllSubsets final : public ModelFamily {
 public:
  AllSubsets() : ModelFamily("all_subsets", "1111110") {}
  bool contains_all_singletons() const override { return true; }
  bool supports_universe(int n) const override { return n >= 1 && n <= 4; }

  static FiniteModel build(int n, std::uint32_t bitmap) {
    std::vector<std::uint32_t> elems;
    for (std::uint32_t v = 0; v < (1u << n); ++v)
      if ((bitmap >> v) & 1) elems.push_back(v);
    return FiniteModel(n, std::move(elems));
  }

  static BitVec params(int n, std::uint32_t bitmap) {
    BitWriter w;
    w.gamma(static_cast<std::uint64_t>(n));
    for (std::uint32_t v = 0; v < (1u << n); ++v) w.bit(static_cast<int>((bitmap >> v) & 1));
    return w.take();
  }

  void enumerate(int n, const EnumFn& fn) const override {
    for (std::uint32_t bm = 1; bm < (1u << (1u << n)); ++bm) fn(params(n, bm), build(n, bm));
  }

  std::vector<BitVec> param_codes_for(const FiniteModel& a) const override {
    if (!supports_universe(a.universe_bits())) return {};
    std::uint32_t bm = 0;
    for (auto v : a.elements()) bm |= 1u << v;
    return {params(a.universe_bits(), bm)};
  }

  std::optional<FiniteModel> decode_params(BitReader& r) const override {
    auto n = r.gamma();
    if (!n || *n < 1 || *n > 4) return std::nullopt;
    std::uint32_t bm = 0;
    for (std::uint32_t v = 0; v < (1u << *n); ++v) {
      auto b = r.bit();
      if (!b) return std::nullopt;
      if (*b) bm |= 1u << v;
    }
    if (!bm) return std::nullopt;
    return build(static_cast<int>(*n), bm);
  }
};

}  // namespace

const std::vector<const ModelFamily*>& builtin_model_families() {
  static const Cylinders cylinders;
  static const Singletons singletons;
  static const HammingBalls hamming;
  static const PrefixSets prefixes;
  static const LexIntervals intervals;
  static const PlaneLines lines;
  static const AllSubsets subsets;
  static const std::vector<const ModelFamily*> all = {&cylinders, &singletons, &hamming,
                                                      &prefixes,  &intervals,  &lines, &subsets};
  return all;
}

const ModelFamily& find_model_family(const std::string& id) {
  for (const auto* f : builtin_model_families())
    if (f->id() == id) return *f;
  fail(Errc::UnknownFamily, "no model family named '" + id + "'");
}

}  // namespace alstat
