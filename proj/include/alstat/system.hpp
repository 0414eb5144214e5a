#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alstat/bits.hpp"
#include "alstat/bitstring.hpp"
#include "alstat/distribution.hpp"
#include "alstat/exact.hpp"
#include "alstat/families.hpp"
#include "alstat/model.hpp"

namespace alstat {

// ===========================================================================
// Codebook v1
//
// One global prefix-free code space over four object kinds. Scheme headers:
//
//   00      literal string          gamma(n) + n raw bits, n <= 24
//   01      model by family         famid + family params
//   100     two-part string         <model code> + ceil(log2|A|)-bit index
//   101     distribution by family  dfamid + params
//             dfamid 0   uniform     <model body> (famid+params)
//             dfamid 10  mixture     <body A> <body B>, P = (u(A)+u(B))/2
//   1100    two-part string (dist)  <dist code> + Shannon code of x
//   1101    literal tuple           gamma(l) gamma(n) + l*n bits, 2<=l<=8
//   11100   two-part tuple (model)  gamma(l) <model code> + l indices
//   11101   two-part tuple (dist)   gamma(l) <dist code> + l Shannon codes
//   11110   literal model           gamma(n) + 2^n characteristic bitmap
//   111110  literal distribution    gamma(n) + bitmap + gamma(num) gamma(den)
//                                   per support element in lex order,
//                                   lowest terms, exact sum 1
//
// The four "literal" schemes are total on their kinds for n <= 24 and have
// no length bound; they guarantee a code for every object. All other
// schemes are finite by construction: they exist only over universes
// n <= max_universe (a codebook parameter, at most 8) and only for codes of
// at most 40 bits total, which keeps every enumeration and a-priori sum
// exact. A 1-tuple is identified with its element and has no tuple code.
//
// Conditional codes, per condition kind, are a second prefix-free space:
//   0 <any unconditional code>
//   cond model A:   1 + index of x in A            (strings in A)
//   cond tuple xs:  1 + gamma(a+1) gamma(b+1) + delta(rank+1)
//                   rank in the enumeration of registry distributions with
//                   C(P) <= a and -log2 likelihood(xs) <= b   (distributions)
//   cond dist P:    1 0 + Shannon_P(x)             (strings in supp P)
//                   1 1 + gamma(l) + Shannon codes (tuples, l >= 2)
// ===========================================================================

struct Code {
  BitVec bits;
  std::string scheme;
};

struct ComplexityReport {
  std::int64_t value = 0;  // whole bits
  Code witness;
};

struct AprioriMass {
  Rat value;
  std::uint64_t terms = 0;  // number of codes summed
};

using Object = std::variant<BitString, FiniteModel, RationalDistribution, StringTuple>;

/// Fixed header sizes; the documented constants behind every "plus a small
/// header" statement in the docs and tests.
struct HeaderCosts {
  static constexpr int two_part_model = 3;        // C(x) <= C(A) + ceil(log2|A|) + 3
  static constexpr int two_part_dist = 4;         // C(x) <= C(P) + ceil(-log2 P(x)) + 4
  static constexpr int tuple_two_part_model = 5;  // + gamma(l)
  static constexpr int tuple_two_part_dist = 5;   // + gamma(l)
  static constexpr int conditional = 1;           // unconditional codes inside a condition
  static constexpr int uniform_over_fee = 2;      // C(uniform(A)) <= C(A) + 2 for family A
  /// d(xs|P) <= delta(xs,P) + this, globally (millibits).
  static constexpr std::int64_t opt_vs_rand_slack_mb = 3 * kMillibitsPerBit;
};

class DescriptionSystem {
 public:
  struct Options {
    std::vector<std::string> model_families;  // empty = all builtins
    int max_universe = 8;                     // structured schemes live on n <= this (4..8)
  };

  explicit DescriptionSystem(Options opts = {});

  const Options& options() const { return opts_; }
  const std::vector<const ModelFamily*>& families() const { return fams_; }
  /// Codebook identity; embedded in every report and baseline file.
  std::string version() const;
  std::string codebook_json() const;
  int max_universe() const { return opts_.max_universe; }
  static constexpr int kMaxCodeLen = 40;
  static constexpr int kMaxTupleLen = 8;

  // --- complexity / a priori ------------------------------------------------
  ComplexityReport complexity(const Object& obj) const;
  AprioriMass apriori(const Object& obj) const;
  ComplexityReport conditional_complexity(const Object& obj, const Object& cond) const;

  /// Exact Kraft sum of every decodable code with length <= max_len over
  /// universes n <= max_universe.
  Rat kraft_audit(int max_len, int max_universe) const;
  Rat kraft_audit() const { return kraft_audit(kMaxCodeLen, opts_.max_universe); }

  /// Full decoder (the audit oracle): the unique object of a code, if any.
  std::optional<Object> decode(const BitVec& code) const;
  std::optional<Object> decode_conditional(const BitVec& code, const Object& cond) const;

  // --- registries ------------------------------------------------------------
  struct ModelEntry {
    std::uint32_t ext;                // extension id
    std::vector<BitVec> codes;        // registry codes (<= 40), sorted
    std::int64_t canonical_len = 0;   // literal-model code length
    std::int64_t complexity = 0;      // min over all codes of this model
  };
  struct DistEntry {
    enum Kind : std::uint8_t { kUniform, kMixture, kExplicit } kind = kUniform;
    std::uint32_t a = 0, b = 0;       // extension ids (uniform: a; mixture: a,b)
    std::shared_ptr<const RationalDistribution> explicit_dist;
    std::vector<BitVec> codes;
    std::int64_t canonical_len = 0;
    std::int64_t complexity = 0;
  };
  struct Registry {
    int n = 0;
    std::vector<FiniteModel> exts;
    std::map<std::vector<std::uint32_t>, std::uint32_t> ext_ids;
    std::vector<ModelEntry> models;   // sorted by extension content
    std::map<std::uint32_t, std::uint32_t> model_by_ext;
    std::vector<DistEntry> dists;     // sorted by (complexity, content)
    std::map<std::tuple<int, std::uint32_t, std::uint32_t, std::string>, std::uint32_t> dist_keys;

    const FiniteModel& ext_of(std::uint32_t id) const { return exts[id]; }
    Rat dist_prob(const DistEntry& e, std::uint32_t v) const;
    Rat dist_likelihood(const DistEntry& e, const StringTuple& xs) const;
    RationalDistribution materialize(const DistEntry& e) const;
    std::string dist_brief(const DistEntry& e) const;  // compact human-readable form
  };
  const Registry& registry(int n) const;

  std::optional<std::size_t> find_model(const Registry& reg, const FiniteModel& m) const;
  std::optional<std::size_t> find_dist(const Registry& reg, const RationalDistribution& d) const;

  /// Admissible-distribution enumeration relative to a tuple: registry order
  /// restricted to C(P) <= a and ceil(-log2 likelihood) <= b; backs the
  /// conditional rank codes.
  struct TupleView {
    std::vector<std::int64_t> complexity;  // per dist entry, registry order
    std::vector<std::int64_t> ll_ceil;     // ceil(-log2 likelihood), -1 = zero likelihood
  };
  const TupleView& tuple_view(const StringTuple& xs) const;

  // --- models module operations ----------------------------------------------
  /// Every family model over B^n with complexity <= cap_bits, each extension
  /// once, in canonical (extension) order.
  std::vector<FiniteModel> enumerate_models(const std::string& family_id, int n,
                                            std::int64_t cap_bits) const;

  std::int64_t literal_string_len(int n) const { return 2 + gamma_len(n) + n; }

 private:
  struct CodeCand {  // candidate code during minimization
    std::int64_t len;
    const char* scheme;
    std::function<BitVec()> build;
  };

  void require_universe(int n, const char* what) const;
  void build_registry(Registry& reg) const;
  void enumerate_canonical_dists(int n, Registry& reg) const;
  std::int64_t canonical_model_len(int n) const { return 5 + gamma_len(n) + (1ll << n); }
  std::int64_t canonical_dist_len(const RationalDistribution& d) const;
  BitVec canonical_model_code(const FiniteModel& m) const;
  BitVec canonical_dist_code(const RationalDistribution& d) const;
  BitVec literal_string_code(const BitString& x) const;
  BitVec literal_tuple_code(const StringTuple& xs) const;

  ComplexityReport complexity_string(const BitString& x) const;
  ComplexityReport complexity_model(const FiniteModel& m) const;
  ComplexityReport complexity_dist(const RationalDistribution& d) const;
  ComplexityReport complexity_tuple(const StringTuple& xs) const;

  Options opts_;
  std::vector<const ModelFamily*> fams_;
  mutable std::map<int, std::unique_ptr<Registry>> registries_;
  mutable std::map<std::string, std::unique_ptr<TupleView>> tuple_views_;
};

}  // namespace alstat
