#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alstat/bits.hpp"
#include "alstat/model.hpp"

namespace alstat {

std::uint64_t binomial(int n, int k);

/// A decidable family of finite sets with a parameter codec. A model code is
/// scheme header "01" + famid + params; families deal in the params part.
///
/// Enumeration is exhaustive over the parameter space of one universe and
/// yields each (params, extension) pair exactly once; distinct parameters may
/// share an extension (e.g. every center describes the radius-n ball), and
/// all such codes count toward a-priori mass.
class ModelFamily {
 public:
  virtual ~ModelFamily() = default;

  const std::string& id() const { return id_; }
  const BitVec& famid() const { return famid_; }
  virtual bool contains_all_singletons() const = 0;
  virtual bool supports_universe(int n) const = 0;

  using EnumFn = std::function<void(const BitVec& params, const FiniteModel& m)>;
  virtual void enumerate(int n, const EnumFn& fn) const = 0;

  /// Every parameter code of this family whose extension equals m, found by
  /// direct reconstruction (no enumeration), so it works at any admissible n.
  virtual std::vector<BitVec> param_codes_for(const FiniteModel& m) const = 0;

  virtual std::optional<FiniteModel> decode_params(BitReader& r) const = 0;

 protected:
  ModelFamily(std::string id, const char* famid_bits) : id_(std::move(id)), famid_(famid_bits) {}

 private:
  std::string id_;
  BitVec famid_;
};

/// Built-in families, in famid order: cylinders, singletons, hamming_balls,
/// prefix_sets, lex_intervals, plane_lines, all_subsets.
const std::vector<const ModelFamily*>& builtin_model_families();
const ModelFamily& find_model_family(const std::string& id);

}  // namespace alstat
