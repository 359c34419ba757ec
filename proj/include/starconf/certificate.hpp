#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "starconf/tangent.hpp"
#include "starconf/theorem.hpp"

namespace starconf {

enum class Verdict { Certified, Gap, Empty };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "CERTIFIED";
    case Verdict::Gap: return "GAP";
    case Verdict::Empty: return "EMPTY";
  }
  return "UNKNOWN";
}

inline FieldChoice field_choice(const RationalField&) { return {true, 0}; }
inline FieldChoice field_choice(const PrimeField& f) { return {false, f.prime()}; }

/// Outcome of checking one (d, l) pair: a computed lower bound set against the
/// closed-form value and the known upper bounds.
struct DimensionCertificate {
  Count d = 0;
  Count l = 0;
  FieldChoice field;
  std::vector<std::uint64_t> seeds;
  /// Tangent dimension reached by each trial, in trial order.
  std::vector<Count> trial_dims;
  std::optional<Count> lower_bound;
  std::optional<Count> theorem_value;
  Branch branch = Branch::Empty;
  std::vector<UpperBound> upper_bounds;
  Verdict verdict = Verdict::Empty;

  std::optional<Count> min_upper() const {
    if (upper_bounds.empty()) return std::nullopt;
    return min_upper_bound(upper_bounds);
  }
};

/// CERTIFIED when lower = theorem <= min(upper); GAP otherwise.
inline Verdict judge(Count lower, Count theorem, const std::vector<UpperBound>& upper) {
  return lower == theorem && theorem <= min_upper_bound(upper) ? Verdict::Certified : Verdict::Gap;
}

template <ExactField K>
DimensionCertificate certify(Count d, Count l, const K& field, int trials, std::uint64_t seed,
                             const SamplingOptions<K>& opts = {}) {
  DimensionCertificate c;
  c.d = d;
  c.l = l;
  c.field = field_choice(field);
  const TheoremValue tv = theorem_value(d, l);
  c.branch = tv.branch;
  if (tv.empty()) {
    c.verdict = Verdict::Empty;
    return c;
  }
  const auto lb = lower_bound_dim_S(d, l, field, trials, seed, opts);
  for (const auto& t : lb.trials) {
    c.seeds.push_back(t.seed);
    c.trial_dims.push_back(t.tangent_dim);
  }
  c.lower_bound = lb.lower_bound;
  c.theorem_value = tv.value;
  c.upper_bounds = upper_bounds(d, l);
  c.verdict = judge(lb.lower_bound, *tv.value, c.upper_bounds);
  return c;
}

inline nlohmann::json to_json(const DimensionCertificate& c) {
  nlohmann::json j;
  j["d"] = c.d;
  j["l"] = c.l;
  j["field"] = c.field.name();
  if (!c.field.rational) j["prime"] = c.field.prime;
  j["seeds"] = c.seeds;
  j["lower_bound"] = c.lower_bound ? nlohmann::json(*c.lower_bound) : nlohmann::json(nullptr);
  j["theorem_value"] = c.theorem_value ? nlohmann::json(*c.theorem_value) : nlohmann::json(nullptr);
  j["upper_bounds"] = nlohmann::json::array();
  for (const auto& b : c.upper_bounds) j["upper_bounds"].push_back({{"source", b.source}, {"value", b.value}});
  j["verdict"] = to_string(c.verdict);
  return j;
}

/// Forms, points and field of a plane configuration.
template <ExactField K>
nlohmann::json star_to_json(const StarConfiguration<K>& x) {
  auto element = [](const typename K::Element& e) -> nlohmann::json {
    if constexpr (std::is_same_v<K, PrimeField>) {
      return e.value();
    } else {
      return e.to_string();
    }
  };
  const FieldChoice fc = field_choice(x.field());
  nlohmann::json j;
  j["field"] = fc.name();
  if (!fc.rational) j["prime"] = fc.prime;
  j["forms"] = nlohmann::json::array();
  for (const auto& f : x.forms()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : f.coefficients()) row.push_back(element(c));
    j["forms"].push_back(row);
  }
  j["points"] = nlohmann::json::array();
  for (const auto& [label, p] : x.points()) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : p.coordinates()) coords.push_back(element(c));
    j["points"].push_back({{"label", {label.i, label.j}}, {"coordinates", coords}});
  }
  return j;
}

}  // namespace starconf
