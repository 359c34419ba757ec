#pragma once

/// Closed-form side of the certificates: the dimension of the locus of
/// degree-d plane curves through a star configuration of l lines, and the
/// upper bounds it is checked against.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starconf/field.hpp"

namespace starconf {

using Count = std::int64_t;

/// C(n, k), zero outside 0 <= k <= n.
constexpr Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (Count i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

enum class Branch {
  Empty,     // d < l - 1: no curve of degree d contains the configuration
  Dominant,  // l in {2,3,4}, or l = 5 and d >= 5: every curve of degree d qualifies
  Luroth,    // (d, l) = (4, 5): a hypersurface in the space of quartics
  Expected,  // l >= 6: the parameter count is attained
};

inline std::string to_string(Branch b) {
  switch (b) {
    case Branch::Empty: return "empty";
    case Branch::Dominant: return "dominant";
    case Branch::Luroth: return "luroth";
    case Branch::Expected: return "expected";
  }
  return "unknown";
}

struct TheoremValue {
  Count d;
  Count l;
  /// Dimension of the locus; empty when the locus is empty.
  std::optional<Count> value;
  Branch branch;

  bool empty() const { return !value.has_value(); }
};

inline TheoremValue theorem_value(Count d, Count l) {
  if (d < 0 || l < 2) throw DomainError("theorem_value needs d >= 0 and l >= 2");
  const Count ambient = binomial(d + 2, 2);
  if (d < l - 1) return {d, l, std::nullopt, Branch::Empty};
  if (l <= 4 || (l == 5 && d >= 5)) return {d, l, ambient - 1, Branch::Dominant};
  if (l == 5) return {d, l, ambient - 2, Branch::Luroth};
  return {d, l, ambient - binomial(l, 2) + 2 * l - 1, Branch::Expected};
}

struct UpperBound {
  std::string source;
  Count value;
  friend bool operator==(const UpperBound&, const UpperBound&) = default;
};

inline constexpr const char* kAmbientBound = "ambient";
inline constexpr const char* kParameterCountBound = "parameter-count";
/// Luroth quartics form a hypersurface of degree 54 among plane quartics.
/// Consumed as an external fact; nothing in this library proves it.
inline constexpr const char* kLurothBound = "luroth-hypersurface";

/// Known upper bounds on dim S(d, l) for d >= l - 1.
inline std::vector<UpperBound> upper_bounds(Count d, Count l) {
  if (l < 2 || d < l - 1) throw DomainError("upper_bounds needs l >= 2 and d >= l - 1");
  const Count ambient = binomial(d + 2, 2);
  std::vector<UpperBound> bounds{
      {kAmbientBound, ambient - 1},
      {kParameterCountBound, ambient - binomial(l, 2) + 2 * l - 1},
  };
  if (d == 4 && l == 5) bounds.push_back({kLurothBound, 13});
  return bounds;
}

inline Count min_upper_bound(const std::vector<UpperBound>& bounds) {
  if (bounds.empty()) throw DomainError("no upper bounds");
  return std::min_element(bounds.begin(), bounds.end(), [](const auto& a, const auto& b) { return a.value < b.value; })
      ->value;
}

/// Upper bound for hypersurfaces of degree d in P^n through a star
/// configuration of l hyperplanes:
///   min{ C(d+n, n) - 1, C(d+n, n) - C(l, n) + n*l - 1 }.
inline Count pn_upper_bound(Count n, Count d, Count l) {
  if (n < 2 || l < n || d < l - 1) throw DomainError("pn_upper_bound needs n >= 2, l >= n, d >= l - 1");
  const Count ambient = binomial(d + n, n);
  return std::min(ambient - 1, ambient - binomial(l, n) + n * l - 1);
}

}  // namespace starconf
