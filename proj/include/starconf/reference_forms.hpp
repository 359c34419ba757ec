#pragma once

/// Explicit line arrangements with small integer coefficients, together with
/// the row and column labels of the structured 2l x 2l evaluation matrices.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "starconf/star.hpp"

namespace starconf {

/// x0, x1, x2, x0+x1+x2, x0+2x1+3x2: a star configuration of five lines whose
/// tangent computation exhibits the Luroth quartic defect.
template <ExactField K>
std::vector<LinearForm<K>> luroth_forms(const K& field) {
  using F = LinearForm<K>;
  return {F::from_ints(field, {1, 0, 0}), F::from_ints(field, {0, 1, 0}), F::from_ints(field, {0, 0, 1}),
          F::from_ints(field, {1, 1, 1}), F::from_ints(field, {1, 2, 3})};
}

/// The five forms above plus x0+3x1+10x2.
template <ExactField K>
std::vector<LinearForm<K>> six_line_forms(const K& field) {
  auto forms = luroth_forms(field);
  forms.push_back(LinearForm<K>::from_ints(field, {1, 3, 10}));
  return forms;
}

/// `l` general forms whose first min(l, 6) members are six_line_forms. Further
/// forms x0 + b*x1 + c*x2 are found by a deterministic search outward in
/// max(|b|, |c|), keeping the list general.
template <ExactField K>
std::vector<LinearForm<K>> reference_forms(const K& field, std::size_t l) {
  if (l < 2) throw DomainError("need at least two forms");
  auto forms = six_line_forms(field);
  if (l <= forms.size()) {
    forms.erase(forms.begin() + static_cast<std::ptrdiff_t>(l), forms.end());
    return forms;
  }
  for (std::int64_t radius = 1; forms.size() < l; ++radius) {
    if (radius > 1000) throw GenericityError("no general extension found", {});
    for (std::int64_t b = -radius; b <= radius && forms.size() < l; ++b) {
      for (std::int64_t c = -radius; c <= radius && forms.size() < l; ++c) {
        if (std::max(std::llabs(b), std::llabs(c)) != radius) continue;
        forms.push_back(LinearForm<K>::from_ints(field, {1, b, c}));
        if (!is_general<K>(forms)) forms.pop_back();
      }
    }
  }
  return forms;
}

/// A column H * Q_t of an evaluation matrix, H = L_form.
struct ColumnLabel {
  std::size_t form;
  std::size_t q;
  friend bool operator==(const ColumnLabel&, const ColumnLabel&) = default;
};

/// Column order of the 12 x 12 six-line matrix:
/// L2Q4, L1Q4, L3Q5, L2Q5, L1Q6, L3Q6, L6Q1, L3Q2, L6Q2, L6Q3, L4Q3, L5Q1.
inline std::vector<ColumnLabel> six_line_columns() {
  return {{2, 4}, {1, 4}, {3, 5}, {2, 5}, {1, 6}, {3, 6}, {6, 1}, {3, 2}, {6, 2}, {6, 3}, {4, 3}, {5, 1}};
}

/// Row order of the 12 x 12 six-line matrix, as in its block-triangular layout.
inline std::vector<PointLabel> six_line_rows() {
  return {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {1, 6}, {1, 5}, {2, 6}, {2, 3}, {3, 4}, {4, 6}, {1, 2}};
}

/// Six-line columns followed by L2Q_k, L1Q_k for k = 7..l.
inline std::vector<ColumnLabel> block_columns(std::size_t l) {
  auto cols = six_line_columns();
  for (std::size_t k = 7; k <= l; ++k) {
    cols.push_back({2, k});
    cols.push_back({1, k});
  }
  return cols;
}

/// Six-line rows followed by p_{1,k}, p_{2,k} for k = 7..l.
inline std::vector<PointLabel> block_rows(std::size_t l) {
  auto rows = six_line_rows();
  for (std::size_t k = 7; k <= l; ++k) {
    rows.push_back({1, k});
    rows.push_back({2, k});
  }
  return rows;
}

}  // namespace starconf
