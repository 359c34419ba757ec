#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "starconf/field.hpp"

namespace starconf {

/// Dense row-major matrix over an exact field. Shape and entries are fixed at
/// construction.
template <ExactField K>
class ExactMatrix {
 public:
  using Field = K;
  using Element = typename K::Element;

  ExactMatrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

  ExactMatrix(K field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match its shape");
    for (const auto& e : entries_) {
      if (!field_.owns(e)) throw FieldMismatch("matrix entry from a foreign field");
    }
  }

  static ExactMatrix from_rows(K field, const std::vector<std::vector<Element>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Element> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& row : rows) {
      if (row.size() != cols) throw DomainError("ragged matrix rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return ExactMatrix(std::move(field), rows.size(), cols, std::move(flat));
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Element& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Element>& entries() const { return entries_; }

  ExactMatrix transpose() const {
    std::vector<Element> t;
    t.reserve(entries_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) t.push_back((*this)(r, c));
    return ExactMatrix(field_, cols_, rows_, std::move(t));
  }

 private:
  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

namespace detail {

/// Rank of an integer matrix by Bareiss fraction-free elimination.
///
/// Pivot: the first nonzero entry in the current column, scanning rows from
/// the top. After step k every active entry is a (k+1)-minor of the input, so
/// the division by the previous pivot is exact.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const mpz_class& p = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class f = a[r][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[r][j] = (p * a[r][j] - f * a[rank][j]) / prev
        tmp = p * a[r][j];
        tmp -= f * a[rank][j];
        mpz_divexact(a[r][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

inline std::size_t modular_rank(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const std::uint64_t inv = inv_mod(a[rank * cols + c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t lead = a[r * cols + c];
      if (lead == 0) continue;
      const std::uint64_t f = mul_mod(lead, inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mul_mod(f, a[rank * cols + j], p);
        std::uint64_t& x = a[r * cols + j];
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank. Rational matrices have each row cleared of denominators and go
/// through Bareiss elimination; prime-field matrices use ordinary elimination.
inline std::size_t rank(const ExactMatrix<RationalField>& m) {
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).value().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).value();
      a[r][c] = q.get_num() * (den / q.get_den());
    }
  }
  return detail::bareiss_rank(std::move(a), m.cols());
}

inline std::size_t rank(const ExactMatrix<PrimeField>& m) {
  std::vector<std::uint64_t> a;
  a.reserve(m.rows() * m.cols());
  for (const auto& e : m.entries()) a.push_back(e.value());
  return detail::modular_rank(std::move(a), m.rows(), m.cols(), m.field().prime());
}

/// Basis of the right kernel {v : m v = 0}, via reduced row echelon form.
template <ExactField K>
std::vector<std::vector<typename K::Element>> kernel_basis(const ExactMatrix<K>& m) {
  using E = typename K::Element;
  const K& field = m.field();
  std::vector<std::vector<E>> a(m.rows(), std::vector<E>(m.cols(), field.zero()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c].is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[rank], a[pivot]);
    const E inv = a[rank][c].inverse();
    for (auto& x : a[rank]) x = x * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const E f = a[r][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[r][j] = a[r][j] - f * a[rank][j];
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<E>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<E> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace starconf
