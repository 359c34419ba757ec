#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Rank by textbook Gaussian elimination over mpq_class (no fraction-free tricks).
inline std::size_t naive_rational_rank(std::vector<std::vector<mpq_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Number of exponent vectors of length `vars` summing to d, by exhaustive search.
inline std::size_t count_monomials(std::size_t vars, unsigned d) {
  std::size_t count = 0;
  std::vector<unsigned> e(vars, 0);
  for (;;) {
    unsigned sum = 0;
    for (auto x : e) sum += x;
    count += sum == d;
    std::size_t k = 0;
    while (k < vars && e[k] == d) e[k++] = 0;
    if (k == vars) break;
    ++e[k];
  }
  return count;
}

/// Binomial coefficient by Pascal's triangle.
inline long long pascal(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<std::vector<long long>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][k];
}

/// Coefficient of t^1 of a polynomial in t of degree <= deg, given its values
/// at t = 0, 1, ..., deg (Lagrange interpolation, exact over Q).
inline mpq_class linear_coefficient(const std::vector<mpq_class>& values) {
  const int n = static_cast<int>(values.size());
  mpq_class result = 0;
  for (int i = 0; i < n; ++i) {
    // L_i(t) = prod_{j != i} (t - j) / (i - j); its t^1 coefficient is
    // sum_{k != i} prod_{j != i, k} (-j) / prod_{j != i} (i - j).
    mpq_class denom = 1;
    for (int j = 0; j < n; ++j)
      if (j != i) denom *= (i - j);
    mpq_class lin = 0;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      mpq_class prod = 1;
      for (int j = 0; j < n; ++j)
        if (j != i && j != k) prod *= -j;
      lin += prod;
    }
    result += values[i] * lin / denom;
  }
  return result;
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// A random prime in [2^29, 2^30).
inline std::uint64_t random_30bit_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << 29, (1ULL << 30) - 1);
  for (std::uint64_t n = dist(rng) | 1ULL;; n += 2)
    if (n < (1ULL << 30) && trial_division_prime(n)) return n;
}

}  // namespace oracle
