#pragma once

/// Tangent-space dimension of the locus of degree-d plane curves containing a
/// star configuration.
///
/// The curves in question are exactly the forms sum_i M_i * hat(i) with
/// deg M_i = d - l + 1. Differentiating that parametrization at data
/// (L_1..L_l, M_1..M_l) gives the tangent space
///
///   I_d,  I = (hat(1), ..., hat(l)) + (Q_1, ..., Q_l),
///   Q_j = sum_{i != j} M_i * double_hat(j, i),
///
/// and dim I_d - 1 is a lower bound for the dimension of the locus, attained
/// for generic data. Two independent routes to dim I_d are provided:
/// `tangent_dim_direct` spans I_d inside S_d, `tangent_dim_points` evaluates
/// the products x_k * Q_i at the configuration points and adds dim (I_X)_d.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "starconf/reference_forms.hpp"
#include "starconf/star.hpp"
#include "starconf/theorem.hpp"

namespace starconf {

/// Dimension of the degree-d component of the ideal generated by `generators`.
///
/// Rows of the underlying matrix are the coefficient vectors of m * g for every
/// generator g of degree <= d and every monomial m of degree d - deg g.
/// Generators of degree above d contribute nothing; a nonzero constant
/// generator makes the component all of S_d.
template <ExactField K>
Count ideal_component_dim(const K& field, std::size_t vars, std::span<const HomogeneousPoly<K>> generators, unsigned d) {
  for (const auto& g : generators) {
    require_same_field(field, g.field());
    if (g.variables() != vars) throw DomainError("generator in the wrong number of variables");
  }
  const MonomialBasis basis(vars, d);
  for (const auto& g : generators)
    if (g.degree() == 0 && !g.is_zero()) return static_cast<Count>(basis.size());

  std::vector<typename K::Element> entries;
  std::size_t rows = 0;
  for (const auto& g : generators) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(vars, d - g.degree())) {
      typename HomogeneousPoly<K>::Terms single;
      single.emplace(m, field.one());
      const auto row = (HomogeneousPoly<K>(field, vars, m.degree(), single) * g).coefficients(basis);
      entries.insert(entries.end(), row.begin(), row.end());
      ++rows;
    }
  }
  return static_cast<Count>(rank(ExactMatrix<K>(field, rows, basis.size(), std::move(entries))));
}

/// Q_1..Q_l for a star configuration and multipliers M_1..M_l of a common degree.
template <ExactField K>
std::vector<HomogeneousPoly<K>> build_q_forms(const StarConfiguration<K>& star,
                                              std::span<const HomogeneousPoly<K>> multipliers) {
  const std::size_t l = star.size();
  if (multipliers.size() != l) throw DomainError("need exactly one multiplier per line");
  for (const auto& m : multipliers) {
    require_same_field(star.field(), m.field());
    if (m.variables() != 3) throw DomainError("multiplier in the wrong number of variables");
    if (m.degree() != multipliers.front().degree()) throw DomainError("multipliers of different degrees");
  }
  const unsigned q_degree = multipliers.front().degree() + static_cast<unsigned>(l) - 2;
  std::vector<HomogeneousPoly<K>> q;
  q.reserve(l);
  for (std::size_t j = 1; j <= l; ++j) {
    HomogeneousPoly<K> sum(star.field(), 3, q_degree);
    for (std::size_t i = 1; i <= l; ++i)
      if (i != j) sum = sum + multipliers[i - 1] * star.double_hat(j, i);
    q.push_back(std::move(sum));
  }
  return q;
}

template <ExactField K>
struct TangentProblem {
  StarConfiguration<K> star;
  unsigned d;
  std::vector<HomogeneousPoly<K>> multipliers;
  std::vector<HomogeneousPoly<K>> q_forms;

  std::size_t l() const { return star.size(); }
  const K& field() const { return star.field(); }
};

template <ExactField K>
TangentProblem<K> make_tangent_problem(StarConfiguration<K> star, unsigned d, std::vector<HomogeneousPoly<K>> multipliers) {
  const std::size_t l = star.size();
  if (d + 1 < l) throw DomainError("tangent problem needs d >= l - 1");
  for (const auto& m : multipliers)
    if (m.degree() != d + 1 - l) throw DomainError("multipliers must have degree d - l + 1");
  auto q = build_q_forms<K>(star, multipliers);
  return {std::move(star), d, std::move(multipliers), std::move(q)};
}

/// dim_k I_d computed inside S_d.
template <ExactField K>
Count tangent_dim_direct(const TangentProblem<K>& p) {
  std::vector<HomogeneousPoly<K>> gens = p.star.hat_products();
  gens.insert(gens.end(), p.q_forms.begin(), p.q_forms.end());
  return ideal_component_dim<K>(p.field(), 3, gens, p.d);
}

/// dim_k I_d as rank of the point-evaluation matrix of {x_k * Q_i} plus
/// dim (I_X)_d = C(d+2, 2) - C(l, 2).
template <ExactField K>
Count tangent_dim_points(const TangentProblem<K>& p) {
  const auto l = static_cast<Count>(p.l());
  if (static_cast<Count>(p.d) < l - 1) throw DomainError("point evaluation needs d >= l - 1");
  const auto points = point_list(p.star);
  std::vector<typename K::Element> entries;
  entries.reserve(points.size() * 3 * p.l());
  for (const auto& pt : points) {
    const auto& x = pt.coordinates();
    for (const auto& q : p.q_forms) {
      const auto value = evaluate(q, pt);
      for (std::size_t k = 0; k < 3; ++k) entries.push_back(x[k] * value);
    }
  }
  const ExactMatrix<K> m(p.field(), points.size(), 3 * p.l(), std::move(entries));
  return static_cast<Count>(rank(m)) + binomial(p.d + 2, 2) - binomial(l, 2);
}

/// Evaluation matrix with the given rows p_{i,j} and columns L_r * Q_t.
template <ExactField K>
ExactMatrix<K> labelled_matrix(const TangentProblem<K>& p, std::span<const PointLabel> rows,
                               std::span<const ColumnLabel> cols) {
  const std::size_t l = p.l();
  for (const auto& c : cols)
    if (c.form < 1 || c.form > l || c.q < 1 || c.q > l) throw DomainError("column label outside 1..l");
  std::vector<typename K::Element> entries;
  entries.reserve(rows.size() * cols.size());
  for (const auto& r : rows) {
    if (r.i < 1 || r.j > l || r.i >= r.j) throw DomainError("row label is not a point of the configuration");
    const auto& pt = p.star.point(r.i, r.j);
    for (const auto& c : cols) {
      const auto h = p.star.forms()[c.form - 1].evaluate(pt.coordinates());
      entries.push_back(h * evaluate(p.q_forms[c.q - 1], pt));
    }
  }
  return ExactMatrix<K>(p.field(), rows.size(), cols.size(), std::move(entries));
}

template <ExactField K>
Count paper_matrix_rank(const TangentProblem<K>& p, std::span<const PointLabel> rows, std::span<const ColumnLabel> cols) {
  return static_cast<Count>(rank(labelled_matrix<K>(p, rows, cols)));
}

// ---------------------------------------------------------------------------
// Structured multipliers
// ---------------------------------------------------------------------------

/// Auxiliary lines for the structured multipliers: `avoiding` misses every
/// point of the configuration, `through[k]` passes through exactly one point,
/// namely kStructuredPoints[k].
template <ExactField K>
struct StructuredLines {
  HomogeneousPoly<K> avoiding;
  std::vector<HomogeneousPoly<K>> through;
};

inline const std::array<PointLabel, 5> kStructuredPoints{{{1, 5}, {1, 2}, {2, 6}, {3, 4}, {4, 6}}};

inline constexpr std::int64_t kLineSearchRadius = 50;

namespace detail {

template <ExactField K>
bool misses_all(const StarConfiguration<K>& star, const std::vector<typename K::Element>& w,
                std::optional<PointLabel> except) {
  const LinearForm<K> form(star.field(), w);
  for (const auto& [label, pt] : star.points()) {
    if (except && label == *except) continue;
    if (form.evaluate(pt.coordinates()).is_zero()) return false;
  }
  return true;
}

}  // namespace detail

/// Deterministic search for the auxiliary lines, outward in the max-norm of
/// small integer coefficients.
template <ExactField K>
StructuredLines<K> find_structured_lines(const StarConfiguration<K>& star) {
  if (star.size() < 6) throw DomainError("structured multipliers need l >= 6");
  const K& field = star.field();
  using E = typename K::Element;

  std::optional<HomogeneousPoly<K>> avoiding;
  for (std::int64_t s = 1; s <= kLineSearchRadius && !avoiding; ++s) {
    for (std::int64_t a = -s; a <= s && !avoiding; ++a)
      for (std::int64_t b = -s; b <= s && !avoiding; ++b)
        for (std::int64_t c = -s; c <= s && !avoiding; ++c) {
          if (std::max({std::llabs(a), std::llabs(b), std::llabs(c)}) != s) continue;
          std::vector<E> w{field.from_int(a), field.from_int(b), field.from_int(c)};
          if (detail::misses_all(star, w, std::nullopt)) avoiding = HomogeneousPoly<K>::linear(field, w);
        }
  }
  if (!avoiding) throw GenericityError("no line avoiding the configuration within the search radius", {});

  std::vector<HomogeneousPoly<K>> through;
  for (const auto& label : kStructuredPoints) {
    const auto& pt = star.point(label.i, label.j);
    const auto pencil = kernel_basis(ExactMatrix<K>::from_rows(field, {pt.coordinates()}));
    std::optional<HomogeneousPoly<K>> found;
    for (std::int64_t s = 1; s <= kLineSearchRadius && !found; ++s) {
      for (std::int64_t a = -s; a <= s && !found; ++a)
        for (std::int64_t b = -s; b <= s && !found; ++b) {
          if (std::max(std::llabs(a), std::llabs(b)) != s) continue;
          std::vector<E> w;
          for (std::size_t k = 0; k < 3; ++k) w.push_back(field.from_int(a) * pencil[0][k] + field.from_int(b) * pencil[1][k]);
          if (std::all_of(w.begin(), w.end(), [](const E& e) { return e.is_zero(); })) continue;
          if (detail::misses_all(star, w, label)) found = HomogeneousPoly<K>::linear(field, w);
        }
    }
    if (!found) throw GenericityError("no line through a single configuration point within the search radius", {});
    through.push_back(std::move(*found));
  }
  return {std::move(*avoiding), std::move(through)};
}

/// Structured multipliers for l >= 6:
///   d = l - 1:  M_i = 1
///   d = l:      M_i = G
///   d >= l + 1: M_1 = G1 G2 G^(d-l-1), M_2 = G3 G^(d-l), M_3 = G4 G^(d-l),
///               M_4 = M_5 = G^(d-l+1), M_6 = G5 G^(d-l), M_i = G^(d-l+1) for i >= 7
/// where G misses every point and G1..G5 pass only through p15, p12, p26, p34, p46.
template <ExactField K>
std::vector<HomogeneousPoly<K>> theorem41_multipliers(const StarConfiguration<K>& star, unsigned d) {
  const std::size_t l = star.size();
  if (l < 6) throw DomainError("structured multipliers need l >= 6");
  if (d + 1 < l) throw DomainError("structured multipliers need d >= l - 1");
  const K& field = star.field();
  if (d + 1 == l) return std::vector<HomogeneousPoly<K>>(l, HomogeneousPoly<K>::one(field, 3));
  const auto lines = find_structured_lines(star);
  const auto& g = lines.avoiding;
  if (d == l) return std::vector<HomogeneousPoly<K>>(l, g);
  const unsigned e = d - static_cast<unsigned>(l);  // >= 1
  const auto& t = lines.through;
  std::vector<HomogeneousPoly<K>> m{
      t[0] * t[1] * g.pow(e - 1), t[2] * g.pow(e), t[3] * g.pow(e), g.pow(e + 1), g.pow(e + 1), t[4] * g.pow(e),
  };
  for (std::size_t i = 7; i <= l; ++i) m.push_back(g.pow(e + 1));
  return m;
}

// ---------------------------------------------------------------------------
// Semicontinuity lower bounds
// ---------------------------------------------------------------------------

/// splitmix64 finalizer; derives independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return mix_seed(seed ^ mix_seed(trial)); }

/// Seed of the multiplier stream belonging to a trial seed.
constexpr std::uint64_t multiplier_seed(std::uint64_t trial_seed) { return mix_seed(trial_seed + 1); }

/// `count` random polynomials of the given degree, drawn in order from one stream.
template <ExactField K>
std::vector<HomogeneousPoly<K>> random_multipliers(const K& field, std::size_t vars, std::size_t count, unsigned degree,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<HomogeneousPoly<K>> m;
  m.reserve(count);
  for (std::size_t i = 0; i < count; ++i) m.push_back(random_poly(field, vars, degree, rng));
  return m;
}

enum class MultiplierPolicy {
  Random,      // every coefficient drawn at random
  Structured,  // theorem41_multipliers when l >= 6, all ones when d = l - 1, random otherwise
};

template <ExactField K>
struct SamplingOptions {
  /// Use these forms in every trial instead of random ones.
  std::optional<std::vector<LinearForm<K>>> fixed_forms;
  MultiplierPolicy multipliers = MultiplierPolicy::Random;
};

struct TrialRecord {
  std::uint64_t seed;
  Count tangent_dim;
};

struct LowerBoundResult {
  /// max over trials of tangent_dim - 1
  Count lower_bound;
  std::vector<TrialRecord> trials;

  /// Whether every trial reached the same tangent dimension.
  bool consistent() const {
    for (const auto& t : trials)
      if (t.tangent_dim != trials.front().tangent_dim) return false;
    return true;
  }
};

/// The tangent problem used by one trial.
template <ExactField K>
TangentProblem<K> trial_problem(Count d, Count l, const K& field, std::uint64_t seed, const SamplingOptions<K>& opts = {}) {
  if (l < 2 || d < l - 1) throw DomainError("lower bound needs l >= 2 and d >= l - 1");
  auto forms = opts.fixed_forms ? *opts.fixed_forms : random_general_forms(static_cast<std::size_t>(l), seed, field);
  if (static_cast<Count>(forms.size()) != l) throw DomainError("fixed forms do not match l");
  auto star = build_star(std::move(forms));
  const auto degree = static_cast<unsigned>(d - l + 1);
  std::vector<HomogeneousPoly<K>> m;
  if (opts.multipliers == MultiplierPolicy::Structured && l >= 6) {
    m = theorem41_multipliers(star, static_cast<unsigned>(d));
  } else if (opts.multipliers == MultiplierPolicy::Structured && degree == 0) {
    m.assign(static_cast<std::size_t>(l), HomogeneousPoly<K>::one(field, 3));
  } else {
    m = random_multipliers(field, 3, static_cast<std::size_t>(l), degree, multiplier_seed(seed));
  }
  return make_tangent_problem(std::move(star), static_cast<unsigned>(d), std::move(m));
}

/// Certified lower bound for dim S(d, l): the largest dim I_d - 1 seen over
/// `trials` independent draws. Any specific draw bounds the generic value from
/// below; over GF(p) the draw lifts to integers, so the bound also holds in
/// characteristic zero.
template <ExactField K>
LowerBoundResult lower_bound_dim_S(Count d, Count l, const K& field, int trials, std::uint64_t seed,
                                   const SamplingOptions<K>& opts = {}) {
  if (trials < 1) throw DomainError("need at least one trial");
  LowerBoundResult result{-1, {}};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, static_cast<std::uint64_t>(t));
    const Count dim = tangent_dim_direct(trial_problem(d, l, field, s, opts));
    result.trials.push_back({s, dim});
    result.lower_bound = std::max(result.lower_bound, dim - 1);
  }
  return result;
}

}  // namespace starconf
