#pragma once

/// Star configurations of points in P^n cut out by l general hyperplanes, and
/// an experimental tangent-space lower bound for the locus of degree-d
/// hypersurfaces containing one.
///
/// The configuration is the C(l, n) points where n of the hyperplanes meet.
/// Its ideal is generated by the products G_T = prod_{j not in T} L_j over
/// (n-1)-subsets T, each of degree l - n + 1, and the hypersurfaces through
/// it are parametrized by
///
///   (L_1..L_l, {M_T}) -> sum_T M_T * G_T,   deg M_T = d - l + n - 1.
///
/// The tangent space at a point of the parameter space is spanned by the
/// degree-d part of (G_T) together with the first-order variations of the
/// sum in each L_i, which are computed with the product rule
/// (`perturbation_coefficient`) rather than by a closed formula. For n = 2
/// this is the plane construction exactly. The generator set and
/// parametrization are the natural extension of the plane case; they are an
/// inference, not a proven statement.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starconf/star.hpp"
#include "starconf/tangent.hpp"
#include "starconf/theorem.hpp"

namespace starconf {

template <ExactField K>
struct PnStarConfiguration {
  std::size_t n;
  std::vector<LinearForm<K>> hyperplanes;
  /// (n-subset of {1..l}, point) in lexicographic subset order
  std::vector<std::pair<std::vector<std::size_t>, ProjectivePoint<K>>> points;
  /// ((n-1)-subset T, G_T) in lexicographic subset order
  std::vector<std::pair<std::vector<std::size_t>, HomogeneousPoly<K>>> generators;

  std::size_t l() const { return hyperplanes.size(); }
  const K& field() const { return hyperplanes.front().field(); }
};

template <ExactField K>
PnStarConfiguration<K> build_pn_star(std::size_t n, std::vector<LinearForm<K>> forms) {
  if (n < 2) throw DomainError("ambient dimension must be at least 2");
  if (forms.size() < n) throw DomainError("need at least n hyperplanes");
  for (const auto& f : forms)
    if (f.variables() != n + 1) throw DomainError("hyperplanes must be forms in n + 1 variables");
  if (auto bad = find_dependent_subset<K>(forms)) throw GenericityError("hyperplanes are not general", *bad);

  PnStarConfiguration<K> x{n, std::move(forms), {}, {}};
  const std::size_t l = x.hyperplanes.size();
  for (auto& subset : combinations(l, n)) {
    std::vector<LinearForm<K>> chosen;
    for (auto i : subset) chosen.push_back(x.hyperplanes[i - 1]);
    x.points.emplace_back(subset, common_zero<K>(chosen));
  }
  std::vector<HomogeneousPoly<K>> polys;
  for (const auto& f : x.hyperplanes) polys.push_back(f.to_poly());
  for (auto& subset : combinations(l, n - 1)) {
    auto g = HomogeneousPoly<K>::one(x.field(), n + 1);
    for (std::size_t j = 1; j <= l; ++j)
      if (std::find(subset.begin(), subset.end(), j) == subset.end()) g = g * polys[j - 1];
    x.generators.emplace_back(subset, std::move(g));
  }
  return x;
}

/// Dimension of the tangent space described above at (hyperplanes, multipliers).
/// `multipliers` are listed in generator order.
template <ExactField K>
Count pn_tangent_dim(const PnStarConfiguration<K>& x, unsigned d, const std::vector<HomogeneousPoly<K>>& multipliers) {
  const std::size_t n = x.n, l = x.l(), vars = n + 1;
  const auto generator_degree = static_cast<unsigned>(l - n + 1);
  if (d < generator_degree) throw DomainError("need d >= l - n + 1");
  if (multipliers.size() != x.generators.size()) throw DomainError("need one multiplier per generator");
  for (const auto& m : multipliers)
    if (m.degree() != d - generator_degree || m.variables() != vars) throw DomainError("multiplier has the wrong degree");

  const K& field = x.field();
  std::vector<HomogeneousPoly<K>> lines;
  for (const auto& f : x.hyperplanes) lines.push_back(f.to_poly());

  std::vector<HomogeneousPoly<K>> span_gens;
  for (const auto& [subset, g] : x.generators) span_gens.push_back(g);

  const HomogeneousPoly<K> no_direction(field, vars, 1);
  for (std::size_t i = 1; i <= l; ++i) {
    for (std::size_t k = 0; k < vars; ++k) {
      const auto direction = HomogeneousPoly<K>::variable(field, vars, k);
      HomogeneousPoly<K> variation(field, vars, d);
      for (std::size_t t = 0; t < x.generators.size(); ++t) {
        const auto& subset = x.generators[t].first;
        if (std::find(subset.begin(), subset.end(), i) != subset.end()) continue;
        std::vector<Perturbation<K>> factors;
        for (std::size_t j = 1; j <= l; ++j) {
          if (std::find(subset.begin(), subset.end(), j) != subset.end()) continue;
          factors.push_back({lines[j - 1], j == i ? direction : no_direction});
        }
        variation = variation + multipliers[t] * perturbation_coefficient<K>(factors);
      }
      span_gens.push_back(std::move(variation));
    }
  }
  return ideal_component_dim<K>(field, vars, span_gens, d);
}

/// Largest tangent dimension minus one over random trials. Draws the same
/// data as lower_bound_dim_S when n = 2.
template <ExactField K>
LowerBoundResult pn_tangent_lower_bound(Count n, Count d, Count l, const K& field, int trials, std::uint64_t seed) {
  if (n < 2 || l < n) throw DomainError("need n >= 2 and l >= n");
  if (d < l - n + 1) throw DomainError("need d >= l - n + 1");
  if (trials < 1) throw DomainError("need at least one trial");
  const auto vars = static_cast<std::size_t>(n + 1);
  LowerBoundResult result{-1, {}};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, static_cast<std::uint64_t>(t));
    const auto x = build_pn_star(static_cast<std::size_t>(n), random_general_forms(static_cast<std::size_t>(l), s, field, vars));
    const auto m = random_multipliers(field, vars, x.generators.size(), static_cast<unsigned>(d - l + n - 1), multiplier_seed(s));
    const Count dim = pn_tangent_dim(x, static_cast<unsigned>(d), m);
    result.trials.push_back({s, dim});
    result.lower_bound = std::max(result.lower_bound, dim - 1);
  }
  return result;
}

enum class ConjectureStatus { Confirmed, Refuted };

inline std::string to_string(ConjectureStatus s) { return s == ConjectureStatus::Confirmed ? "CONFIRMED" : "REFUTED"; }

/// One row of the experiment comparing the lower bound with the upper-bound
/// formula, which is conjectured to be attained.
struct ConjectureRow {
  Count n, d, l;
  Count lower_bound;
  Count formula_min;
  ConjectureStatus status;
};

template <ExactField K>
ConjectureRow conjecture_row(Count n, Count d, Count l, const K& field, int trials, std::uint64_t seed) {
  const auto lb = pn_tangent_lower_bound(n, d, l, field, trials, seed);
  const Count bound = pn_upper_bound(n, d, l);
  if (lb.lower_bound > bound)
    throw Error("tangent lower bound " + std::to_string(lb.lower_bound) + " exceeds the upper bound " +
                std::to_string(bound) + " at n=" + std::to_string(n) + " d=" + std::to_string(d) + " l=" + std::to_string(l));
  return {n, d, l, lb.lower_bound, bound, lb.lower_bound == bound ? ConjectureStatus::Confirmed : ConjectureStatus::Refuted};
}

}  // namespace starconf
