#pragma once

/// Star configurations: l general linear forms, the points where any two
/// (in P^n: any n) of them meet, and the products that generate the ideal of
/// those points.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starconf/matrix.hpp"
#include "starconf/poly.hpp"

namespace starconf {

/// A configuration violates the "no n+1 forms dependent" condition.
class GenericityError : public Error {
 public:
  GenericityError(const std::string& what, std::vector<std::size_t> subset)
      : Error(what), subset_(std::move(subset)) {}
  /// 1-based indices of the offending forms (empty when not applicable).
  const std::vector<std::size_t>& subset() const { return subset_; }

 private:
  std::vector<std::size_t> subset_;
};

template <ExactField K>
class LinearForm {
 public:
  using Element = typename K::Element;

  LinearForm(K field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("linear form without variables");
    bool nonzero = false;
    for (const auto& c : coeffs_) {
      if (!field_.owns(c)) throw FieldMismatch("linear form coefficient from a foreign field");
      nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) throw DomainError("zero linear form");
  }

  /// Integer coefficients, mapped into the field.
  static LinearForm from_ints(const K& field, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Element> v;
    for (auto c : coeffs) v.push_back(field.from_int(c));
    return LinearForm(field, std::move(v));
  }

  /// A degree-1 polynomial; throws DomainError otherwise.
  static LinearForm from_poly(const HomogeneousPoly<K>& p) {
    if (p.degree() != 1) throw DomainError("not a linear form");
    std::vector<Element> v(p.variables(), p.field().zero());
    for (const auto& [m, c] : p.terms()) {
      for (std::size_t k = 0; k < m.exponents.size(); ++k)
        if (m.exponents[k] == 1) v[k] = c;
    }
    return LinearForm(p.field(), std::move(v));
  }

  const K& field() const { return field_; }
  std::size_t variables() const { return coeffs_.size(); }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  HomogeneousPoly<K> to_poly() const { return HomogeneousPoly<K>::linear(field_, coeffs_); }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != coeffs_.size()) throw DomainError("point dimension does not match form");
    Element s = field_.zero();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) s = s + coeffs_[k] * point[k];
    return s;
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  K field_;
  std::vector<Element> coeffs_;
};

/// Point of projective space, stored with its last nonzero coordinate equal to 1.
template <ExactField K>
class ProjectivePoint {
 public:
  using Element = typename K::Element;

  ProjectivePoint(const K& field, std::vector<Element> coords) : coords_(std::move(coords)) {
    auto last = std::find_if(coords_.rbegin(), coords_.rend(), [](const Element& e) { return !e.is_zero(); });
    if (last == coords_.rend()) throw DomainError("projective point with all coordinates zero");
    for (const auto& c : coords_)
      if (!field.owns(c)) throw FieldMismatch("point coordinate from a foreign field");
    const Element inv = last->inverse();
    for (auto& c : coords_) c = c * inv;
  }

  const std::vector<Element>& coordinates() const { return coords_; }
  std::size_t dimension() const { return coords_.size() - 1; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<Element> coords_;
};

template <ExactField K>
typename K::Element evaluate(const HomogeneousPoly<K>& f, const ProjectivePoint<K>& p) {
  return f.evaluate(p.coordinates());
}

/// k-element subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i + 1;
  for (;;) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

namespace detail {

template <ExactField K>
std::size_t coefficient_rank(std::span<const LinearForm<K>> forms, const std::vector<std::size_t>& subset) {
  std::vector<std::vector<typename K::Element>> rows;
  for (auto i : subset) rows.push_back(forms[i - 1].coefficients());
  return rank(ExactMatrix<K>::from_rows(forms.front().field(), rows));
}

template <ExactField K>
void check_forms_compatible(std::span<const LinearForm<K>> forms) {
  for (const auto& f : forms) {
    require_same_field(forms.front().field(), f.field());
    if (f.variables() != forms.front().variables()) throw DomainError("linear forms in different numbers of variables");
  }
}

}  // namespace detail

/// First subset of size min(#variables, #forms) whose coefficient vectors are
/// dependent, or nothing when the forms are general. In the plane this is the
/// three-wise independence test (pairwise when only two forms are given).
template <ExactField K>
std::optional<std::vector<std::size_t>> find_dependent_subset(std::span<const LinearForm<K>> forms) {
  if (forms.empty()) return std::nullopt;
  detail::check_forms_compatible(forms);
  const std::size_t k = std::min(forms.front().variables(), forms.size());
  for (auto& subset : combinations(forms.size(), k)) {
    if (detail::coefficient_rank(forms, subset) < k) return subset;
  }
  return std::nullopt;
}

template <ExactField K>
bool is_general(std::span<const LinearForm<K>> forms) {
  return !find_dependent_subset(forms).has_value();
}

/// The common zero of two independent lines in the plane: the normalized cross
/// product of their coefficient vectors.
template <ExactField K>
ProjectivePoint<K> intersection_point(const LinearForm<K>& a, const LinearForm<K>& b) {
  require_same_field(a.field(), b.field());
  if (a.variables() != 3 || b.variables() != 3) throw DomainError("intersection_point needs forms in 3 variables");
  const auto& u = a.coefficients();
  const auto& v = b.coefficients();
  std::vector<typename K::Element> c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  if (std::all_of(c.begin(), c.end(), [](const auto& e) { return e.is_zero(); }))
    throw GenericityError("dependent linear forms have no unique intersection", {});
  return ProjectivePoint<K>(a.field(), std::move(c));
}

/// The unique common zero of n independent forms in n+1 variables.
template <ExactField K>
ProjectivePoint<K> common_zero(std::span<const LinearForm<K>> forms) {
  detail::check_forms_compatible(forms);
  std::vector<std::vector<typename K::Element>> rows;
  for (const auto& f : forms) rows.push_back(f.coefficients());
  const auto kernel = kernel_basis(ExactMatrix<K>::from_rows(forms.front().field(), rows));
  if (kernel.size() != 1) throw GenericityError("forms do not meet in a single point", {});
  return ProjectivePoint<K>(forms.front().field(), kernel.front());
}

/// Label of the point where lines i and j meet, 1 <= i < j <= l.
struct PointLabel {
  std::size_t i;
  std::size_t j;
  friend auto operator<=>(const PointLabel&, const PointLabel&) = default;
};

template <ExactField K>
class StarConfiguration {
 public:
  using Element = typename K::Element;
  using Poly = HomogeneousPoly<K>;

  const K& field() const { return forms_.front().field(); }
  std::size_t size() const { return forms_.size(); }
  const std::vector<LinearForm<K>>& forms() const { return forms_; }
  /// Linear form L_i as a polynomial, 1-based.
  const Poly& line(std::size_t i) const { return lines_.at(i - 1); }

  /// Points in lexicographic label order.
  const std::vector<std::pair<PointLabel, ProjectivePoint<K>>>& points() const { return points_; }

  const ProjectivePoint<K>& point(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    const auto it = std::find_if(points_.begin(), points_.end(),
                                 [&](const auto& entry) { return entry.first == PointLabel{i, j}; });
    if (it == points_.end())
      throw DomainError("no point p_{" + std::to_string(i) + "," + std::to_string(j) + "} in this configuration");
    return it->second;
  }

  /// hat(i) = prod_{j != i} L_j, 1-based.
  const Poly& hat(std::size_t i) const { return hats_.at(i - 1); }
  const std::vector<Poly>& hat_products() const { return hats_; }

  /// prod_{h not in {i, j}} L_h; the constant 1 when l = 2.
  Poly double_hat(std::size_t i, std::size_t j) const {
    if (i == j || i == 0 || j == 0 || i > size() || j > size()) throw DomainError("invalid double-hat indices");
    Poly r = Poly::one(field(), 3);
    for (std::size_t h = 1; h <= size(); ++h)
      if (h != i && h != j) r = r * line(h);
    return r;
  }

  template <ExactField F>
  friend StarConfiguration<F> build_star(std::vector<LinearForm<F>> forms);

 private:
  StarConfiguration() = default;

  std::vector<LinearForm<K>> forms_;
  std::vector<Poly> lines_;
  std::vector<std::pair<PointLabel, ProjectivePoint<K>>> points_;
  std::vector<Poly> hats_;
};

template <ExactField K>
StarConfiguration<K> build_star(std::vector<LinearForm<K>> forms) {
  if (forms.size() < 2) throw DomainError("a star configuration needs at least two lines");
  for (const auto& f : forms)
    if (f.variables() != 3) throw DomainError("plane star configurations need forms in 3 variables");
  if (auto bad = find_dependent_subset<K>(forms)) {
    std::string what = "linear forms are not general: {";
    for (std::size_t i = 0; i < bad->size(); ++i) what += (i ? "," : "") + std::string("L") + std::to_string((*bad)[i]);
    throw GenericityError(what + "} are dependent", *bad);
  }

  StarConfiguration<K> star;
  star.forms_ = std::move(forms);
  const std::size_t l = star.forms_.size();
  for (const auto& f : star.forms_) star.lines_.push_back(f.to_poly());
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = i + 1; j <= l; ++j)
      star.points_.emplace_back(PointLabel{i, j}, intersection_point(star.forms_[i - 1], star.forms_[j - 1]));
  for (std::size_t i = 1; i <= l; ++i) {
    auto hat = HomogeneousPoly<K>::one(star.field(), 3);
    for (std::size_t j = 1; j <= l; ++j)
      if (j != i) hat = hat * star.lines_[j - 1];
    star.hats_.push_back(std::move(hat));
  }
  return star;
}

inline constexpr int kGenericityRetryBudget = 100;

/// `l` random linear forms in `vars` variables that pass the genericity test.
/// Deterministic in `seed`; the whole list is redrawn on failure.
template <ExactField K>
std::vector<LinearForm<K>> random_general_forms(std::size_t l, std::uint64_t seed, const K& field, std::size_t vars = 3) {
  if (l < 2) throw DomainError("need at least two forms");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kGenericityRetryBudget; ++attempt) {
    std::vector<LinearForm<K>> forms;
    bool zero_form = false;
    for (std::size_t i = 0; i < l && !zero_form; ++i) {
      std::vector<typename K::Element> c;
      for (std::size_t k = 0; k < vars; ++k) c.push_back(field.random(rng));
      zero_form = std::all_of(c.begin(), c.end(), [](const auto& e) { return e.is_zero(); });
      if (!zero_form) forms.emplace_back(field, std::move(c));
    }
    if (!zero_form && is_general<K>(forms)) return forms;
  }
  throw GenericityError("random genericity retry budget exhausted", {});
}

/// Matrix of values f(p): one row per point, one column per polynomial.
template <ExactField K>
ExactMatrix<K> evaluation_matrix(const K& field, std::span<const ProjectivePoint<K>> points,
                                 std::span<const HomogeneousPoly<K>> polys) {
  std::vector<typename K::Element> entries;
  entries.reserve(points.size() * polys.size());
  for (const auto& p : points)
    for (const auto& f : polys) entries.push_back(evaluate(f, p));
  return ExactMatrix<K>(field, points.size(), polys.size(), std::move(entries));
}

/// Hilbert function of a finite point set: rank of the evaluation matrix of
/// all degree-t monomials at the points.
template <ExactField K>
std::size_t hilbert_function_of_points(const K& field, std::span<const ProjectivePoint<K>> points, std::size_t vars,
                                       unsigned t) {
  std::vector<HomogeneousPoly<K>> monomials;
  for (const auto& m : monomials_of_degree(vars, t)) {
    typename HomogeneousPoly<K>::Terms single;
    single.emplace(m, field.one());
    monomials.emplace_back(field, vars, t, single);
  }
  return rank(evaluation_matrix<K>(field, points, monomials));
}

template <ExactField K>
std::vector<ProjectivePoint<K>> point_list(const StarConfiguration<K>& x) {
  std::vector<ProjectivePoint<K>> pts;
  for (const auto& [label, p] : x.points()) pts.push_back(p);
  return pts;
}

template <ExactField K>
std::size_t hilbert_function(const StarConfiguration<K>& x, unsigned t) {
  const auto pts = point_list(x);
  return hilbert_function_of_points<K>(x.field(), pts, 3, t);
}

}  // namespace starconf
