#pragma once

/// Homogeneous polynomials in a fixed number of variables x0..x{n}.
///
/// Monomials are ordered graded-lexicographically with x0 > x1 > ... and
/// every basis, coefficient vector and printed polynomial follows that order,
/// so matrices built from polynomials have a reproducible column layout.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "starconf/field.hpp"

namespace starconf {

struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0U); }
  std::size_t variables() const { return exponents.size(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
    return m;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict weak order placing the grlex-largest monomial first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(),
                                        a.exponents.end());
  }
};

namespace detail {

inline void enumerate_monomials(std::vector<unsigned>& prefix, std::size_t vars, unsigned remaining,
                                std::vector<Monomial>& out) {
  if (prefix.size() + 1 == vars) {
    prefix.push_back(remaining);
    out.push_back(Monomial{prefix});
    prefix.pop_back();
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    prefix.push_back(e);
    enumerate_monomials(prefix, vars, remaining - e, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All monomials of total degree d in `vars` variables, grlex-descending.
inline std::vector<Monomial> monomials_of_degree(std::size_t vars, unsigned d) {
  if (vars == 0) throw DomainError("need at least one variable");
  std::vector<Monomial> out;
  std::vector<unsigned> prefix;
  detail::enumerate_monomials(prefix, vars, d, out);
  return out;
}

/// A monomial basis of S_d with O(log n) index lookup.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t vars, unsigned degree) : vars_(vars), degree_(degree), monomials_(monomials_of_degree(vars, degree)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t variables() const { return vars_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t index_of(const Monomial& m) const { return index_.at(m); }

 private:
  std::size_t vars_;
  unsigned degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GrlexDescending> index_;
};

template <ExactField K>
class HomogeneousPoly {
 public:
  using Field = K;
  using Element = typename K::Element;
  using Terms = std::map<Monomial, Element, GrlexDescending>;

  /// The zero polynomial of the declared degree.
  HomogeneousPoly(K field, std::size_t vars, unsigned degree) : field_(std::move(field)), vars_(vars), degree_(degree) {
    if (vars_ == 0) throw DomainError("need at least one variable");
  }

  HomogeneousPoly(K field, std::size_t vars, unsigned degree, const Terms& terms) : HomogeneousPoly(std::move(field), vars, degree) {
    for (const auto& [m, c] : terms) add_term(m, c);
  }

  static HomogeneousPoly constant(K field, std::size_t vars, const Element& c) {
    HomogeneousPoly p(std::move(field), vars, 0);
    p.add_term(Monomial{std::vector<unsigned>(vars, 0)}, c);
    return p;
  }

  static HomogeneousPoly one(K field, std::size_t vars) {
    const Element c = field.one();
    return constant(std::move(field), vars, c);
  }

  static HomogeneousPoly variable(K field, std::size_t vars, std::size_t k) {
    if (k >= vars) throw DomainError("variable index out of range");
    Monomial m{std::vector<unsigned>(vars, 0)};
    m.exponents[k] = 1;
    HomogeneousPoly p(field, vars, 1);
    p.add_term(m, field.one());
    return p;
  }

  /// The linear form sum_k coeffs[k] * x_k.
  static HomogeneousPoly linear(K field, std::span<const Element> coeffs) {
    HomogeneousPoly p(field, coeffs.size(), 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Monomial m{std::vector<unsigned>(coeffs.size(), 0)};
      m.exponents[k] = 1;
      p.add_term(m, coeffs[k]);
    }
    return p;
  }

  /// Inverse of `coefficients`: the polynomial with the given coordinates in `basis`.
  static HomogeneousPoly decode(K field, const MonomialBasis& basis, std::span<const Element> coords) {
    if (coords.size() != basis.size()) throw DomainError("coordinate vector does not match basis");
    HomogeneousPoly p(std::move(field), basis.variables(), basis.degree());
    for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(basis.monomials()[i], coords[i]);
    return p;
  }

  const K& field() const { return field_; }
  std::size_t variables() const { return vars_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Coordinates against a basis of S_degree.
  std::vector<Element> coefficients(const MonomialBasis& basis) const {
    if (basis.degree() != degree_ || basis.variables() != vars_) throw DomainError("basis does not match polynomial");
    std::vector<Element> v(basis.size(), field_.zero());
    for (const auto& [m, c] : terms_) v[basis.index_of(m)] = c;
    return v;
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != vars_) throw DomainError("point dimension does not match polynomial");
    Element sum = field_.zero();
    for (const auto& [m, c] : terms_) {
      Element term = c;
      for (std::size_t k = 0; k < vars_; ++k)
        for (unsigned e = 0; e < m.exponents[k]; ++e) term = term * point[k];
      sum = sum + term;
    }
    return sum;
  }

  HomogeneousPoly pow(unsigned e) const {
    HomogeneousPoly r = one(field_, vars_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    a.check_compatible(b);
    if (a.degree_ != b.degree_) throw DomainError("adding polynomials of different degrees");
    HomogeneousPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend HomogeneousPoly operator-(const HomogeneousPoly& a) {
    HomogeneousPoly r(a.field_, a.vars_, a.degree_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b) { return a + (-b); }

  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    a.check_compatible(b);
    HomogeneousPoly r(a.field_, a.vars_, a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend HomogeneousPoly operator*(const Element& s, const HomogeneousPoly& a) {
    HomogeneousPoly r(a.field_, a.vars_, a.degree_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
    return r;
  }

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& m, const Element& c) {
    if (m.variables() != vars_) throw DomainError("monomial has the wrong number of variables");
    if (m.degree() != degree_) throw DomainError("monomial degree differs from polynomial degree");
    if (!field_.owns(c)) throw FieldMismatch("coefficient from a foreign field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void check_compatible(const HomogeneousPoly& b) const {
    require_same_field(field_, b.field_);
    if (vars_ != b.vars_) throw DomainError("polynomials in different numbers of variables");
  }

  K field_;
  std::size_t vars_;
  unsigned degree_;
  Terms terms_;
};

template <ExactField K>
HomogeneousPoly<K> poly_mul(const HomogeneousPoly<K>& f, const HomogeneousPoly<K>& g) {
  return f * g;
}

/// Product of a nonempty list of polynomials.
template <ExactField K>
HomogeneousPoly<K> product(std::span<const HomogeneousPoly<K>> factors) {
  if (factors.empty()) throw DomainError("empty product needs an explicit field");
  HomogeneousPoly<K> r = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) r = r * factors[i];
  return r;
}

template <ExactField K>
struct Perturbation {
  HomogeneousPoly<K> base;
  HomogeneousPoly<K> direction;
};

/// Coefficient of t in prod_i (base_i + t * direction_i):
///   sum_j direction_j * prod_{i != j} base_i.
template <ExactField K>
HomogeneousPoly<K> perturbation_coefficient(std::span<const Perturbation<K>> factors) {
  if (factors.empty()) throw DomainError("perturbation of an empty product");
  const auto& first = factors.front().base;
  unsigned total = 0;
  for (const auto& f : factors) {
    if (f.base.degree() != f.direction.degree()) throw DomainError("perturbation direction has the wrong degree");
    require_same_field(first.field(), f.base.field());
    require_same_field(first.field(), f.direction.field());
    total += f.base.degree();
  }
  const std::size_t n = factors.size();
  // prefix[i] = base_0 ... base_{i-1}, suffix[i] = base_i ... base_{n-1}
  std::vector<HomogeneousPoly<K>> prefix, suffix;
  prefix.reserve(n + 1);
  prefix.push_back(HomogeneousPoly<K>::one(first.field(), first.variables()));
  for (std::size_t i = 0; i < n; ++i) prefix.push_back(prefix.back() * factors[i].base);
  suffix.assign(n + 1, HomogeneousPoly<K>::one(first.field(), first.variables()));
  for (std::size_t i = n; i-- > 0;) suffix[i] = factors[i].base * suffix[i + 1];

  HomogeneousPoly<K> sum(first.field(), first.variables(), total);
  for (std::size_t j = 0; j < n; ++j) {
    if (factors[j].direction.is_zero()) continue;
    sum = sum + prefix[j] * factors[j].direction * suffix[j + 1];
  }
  return sum;
}

/// Polynomial of the given degree with every coefficient drawn from `rng`.
template <ExactField K, class Rng>
HomogeneousPoly<K> random_poly(const K& field, std::size_t vars, unsigned degree, Rng& rng) {
  typename HomogeneousPoly<K>::Terms terms;
  for (auto& m : monomials_of_degree(vars, degree)) terms.emplace(std::move(m), field.random(rng));
  return HomogeneousPoly<K>(field, vars, degree, terms);
}

}  // namespace starconf
