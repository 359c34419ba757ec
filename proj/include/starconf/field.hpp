#pragma once

/// Exact scalars: arbitrary-precision rationals and prime-field residues.
///
/// Two field types are provided, `RationalField` and `PrimeField`. Each is a
/// small value type that knows how to manufacture its elements (`zero`, `one`,
/// `from_int`, `from_fraction`, `random`). Every algorithm in the library is
/// templated on the field type, so rationals and residues can never be mixed
/// by accident; residues with different moduli are rejected at run time.

#include <concepts>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace starconf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A precondition on degrees, counts or labels was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// Element of Q, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  bool is_zero() const { return sgn(value_) == 0; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1) / value_);
  }

  std::string to_string() const { return value_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }
  Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
  Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
  Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

 private:
  mpq_class value_{0};
};

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Inverse by the extended Euclidean algorithm; `a` must be nonzero mod m.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DivisionByZero("inverse of zero residue");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Largest prime below 2^30.
inline constexpr std::uint64_t kDefaultPrime = 1073741789ULL;

/// Element of GF(p): 0 <= value < modulus.
class Residue {
 public:
  Residue() = default;
  Residue(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Residue inverse() const { return {detail::inv_mod(value_, modulus_), modulus_}; }

  std::string to_string() const { return std::to_string(value_); }

  friend Residue operator+(const Residue& a, const Residue& b) {
    check(a, b);
    std::uint64_t s = a.value_ + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return {s, a.modulus_};
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    check(a, b);
    return {a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_, a.modulus_};
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    check(a, b);
    return {detail::mul_mod(a.value_, b.value_, a.modulus_), a.modulus_};
  }
  friend Residue operator/(const Residue& a, const Residue& b) { return a * b.inverse(); }
  friend Residue operator-(const Residue& a) { return {a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_}; }
  Residue& operator+=(const Residue& b) { return *this = *this + b; }
  Residue& operator-=(const Residue& b) { return *this = *this - b; }
  Residue& operator*=(const Residue& b) { return *this = *this * b; }
  friend bool operator==(const Residue& a, const Residue& b) {
    check(a, b);
    return a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Residue& a) { return os << a.value_; }

 private:
  static void check(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_) {
      throw FieldMismatch("residues modulo " + std::to_string(a.modulus_) + " and " + std::to_string(b.modulus_));
    }
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 2;
};

// ---------------------------------------------------------------------------
// Field descriptors
// ---------------------------------------------------------------------------

/// Integers used when sampling random rationals lie in [-kRationalSampleBound, kRationalSampleBound].
inline constexpr long kRationalSampleBound = 10000;

struct RationalField {
  using Element = Rational;

  Element zero() const { return Rational(0L); }
  Element one() const { return Rational(1L); }
  Element from_int(std::int64_t n) const { return Rational(static_cast<long>(n)); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const { return Rational(num, den); }
  Element random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<long> dist(-kRationalSampleBound, kRationalSampleBound);
    return Rational(dist(rng));
  }
  bool owns(const Element&) const { return true; }
  std::string name() const { return "rational"; }
  std::uint64_t prime() const { return 0; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
 public:
  using Element = Residue;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p >= (1ULL << 62) || !is_prime(p)) throw DomainError("not a supported prime: " + std::to_string(p));
  }

  Element zero() const { return {0, p_}; }
  Element one() const { return {1, p_}; }
  Element from_int(std::int64_t n) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = n % m;
    if (r < 0) r += m;
    return {static_cast<std::uint64_t>(r), p_};
  }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    const mpz_class modulus(std::to_string(p_));
    mpz_class n = num % modulus, d = den % modulus;
    if (n < 0) n += modulus;
    if (d < 0) d += modulus;
    if (d == 0) throw DivisionByZero("denominator vanishes modulo " + std::to_string(p_));
    return Residue(std::stoull(n.get_str()), p_) / Residue(std::stoull(d.get_str()), p_);
  }
  Element random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
    return {dist(rng), p_};
  }
  bool owns(const Element& e) const { return e.modulus() == p_; }
  std::string name() const { return "prime"; }
  std::uint64_t prime() const { return p_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

template <class K>
concept ExactField = requires(const K& k, std::int64_t n, const mpz_class& z, std::mt19937_64& rng,
                              const typename K::Element& e) {
  { k.zero() } -> std::same_as<typename K::Element>;
  { k.one() } -> std::same_as<typename K::Element>;
  { k.from_int(n) } -> std::same_as<typename K::Element>;
  { k.from_fraction(z, z) } -> std::same_as<typename K::Element>;
  { k.random(rng) } -> std::same_as<typename K::Element>;
  { k.owns(e) } -> std::same_as<bool>;
  { k.name() } -> std::convertible_to<std::string>;
  { e.is_zero() } -> std::same_as<bool>;
  { e + e } -> std::same_as<typename K::Element>;
  { e * e } -> std::same_as<typename K::Element>;
  { e / e } -> std::same_as<typename K::Element>;
  { k == k } -> std::same_as<bool>;
};

// Named forms of the field operations.
template <class E>
E field_add(const E& a, const E& b) { return a + b; }
template <class E>
E field_mul(const E& a, const E& b) { return a * b; }
template <class E>
E field_inv(const E& a) { return a.inverse(); }

template <ExactField K>
void require_same_field(const K& a, const K& b) {
  if (!(a == b)) throw FieldMismatch("operands live in different fields");
}

/// Runtime choice of field, used where the field is picked from the command line.
struct FieldChoice {
  bool rational = false;
  std::uint64_t prime = kDefaultPrime;

  std::string name() const { return rational ? "rational" : "prime"; }
  std::string label() const { return rational ? std::string("Q") : "GF(" + std::to_string(prime) + ")"; }
};

/// Invoke `fn` with the concrete field object described by `choice`.
template <class Fn>
decltype(auto) with_field(const FieldChoice& choice, Fn&& fn) {
  if (choice.rational) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField(choice.prime));
}

}  // namespace starconf
