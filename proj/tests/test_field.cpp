#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starconf/field.hpp"

using namespace starconf;

TEST(Rational, AddsInLowestTerms) {
  const Rational a(mpz_class(2), mpz_class(3));
  const Rational b(mpz_class(1), mpz_class(6));
  const Rational sum = field_add(a, b);
  EXPECT_EQ(sum, Rational(mpz_class(5), mpz_class(6)));
  EXPECT_EQ(sum.numerator(), 5);
  EXPECT_EQ(sum.denominator(), 6);
}

TEST(Rational, CanonicalFormHasPositiveDenominator) {
  const Rational r(mpz_class(4), mpz_class(-6));
  EXPECT_EQ(r.numerator(), -2);
  EXPECT_EQ(r.denominator(), 3);
  EXPECT_EQ(r.to_string(), "-2/3");
}

TEST(Rational, InverseOfZeroThrows) {
  EXPECT_THROW(field_inv(Rational(0L)), DivisionByZero);
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
}

TEST(Residue, MultipliesModP) {
  const PrimeField f7(7);
  EXPECT_EQ(field_mul(f7.from_int(3), f7.from_int(5)), f7.from_int(1));
}

TEST(Residue, InverseOfTwoInDefaultPrime) {
  const PrimeField f(kDefaultPrime);
  const auto inv = field_inv(f.from_int(2));
  EXPECT_EQ(inv.value(), 536870895U);
  // Independent checks: 2 * inv = 1 and Fermat's little theorem.
  EXPECT_EQ(2 * 536870895ULL % kDefaultPrime, 1U);
  EXPECT_EQ(detail::pow_mod(2, kDefaultPrime - 2, kDefaultPrime), 536870895U);
}

TEST(Residue, MismatchedModuliThrow) {
  const PrimeField f7(7), f11(11);
  EXPECT_THROW(f7.one() + f11.one(), FieldMismatch);
  EXPECT_THROW(f7.one() * f11.one(), FieldMismatch);
  EXPECT_THROW((void)(f7.one() == f11.one()), FieldMismatch);
}

TEST(Residue, InverseOfZeroThrows) {
  const PrimeField f(13);
  EXPECT_THROW(field_inv(f.zero()), DivisionByZero);
}

TEST(Residue, InverseRoundTrip) {
  const PrimeField f(kDefaultPrime);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto a = f.random(rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(a * a.inverse(), f.one());
    EXPECT_LT(a.value(), kDefaultPrime);
  }
}

TEST(PrimeField, FromFractionAndNegatives) {
  const PrimeField f(7);
  EXPECT_EQ(f.from_int(-1).value(), 6U);
  EXPECT_EQ(f.from_fraction(mpz_class(1), mpz_class(2)), f.from_int(4));
  EXPECT_EQ(f.from_fraction(mpz_class(-3), mpz_class(5)) * f.from_int(5), f.from_int(-3));
  EXPECT_THROW(f.from_fraction(mpz_class(1), mpz_class(14)), DivisionByZero);
}

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(1073741790), DomainError);
  EXPECT_THROW(PrimeField(1), DomainError);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::trial_division_prime(n)) << n;
  EXPECT_TRUE(is_prime(kDefaultPrime));
  // kDefaultPrime is the largest prime below 2^30.
  for (std::uint64_t n = kDefaultPrime + 1; n < (1ULL << 30); ++n) EXPECT_FALSE(oracle::trial_division_prime(n)) << n;
  EXPECT_TRUE(oracle::trial_division_prime(kDefaultPrime));
}

TEST(FieldChoice, Dispatches) {
  const FieldChoice q{true, 0};
  const FieldChoice p{false, 101};
  EXPECT_EQ(with_field(q, [](const auto& f) { return f.name(); }), "rational");
  EXPECT_EQ(with_field(p, [](const auto& f) { return f.name(); }), "prime");
  EXPECT_EQ(p.label(), "GF(101)");
}
