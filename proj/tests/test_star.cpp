#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starconf/reference_forms.hpp"
#include "starconf/tangent.hpp"

using namespace starconf;

namespace {

const RationalField kQ;
using QForm = LinearForm<RationalField>;
using QPoint = ProjectivePoint<RationalField>;

QPoint qpoint(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return QPoint(kQ, c);
}

}  // namespace

TEST(IsGeneral, Examples) {
  const std::vector<QForm> coordinate{QForm::from_ints(kQ, {1, 0, 0}), QForm::from_ints(kQ, {0, 1, 0}),
                                      QForm::from_ints(kQ, {0, 0, 1})};
  EXPECT_TRUE(is_general<RationalField>(coordinate));
  const std::vector<QForm> concurrent{QForm::from_ints(kQ, {1, 0, 0}), QForm::from_ints(kQ, {0, 1, 0}),
                                      QForm::from_ints(kQ, {1, 1, 0})};
  EXPECT_FALSE(is_general<RationalField>(concurrent));
  EXPECT_TRUE(is_general<RationalField>(luroth_forms(kQ)));
  EXPECT_TRUE(is_general<RationalField>(six_line_forms(kQ)));
}

TEST(IsGeneral, TwoFormsNeedOnlyBeIndependent) {
  EXPECT_TRUE(is_general<RationalField>(std::vector{QForm::from_ints(kQ, {1, 0, 0}), QForm::from_ints(kQ, {0, 1, 0})}));
  EXPECT_FALSE(is_general<RationalField>(std::vector{QForm::from_ints(kQ, {1, 2, 3}), QForm::from_ints(kQ, {2, 4, 6})}));
}

TEST(Intersection, Examples) {
  const auto x0 = QForm::from_ints(kQ, {1, 0, 0});
  const auto x1 = QForm::from_ints(kQ, {0, 1, 0});
  const auto x2 = QForm::from_ints(kQ, {0, 0, 1});
  const auto s = QForm::from_ints(kQ, {1, 1, 1});
  EXPECT_EQ(intersection_point(x0, x1), qpoint({0, 0, 1}));
  EXPECT_EQ(intersection_point(x0, s), qpoint({0, -1, 1}));
  EXPECT_EQ(intersection_point(x1, x2), qpoint({1, 0, 0}));
  EXPECT_THROW(intersection_point(x0, QForm::from_ints(kQ, {3, 0, 0})), GenericityError);
}

TEST(Intersection, SymmetricAndOnBothLines) {
  const PrimeField f(kDefaultPrime);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto forms = random_general_forms(2, seed, f);
    const auto p = intersection_point(forms[0], forms[1]);
    EXPECT_EQ(p, intersection_point(forms[1], forms[0]));
    EXPECT_TRUE(forms[0].evaluate(p.coordinates()).is_zero());
    EXPECT_TRUE(forms[1].evaluate(p.coordinates()).is_zero());
  }
}

TEST(ProjectivePoint, NormalizesLastNonzeroCoordinate) {
  EXPECT_EQ(qpoint({2, 4, 0}), qpoint({1, 2, 0}));
  EXPECT_EQ(qpoint({2, 4, 0}).coordinates()[1], Rational(1L));
  EXPECT_THROW(qpoint({0, 0, 0}), DomainError);
}

TEST(LinearForm, RejectsZero) {
  EXPECT_THROW(QForm::from_ints(kQ, {0, 0, 0}), DomainError);
}

TEST(BuildStar, CoordinateTriangle) {
  const auto x = build_star(std::vector{QForm::from_ints(kQ, {1, 0, 0}), QForm::from_ints(kQ, {0, 1, 0}),
                                        QForm::from_ints(kQ, {0, 0, 1})});
  ASSERT_EQ(x.points().size(), 3U);
  EXPECT_EQ(x.point(1, 2), qpoint({0, 0, 1}));
  EXPECT_EQ(x.point(1, 3), qpoint({0, 1, 0}));
  EXPECT_EQ(x.point(2, 3), qpoint({1, 0, 0}));
  EXPECT_EQ(x.point(3, 2), x.point(2, 3));
  EXPECT_THROW((void)x.point(1, 4), DomainError);
}

TEST(BuildStar, ReferenceArrangements) {
  const auto six = build_star(six_line_forms(kQ));
  EXPECT_EQ(six.points().size(), 15U);
  const auto five = build_star(luroth_forms(kQ));
  EXPECT_EQ(five.points().size(), 10U);
  for (const auto& h : five.hat_products()) EXPECT_EQ(h.degree(), 4U);
}

TEST(BuildStar, ReportsOffendingTriple) {
  std::vector<QForm> forms = luroth_forms(kQ);
  forms.push_back(QForm::from_ints(kQ, {1, 1, 0}));
  try {
    build_star(forms);
    FAIL() << "expected a genericity error";
  } catch (const GenericityError& e) {
    ASSERT_EQ(e.subset().size(), 3U);
    // x0 + x1 lies in the span of x0 and x1.
    EXPECT_EQ(e.subset(), (std::vector<std::size_t>{1, 2, 6}));
  }
}

TEST(BuildStar, TwoLinesGiveOnePoint) {
  const auto x = build_star(std::vector{QForm::from_ints(kQ, {1, 0, 0}), QForm::from_ints(kQ, {0, 1, 0})});
  EXPECT_EQ(x.points().size(), 1U);
  EXPECT_EQ(x.double_hat(1, 2), HomogeneousPoly<RationalField>::one(kQ, 3));
  EXPECT_EQ(x.hat(1), x.line(2));
}

TEST(BuildStar, Invariants) {
  const PrimeField f(kDefaultPrime);
  std::mt19937_64 rng(31);
  for (std::size_t l = 2; l <= 8; ++l) {
    const auto x = build_star(random_general_forms(l, 100 + l, f));
    EXPECT_EQ(x.points().size(), static_cast<std::size_t>(oracle::pascal(static_cast<int>(l), 2)));
    for (const auto& [label, p] : x.points()) {
      for (std::size_t k = 1; k <= l; ++k) {
        const bool on = x.forms()[k - 1].evaluate(p.coordinates()).is_zero();
        EXPECT_EQ(on, k == label.i || k == label.j);
      }
      for (const auto& h : x.hat_products()) EXPECT_TRUE(evaluate(h, p).is_zero());
    }
    const std::vector<Residue> off{f.random(rng), f.random(rng), f.random(rng)};
    for (const auto& h : x.hat_products()) {
      EXPECT_EQ(h.degree(), l - 1);
      EXPECT_FALSE(h.evaluate(off).is_zero());
    }
  }
}

TEST(RandomForms, DeterministicAndGeneral) {
  const PrimeField f(kDefaultPrime);
  EXPECT_EQ(random_general_forms(6, 42, f), random_general_forms(6, 42, f));
  EXPECT_NE(random_general_forms(6, 42, f), random_general_forms(6, 43, f));
  const auto three = random_general_forms(3, 5, kQ);
  EXPECT_TRUE(is_general<RationalField>(three));
  EXPECT_THROW(random_general_forms(1, 0, f), DomainError);
}

TEST(RandomForms, EightLinesOverLargePrime) {
  const PrimeField f(kDefaultPrime);
  for (std::uint64_t seed = 0; seed < 100; ++seed) EXPECT_TRUE(is_general<PrimeField>(random_general_forms(8, seed, f)));
}

TEST(RandomForms, TinyFieldExhaustsBudget) {
  // The plane over GF(2) has only seven lines.
  EXPECT_THROW(random_general_forms(8, 0, PrimeField(2)), GenericityError);
}

TEST(HilbertFunction, Examples) {
  EXPECT_EQ(hilbert_function(build_star(std::vector{QForm::from_ints(kQ, {1, 0, 0}), QForm::from_ints(kQ, {0, 1, 0}),
                                                    QForm::from_ints(kQ, {0, 0, 1})}),
                             1),
            3U);
  EXPECT_EQ(hilbert_function(build_star(luroth_forms(kQ)), 3), 10U);
  EXPECT_EQ(hilbert_function(build_star(six_line_forms(kQ)), 2), 6U);
}

TEST(HilbertFunction, MatchesClosedForm) {
  const PrimeField f(kDefaultPrime);
  for (std::size_t l = 2; l <= 8; ++l) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto x = build_star(random_general_forms(l, seed * 31 + l, f));
      for (unsigned t = 0; t <= 10; ++t) {
        const auto expected = std::min(oracle::pascal(static_cast<int>(t) + 2, 2), oracle::pascal(static_cast<int>(l), 2));
        EXPECT_EQ(static_cast<long long>(hilbert_function(x, t)), expected) << "l=" << l << " t=" << t;
      }
    }
  }
}

TEST(HatIdeal, EmptyBelowGeneratorDegree) {
  const PrimeField f(kDefaultPrime);
  for (std::size_t l = 2; l <= 8; ++l) {
    const auto x = build_star(random_general_forms(l, l, f));
    for (unsigned d = 0; d + 1 < l; ++d) EXPECT_EQ(ideal_component_dim<PrimeField>(f, 3, x.hat_products(), d), 0);
    // At the generator degree the ideal has codimension exactly C(l,2).
    const auto d = static_cast<unsigned>(l - 1);
    EXPECT_EQ(ideal_component_dim<PrimeField>(f, 3, x.hat_products(), d),
              oracle::pascal(static_cast<int>(d) + 2, 2) - oracle::pascal(static_cast<int>(l), 2));
  }
}

TEST(CommonZero, MatchesCrossProduct) {
  const auto forms = luroth_forms(kQ);
  const std::vector<QForm> pair{forms[3], forms[4]};
  EXPECT_EQ(common_zero<RationalField>(pair), intersection_point(forms[3], forms[4]));
}
