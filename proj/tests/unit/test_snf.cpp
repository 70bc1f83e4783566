#include "metabel/linalg.hpp"
#include "metabel/seifert.hpp"
#include "metabel/snf.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace metabel;

namespace {

AlexanderPresentation presentation(const corpus::Raw& raw) { return alexander_matrix(validate_seifert("k", raw)); }

std::vector<Poly> nontrivial(const InvariantFactors& inv) {
  std::vector<Poly> out;
  for (const auto& d : inv.factors)
    if (!d.is_one()) out.push_back(d);
  return out;
}

const Poly kF{1, -1, 1};

}  // namespace

TEST_SUITE("snf") {
  TEST_CASE("diagonal input is already in Smith form") {
    Matrix<Poly> m(2, 2, Poly());
    m(0, 0) = Poly{1};
    m(1, 1) = Poly{-2, 1};
    const SmithForm s = smith_normal_form(m, true);
    CHECK(s.invariants.factors == std::vector<Poly>{Poly{1}, Poly{-2, 1}});
    CHECK(s.invariants.verified);
    REQUIRE(s.left.has_value());
    REQUIRE(s.right.has_value());
  }

  TEST_CASE("diagonal in the wrong order is fixed up") {
    Matrix<Poly> m(2, 2, Poly());
    m(0, 0) = Poly{-2, 1};
    m(1, 1) = Poly{-3, 1};
    const SmithForm s = smith_normal_form(m, true);
    CHECK(s.invariants.factors == std::vector<Poly>{Poly{1}, Poly{-2, 1} * Poly{-3, 1}});
  }

  TEST_CASE("trefoil") {
    const InvariantFactors inv = smith_normal_form(presentation(corpus::kTrefoil), true);
    CHECK(inv.factors == std::vector<Poly>{Poly{1}, kF});
    CHECK(local_exponents(inv, kF) == std::vector<int>{1});
  }

  TEST_CASE("10_99") {
    const InvariantFactors inv = smith_normal_form(presentation(corpus::k10_99), true);
    REQUIRE(inv.factors.size() == 8);
    for (std::size_t i = 0; i < 6; ++i) CHECK(inv.factors[i] == Poly{1});
    CHECK(inv.factors[6] == pow(kF, 2));
    CHECK(inv.factors[7] == pow(kF, 2));
    CHECK(local_exponents(inv, kF) == std::vector<int>{2, 2});
    CHECK(local_exponents(inv, Poly{1, -3, 1}).empty());
  }

  TEST_CASE("unknot has no invariant factors") {
    const InvariantFactors inv = smith_normal_form(presentation(corpus::kUnknot), true);
    CHECK(inv.factors.empty());
  }

  TEST_CASE("transforms reproduce the diagonal") {
    const Matrix<Poly> a = presentation(corpus::k10_99).matrix;
    const SmithForm s = smith_normal_form(a, true);
    const Matrix<Poly> d = multiply(multiply(*s.left, a, Poly()), *s.right, Poly());
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (i != j) CHECK(d(i, j).is_zero());
    // Diagonal equals the invariant factors up to nonzero constants.
    for (std::size_t i = 0; i < d.rows(); ++i) CHECK(d(i, i).monic() == s.invariants.factors[i]);
    CHECK(bareiss_determinant(*s.left).is_constant());
    CHECK(bareiss_determinant(*s.right).is_constant());
  }

  TEST_CASE("refinement splits roots of different multiplicity") {
    // d = (t - 2)^2 (t - 3) against f = (t - 2)(t - 3).
    InvariantFactors inv;
    inv.factors = {Poly{1}, pow(Poly{-2, 1}, 2) * Poly{-3, 1}};
    const std::vector<Poly> pieces = refine_by_invariants(inv, Poly{-2, 1} * Poly{-3, 1});
    REQUIRE(pieces.size() == 2);
    Poly prod{1};
    for (const auto& p : pieces) {
      CHECK(p.degree() == 1);
      prod *= p;
    }
    CHECK(prod == Poly{-2, 1} * Poly{-3, 1});
  }

  TEST_CASE("property: chain, determinant, rank and evaluation profile on random matrices") {
    const auto family = oracle::random_seifert_family(77, 100);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    for (const auto& raw : family) {
      const AlexanderPresentation a = presentation(raw);
      const NormalizedAlexanderPoly delta = alexander_polynomial(a);
      const InvariantFactors inv = smith_normal_form(a, true);
      CHECK(inv.verified);

      Poly prod{1};
      for (std::size_t i = 0; i < inv.factors.size(); ++i) {
        if (i + 1 < inv.factors.size()) CHECK(divides(inv.factors[i], inv.factors[i + 1]));
        prod *= inv.factors[i];
      }
      // Over Q[t] the unit t^k of Lambda shows up in the diagonal.
      CHECK(prod == Poly::monomial(Rational(1), delta.t_power) * delta.delta.monic());

      // rank over Q(t) = number of nonzero d_i; A has full rank here.
      std::size_t nonzero = 0;
      for (const auto& d : inv.factors) nonzero += d.is_zero() ? 0 : 1;

      // At t0 away from the roots of delta every d_i(t0) is a unit, matching
      // the full rank of A(t0).
      Rational t0;
      do t0 = oracle::ratio(num(rng), den(rng));
      while (sgn(t0) == 0 || sgn(delta.delta.eval(t0)) == 0);
      for (const auto& d : inv.factors) CHECK(sgn(d.eval(t0)) != 0);
      CHECK(oracle::rational_rank(oracle::evaluate(a.matrix, t0)) == nonzero);
      CHECK(nonzero == a.matrix.rows());
    }
  }

  TEST_CASE("property: invariant factors agree with gcds of minors") {
    const auto family = oracle::random_seifert_family(31, 40);
    for (const auto& raw : family) {
      const AlexanderPresentation a = presentation(raw);
      CHECK(smith_normal_form(a).factors == oracle::determinantal_invariants(a.matrix));
    }
    CHECK(smith_normal_form(presentation(corpus::k10_99)).factors ==
          oracle::determinantal_invariants(presentation(corpus::k10_99).matrix));
  }

  TEST_CASE("oracle decomposition over corpus knots") {
    const SeifertData s = validate_seifert("10_99", corpus::k10_99);
    const InvariantFactors inv = smith_normal_form(alexander_matrix(s), false);
    CHECK_FALSE(inv.verified);
    const Decomposition d = oracle_decomposition(inv, root_classes(alexander_polynomial(alexander_matrix(s))));
    CHECK(d.provenance == Provenance::oracle);
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].factor == kF);
    CHECK(d.classes[0].exponents == std::vector<int>{2, 2});
    CHECK(nontrivial(inv).size() == 2);
  }
}
