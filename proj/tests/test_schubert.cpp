#include <random>

#include "doctest.h"

#include "ellclass/errors.hpp"
#include "ellclass/schubert.hpp"

using namespace ellclass;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

PointAssignment random_point(std::mt19937_64& rng, const std::set<Symbol>& symbols) {
  std::uniform_real_distribution<double> d(-0.4, 0.4);
  PointAssignment pt;
  for (Symbol s : symbols) pt.set(s, Complex(d(rng), d(rng)));
  return pt;
}

bool is_constant_one(const ThetaPolynomial& p) {
  return p.monomials().size() == 1 && p.monomials()[0].exponents.empty() &&
         p.monomials()[0].coefficient.re == Rational(1) && p.monomials()[0].coefficient.im == Rational(0);
}

}  // namespace

TEST_CASE("permutation patterns round trip") {
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const LinkPattern p = permutation_pattern(w, n);
      CHECK(pattern_permutation(p) == w);
    }
  }
  CHECK(permutation_pattern(Permutation::identity(2), 2) == minimal_pattern(4, 2));
  CHECK_THROWS_AS(pattern_permutation(minimal_pattern(5, 2)), Error);
  CHECK_THROWS_AS(pattern_permutation(LinkPattern::parse("4,2:1>3,2>4")), Error);
}

TEST_CASE("flag context naming") {
  const FlagContext m = FlagContext::matrices(3);
  CHECK(m.display_name(Symbol::x(4)) == "y1");
  CHECK(m.display_name(Symbol::x(2)) == "x2");
  const FlagContext w = FlagContext::weights(3);
  CHECK(w.display_name(Symbol::x(5)) == "gamma2");
  CHECK(w.display_name(Symbol::x(1)) == "z1");
  CHECK(w.y_count == 2);
}

TEST_CASE("Euler class factors") {
  CHECK(eu_ell_M(2).children().size() == 4);
  CHECK(eu_ell_M_prime(3).children().size() == 6);
  CHECK(eu_ell_Fl(3).children().size() == 3);
  CHECK(b_class(3).children().size() == 6);  // three theta and three inverse-theta factors
}

TEST_CASE("reduced class of the minimal square pattern restricts to 1 at the identity") {
  for (int n = 1; n <= 3; ++n) {
    const FlagContext ctx = FlagContext::matrices(n);
    const EFun x = reduced_class(minimal_pattern(2 * n, n), ctx);
    CHECK(is_constant_one(restrict_symbolic(x, Permutation::identity(n), ctx)));
    for (const Permutation& s : all_permutations(n)) {
      if (!s.is_identity()) CHECK(restrict_symbolic(x, s, ctx).is_zero());
    }
  }
}

TEST_CASE("restriction is the limit of nearby values") {
  // Approach y = x_sigma from a distance just above the pole guard; the error is first order in the offset.
  std::mt19937_64 rng(5);
  const int n = 2;
  const FlagContext ctx = FlagContext::matrices(n);
  const EFun x = reduced_class(permutation_pattern(Permutation({2, 1}), n), ctx);
  for (const Permutation& sigma : all_permutations(n)) {
    const EFun r = restrict_fixed_point(x, sigma, ctx);
    PointAssignment pt = random_point(rng, symbols_of(x));
    PointAssignment near = pt;
    for (int i = 1; i <= n; ++i) {
      near.set(Symbol::x(n + i), pt.value(Symbol::x(sigma(i))) + Complex(1e-5 * i, -2e-5));
    }
    const Complex limit = evaluate(r, near);
    const Complex approx = evaluate(x, near);
    CHECK(std::abs(approx - limit) < 1e-3 * std::max(1.0, std::abs(limit)));
  }
}

TEST_CASE("localization specializes u and inverts mu when asked") {
  const FlagContext plain = FlagContext::matrices(2);
  const FlagContext inv = FlagContext::matrices(2, true);
  const LinkPattern p = permutation_pattern(Permutation({2, 1}), 2);
  const EFun a = reduced_class(p, plain);
  const EFun b = reduced_class(p, inv);
  CHECK_FALSE(symbols_of(a).count(Symbol::u()));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    PointAssignment pt = random_point(rng, symbols_of(a));
    PointAssignment flipped = pt;
    flipped.set(Symbol::mu(1), -pt.value(Symbol::mu(1)));
    flipped.set(Symbol::mu(2), -pt.value(Symbol::mu(2)));
    CHECK(rel(evaluate(b, pt), evaluate(a, flipped)) < 1e-12);
  }
}

TEST_CASE("weight functions validate their pattern") {
  CHECK_THROWS_AS(weight_function(minimal_pattern(6, 3), 3, false), Error);
  CHECK_THROWS_AS(weight_function(LinkPattern::parse("5,2:1>4,5>2"), 3, false), Error);
  CHECK_NOTHROW(weight_function(LinkPattern::parse("5,2:4>1,5>2"), 3, true));
  const LinearSubstitution s = rtv_substitution(3);
  CHECK(s.apply(LinearForm::mu(1)) == LinearForm::h() + LinearForm::mu(3) - LinearForm::mu(1));
  CHECK(s.apply(LinearForm::mu(3)) == LinearForm::mu(3));
  CHECK(mu_inversion(2).apply(LinearForm::mu(2)) == -LinearForm::mu(2));
}
