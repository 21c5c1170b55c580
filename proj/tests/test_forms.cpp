#include <random>

#include "doctest.h"

#include "ellclass/errors.hpp"
#include "ellclass/forms.hpp"
#include "ellclass/permutation.hpp"

using namespace ellclass;

namespace {

const std::vector<Symbol> kUniverse = {Symbol::x(1), Symbol::x(2), Symbol::x(3), Symbol::u(),
                                       Symbol::h(),  Symbol::mu(1), Symbol::mu(2)};

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Rational rational() { return Rational(integer(-4, 4), integer(1, 3)); }
  LinearForm form() {
    LinearForm f;
    for (Symbol s : kUniverse) {
      if (integer(0, 2) == 0) f.add(s, rational());
    }
    return f;
  }
  std::map<Symbol, Rational> point() {
    std::map<Symbol, Rational> v;
    for (Symbol s : kUniverse) v[s] = rational();
    return v;
  }
};

Rational eval(const LinearForm& f, const std::map<Symbol, Rational>& v) {
  Rational acc(0);
  for (const auto& [s, c] : f.terms()) acc += c * v.at(s);
  return acc;
}

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("symbol names, parsing and order") {
  CHECK(Symbol::x(3).name() == "x3");
  CHECK(Symbol::mu(12).name() == "mu12");
  CHECK(Symbol::parse("h") == Symbol::h());
  CHECK(Symbol::parse("mu2") == Symbol::mu(2));
  CHECK_THROWS_AS(Symbol::parse("y1"), Error);
  CHECK_THROWS_AS(Symbol::parse("x0"), Error);
  CHECK(Symbol::x(9) < Symbol::u());
  CHECK(Symbol::u() < Symbol::h());
  CHECK(Symbol::h() < Symbol::mu(1));
}

TEST_CASE("linear forms drop zero coefficients and print canonically") {
  LinearForm f = LinearForm::mu(1) - LinearForm::mu(2) + 2 * LinearForm::h();
  CHECK(f.to_string() == "2*h + mu1 - mu2");
  f += LinearForm::mu(2);
  CHECK(f.terms().size() == 2);
  CHECK((f - f).is_zero());
  CHECK((LinearForm::x(2) + LinearForm::h()).has_x());
  CHECK_FALSE((LinearForm::u() + LinearForm::h()).has_x());
}

TEST_CASE("product polynomial is the product of the linear values") {
  Gen g(7);
  for (int k = 0; k < 200; ++k) {
    const LinearForm a = g.form(), b = g.form();
    const auto v = g.point();
    const QForm q = QForm::product(a, b);
    CHECK(q.polynomial([&](Symbol s) { return v.at(s); }) == eval(a, v) * eval(b, v));
    CHECK(QForm::half_square(a).polynomial([&](Symbol s) { return v.at(s); }) ==
          eval(a, v) * eval(a, v) / 2);
    CHECK(QForm::product(a, b) == QForm::product(b, a));
  }
}

TEST_CASE("substitution commutes with evaluation") {
  Gen g(11);
  for (int k = 0; k < 100; ++k) {
    LinearSubstitution sub;
    sub.set(Symbol::x(1), g.form());
    sub.set(Symbol::mu(1), g.form());
    const LinearForm a = g.form(), b = g.form();
    const auto v = g.point();
    // Value of each symbol after substitution.
    std::map<Symbol, Rational> pulled;
    for (Symbol s : kUniverse) {
      auto it = sub.images().find(s);
      pulled[s] = it == sub.images().end() ? v.at(s) : eval(it->second, v);
    }
    CHECK(eval(sub.apply(a), v) == eval(a, pulled));
    const QForm q = QForm::product(a, b) + QForm::half_square(b);
    CHECK(sub.apply(q).polynomial([&](Symbol s) { return v.at(s); }) ==
          q.polynomial([&](Symbol s) { return pulled.at(s); }));
  }
}

TEST_CASE("permute_x moves the coefficient of x_j to x_w(j)") {
  const Permutation w({2, 3, 1});
  const LinearForm f = LinearForm::x(1) + 2 * LinearForm::x(3) + LinearForm::h();
  const LinearForm g = f.permute_x(w);
  CHECK(g.coefficient(Symbol::x(2)) == Rational(1));
  CHECK(g.coefficient(Symbol::x(1)) == Rational(2));
  CHECK(g.coefficient(Symbol::h()) == Rational(1));
  const QForm q = QForm::product(LinearForm::x(1), LinearForm::x(3));
  CHECK(q.permute_x(w) == QForm::product(LinearForm::x(2), LinearForm::x(1)));
}

TEST_CASE("row and cross terms") {
  const QForm q = QForm::product(LinearForm::x(1), LinearForm::mu(1)) + QForm::half_square(LinearForm::h());
  CHECK(q.row(Symbol::x(1)) == Rational(1, 2) * LinearForm::mu(1));
  CHECK_FALSE(q.has_x_cross_terms());
  CHECK(QForm::product(LinearForm::x(1), LinearForm::x(2)).has_x_cross_terms());
  CHECK(q.non_x_part() == QForm::half_square(LinearForm::h()));
}
