#include <random>

#include "doctest.h"

#include "ellclass/errors.hpp"
#include "ellclass/linkpattern.hpp"
#include "ellclass/typecalc.hpp"

using namespace ellclass;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Rational rational() { return Rational(integer(-5, 5), integer(1, 3)); }
  LinearForm form(int m) {
    LinearForm f;
    for (int i = 1; i <= m; ++i) f.add(Symbol::x(i), rational());
    f.add(Symbol::h(), rational());
    f.add(Symbol::mu(1), rational());
    f.add(Symbol::u(), rational());
    return f;
  }
  QForm qform(int m) { return QForm::product(form(m), form(m)) + QForm::half_square(form(m)); }
};

using Point = std::map<Symbol, Rational>;

Point random_point(Gen& g, int m) {
  Point v;
  for (int i = 1; i <= m; ++i) v[Symbol::x(i)] = g.rational();
  v[Symbol::h()] = g.rational();
  v[Symbol::u()] = g.rational();
  v[Symbol::mu(1)] = g.rational();
  return v;
}

Rational poly(const QForm& q, const Point& v) {
  return q.polynomial([&](Symbol s) { return v.count(s) ? v.at(s) : Rational(0); });
}

Rational value(const LinearForm& f, const Point& v) {
  Rational acc(0);
  for (const auto& [s, c] : f.terms()) acc += c * (v.count(s) ? v.at(s) : Rational(0));
  return acc;
}

}  // namespace

TEST_CASE("s_action swaps two variables of the polynomial") {
  Gen g(1);
  for (int k = 0; k < 100; ++k) {
    const QForm q = g.qform(4);
    const int i = g.integer(1, 3);
    Point v = random_point(g, 4), sv = v;
    std::swap(sv[Symbol::x(i)], sv[Symbol::x(i + 1)]);
    CHECK(poly(s_action(i, q), v) == poly(q, sv));
  }
}

TEST_CASE("divided difference agrees with the difference quotient") {
  Gen g(2);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const QForm q = g.qform(4);
    const int i = g.integer(1, 3);
    Point v = random_point(g, 4), sv = v;
    const Rational gap = v[Symbol::x(i)] - v[Symbol::x(i + 1)];
    if (gap == Rational(0)) continue;
    std::swap(sv[Symbol::x(i)], sv[Symbol::x(i + 1)]);
    CHECK(value(divided_difference(i, q), v) == (poly(q, v) - poly(q, sv)) / gap);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("divide_by_root rejects non-multiples") {
  CHECK_THROWS_AS(divide_by_root(1, QForm::half_square(LinearForm::x(1))), Error);
  try {
    divide_by_root(1, QForm::half_square(LinearForm::x(1)));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
}

TEST_CASE("admissible characters of the minimal class are node-value differences") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{2, 1}, {4, 2}, {5, 2}, {6, 3}, {8, 2}}) {
    const QForm t = minimal_type(m, r);
    const auto v = node_values(minimal_pattern(m, r));
    for (int i = 1; i < m; ++i) CHECK(admissible_mu(t, i) == v[i - 1] - v[i]);
  }
  // (8,2): loose nodes 3..6 give -h, the step at 3 is the vanishing one.
  CHECK(admissible_mu(minimal_type(8, 2), 3) == -LinearForm::h());
}

TEST_CASE("admissible_mu error kinds") {
  auto kind_of = [](const QForm& q, int i) {
    try {
      admissible_mu(q, i);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of(QForm::half_square(LinearForm::x(1)), 1) == ErrorKind::NotACharacter);
  CHECK(kind_of(rho_h(3), 1) == ErrorKind::TrivialCharacter);
}

TEST_CASE("type decomposition round trip") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {6, 2}}) {
    const QForm t = minimal_type(m, r);
    const auto d = decompose_type(t, m);
    CHECK(d.alpha == node_values(minimal_pattern(m, r)));
    CHECK(recompose_type(d) == t);
    CHECK_FALSE(d.q_mu.has_x_cross_terms());
  }
  CHECK_THROWS_AS(decompose_type(QForm::product(LinearForm::x(1), LinearForm::x(2)), 2), Error);
}

TEST_CASE("rho and phi") {
  CHECK(rho(3) == -1 * LinearForm::x(1) - 2 * LinearForm::x(2) - 3 * LinearForm::x(3));
  const std::vector<LinearForm> a = {LinearForm::mu(1), LinearForm::mu(2), LinearForm::h()};
  CHECK(phi(Permutation::identity(3), a).is_zero());
  CHECK(phi(Permutation::simple(1), a) == LinearForm::mu(1) - LinearForm::mu(2));
  // w0 = 321 inverts every pair.
  CHECK(phi(Permutation({3, 2, 1}), a) == 2 * LinearForm::mu(1) - 2 * LinearForm::h());
}

TEST_CASE("transport at the identity is the identity") {
  const QForm t = minimal_type(4, 2);
  CHECK(reduced_transport(Permutation::identity(4), t, 4) == t);
  CHECK(unreduced_transport(Permutation::identity(4), t, 4) == t);
  const auto alpha = decompose_type(t, 4).alpha;
  const auto moved = permute_coefficients(Permutation::simple(1), alpha);
  CHECK(moved[0] == alpha[1]);
  CHECK(moved[1] == alpha[0]);
}
