#include <random>

#include "doctest.h"

#include "ellclass/efun.hpp"
#include "ellclass/errors.hpp"
#include "ellclass/typecalc.hpp"

using namespace ellclass;

namespace {

LinearForm x(int i) { return LinearForm::x(i); }
LinearForm mu(int j) { return LinearForm::mu(j); }
LinearForm h() { return LinearForm::h(); }

struct Points {
  std::mt19937_64 rng{99};
  std::uniform_real_distribution<double> d{-0.4, 0.4};
  PointAssignment draw(const std::set<Symbol>& symbols) {
    PointAssignment pt;
    for (Symbol s : symbols) pt.set(s, Complex(d(rng), d(rng)));
    return pt;
  }
};

std::set<Symbol> merged_symbols(const std::vector<std::set<Symbol>>& parts) {
  std::set<Symbol> out;
  for (const auto& p : parts) out.insert(p.begin(), p.end());
  return out;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

EFun sample_function() {
  return EFun::product({EFun::delta_leaf(x(1) - x(3) + LinearForm::u(), mu(1)),
                        EFun::delta_leaf(x(2) - x(1), h()), EFun::theta_leaf(x(3) + mu(2)),
                        EFun::inv_theta_leaf(x(2) - x(3) + h())});
}

}  // namespace

TEST_CASE("leaves evaluate to normalized theta expressions") {
  const ModularParams p;
  Points pts;
  const EFun f = sample_function();
  for (int k = 0; k < 20; ++k) {
    PointAssignment pt = pts.draw(symbols_of(f));
    auto v = [&](const LinearForm& a) { return pt.value(a); };
    const Complex expected = delta(v(x(1) - x(3) + LinearForm::u()), v(mu(1)), p) * delta(v(x(2) - x(1)), v(h()), p) *
                             vartheta(v(x(3) + mu(2)), p) / vartheta(v(x(2) - x(3) + h()), p);
    CHECK(rel(evaluate(f, pt), expected) < 1e-13);
  }
}

TEST_CASE("types follow the leaf rules") {
  CHECK(EFun::delta_leaf(x(1), mu(1)).type() == QForm::product(x(1), mu(1)));
  CHECK(EFun::theta_leaf(x(1)).type() == QForm::half_square(x(1)));
  CHECK(EFun::inv_theta_leaf(x(1)).type() == -QForm::half_square(x(1)));
  CHECK(EFun::one().type().is_zero());
  const EFun f = sample_function();
  CHECK(EFun::x_permuted(Permutation({2, 3, 1}), f).type() == f.type().permute_x(Permutation({2, 3, 1})));
}

TEST_CASE("sums of different types are rejected") {
  try {
    EFun::sum({EFun::delta_leaf(x(1), mu(1)), EFun::delta_leaf(x(2), mu(1))});
    FAIL("expected ImpurityError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ImpurityError);
  }
  CHECK_THROWS_AS(EFun::sum({}), Error);
  CHECK_THROWS_AS(demazure(1, mu(1), EFun::one()), Error);
}

TEST_CASE("x permutation substitutes x_j by x_w(j)") {
  Points pts;
  const EFun f = sample_function();
  const Permutation w({3, 1, 2});
  const EFun g = EFun::x_permuted(w, f);
  const EFun gg = EFun::x_permuted(Permutation::simple(1), g);
  CHECK(gg.kind() == EFun::Kind::XPermuted);
  CHECK(gg.children().front().node() == f.node());
  for (int k = 0; k < 20; ++k) {
    const PointAssignment pt = pts.draw(symbols_of(f));
    CHECK(rel(evaluate(g, pt), evaluate(f, pt.permuted_x(w))) < 1e-13);
    CHECK(rel(evaluate(gg, pt), evaluate(g, pt.permuted_x(Permutation::simple(1)))) < 1e-13);
    CHECK(rel(evaluate(materialize(gg), pt), evaluate(gg, pt)) < 1e-13);
  }
}

TEST_CASE("substitution commutes with evaluation") {
  Points pts;
  const EFun f = EFun::x_permuted(Permutation::simple(2), sample_function());
  LinearSubstitution s;
  s.set(Symbol::mu(1), h() - mu(2));
  s.set(Symbol::x(3), x(1) + mu(1));
  const EFun g = substitute(f, s);
  CHECK(g.type() == s.apply(f.type()));
  for (int k = 0; k < 20; ++k) {
    PointAssignment pt = pts.draw(merged_symbols({symbols_of(f), symbols_of(g)}));
    PointAssignment pulled = pt;
    for (const auto& [sym, image] : s.images()) pulled.set(sym, pt.value(image));
    CHECK(rel(evaluate(g, pt), evaluate(f, pulled)) < 1e-12);
  }
}

TEST_CASE("pole errors carry the leaf path") {
  const EFun f = EFun::product({EFun::theta_leaf(x(1)), EFun::delta_leaf(x(1) - x(2), h())});
  PointAssignment pt;
  pt.set(Symbol::x(1), 0.1);
  pt.set(Symbol::x(2), 0.1);
  pt.set(Symbol::h(), 0.2);
  try {
    evaluate(f, pt);
    FAIL("expected PoleError");
  } catch (const PoleError& e) {
    CHECK(e.path().find("root/1") == 0);
    CHECK(e.path().find("delta.a") != std::string::npos);
  }
}

TEST_CASE("demazure operators") {
  Points pts;
  const EFun e = ell_min(4, 2);
  const LinearForm m1 = admissible_mu(e.type(), 1);
  const EFun c = demazure(1, m1, e);
  CHECK(c.type() == e.type() + QForm::product(x(2) - x(1), m1));
  CHECK(demazure_diamond(1, e, false).type() == c.type());
  for (int k = 0; k < 10; ++k) {
    PointAssignment pt = pts.draw(symbols_of(c));
    const Complex d1 = delta(pt.value(x(2) - x(1)), pt.value(m1), pt.params());
    const Complex d2 = delta(pt.value(x(1) - x(2)), pt.value(h()), pt.params());
    const Complex expected = d1 * evaluate(e, pt) + d2 * evaluate(e, pt.permuted_x(Permutation::simple(1)));
    CHECK(rel(evaluate(c, pt), expected) < 1e-13);
    const EFun red = demazure_reduced(1, m1, e);
    const Complex scale = vartheta(pt.value(m1), pt.params()) * vartheta(pt.value(h()), pt.params()) /
                          vartheta(pt.value(m1 + h()), pt.params());
    CHECK(rel(evaluate(red, pt), scale * evaluate(c, pt)) < 1e-13);
  }
  CHECK_THROWS_AS(demazure_reduced(3, -h(), ell_min(8, 2)), Error);
}

TEST_CASE("diamond composites carry the transported types") {
  const EFun e = ell_min(4, 2);
  const QForm q0 = e.type();
  for (const std::vector<int>& word : std::vector<std::vector<int>>{{1}, {2, 1}, {3, 2, 1}, {1, 3, 2}, {2, 1, 3, 2}}) {
    const Permutation w = Permutation::from_word(word, 4);
    CHECK(compose_diamond(word, e, true).type() == reduced_transport(w, q0, 4));
    CHECK(compose_diamond(word, e, false).type() == unreduced_transport(w, q0, 4));
  }
}

TEST_CASE("minimal class is a product of three leaves for (8,2)") {
  const EFun e = ell_min(8, 2);
  CHECK(e.kind() == EFun::Kind::Product);
  CHECK(e.children().size() == 3);
  CHECK(e.type() == minimal_type(8, 2));
  const EFun cls = ell_class(LinkPattern::parse("8,2:7>1,8>2"));
  CHECK(cls.type() == e.type());
}

TEST_CASE("theta polynomial expansion preserves values") {
  Points pts;
  const EFun f = compose_diamond({2, 1}, ell_min(3, 1), false);
  const ThetaPolynomial tp = ThetaPolynomial::expand(f);
  const EFun g = tp.to_efun();
  CHECK(g.type() == f.type());
  for (int k = 0; k < 10; ++k) {
    const PointAssignment pt = pts.draw(symbols_of(f));
    CHECK(rel(evaluate(f, pt), evaluate(g, pt)) < 1e-11);
  }
  // vartheta(x1 - x2) restricted to x2 := x1 vanishes; its inverse is a pole.
  LinearSubstitution s;
  s.set(Symbol::x(2), x(1));
  CHECK(ThetaPolynomial::expand(EFun::theta_leaf(x(1) - x(2))).substitute(s).is_zero());
  CHECK_THROWS_AS(ThetaPolynomial::expand(EFun::inv_theta_leaf(x(1) - x(2))).substitute(s), Error);
  // Odd theta: vartheta(-a) folds into a sign.
  const auto neg = ThetaPolynomial::expand(EFun::theta_leaf(x(2) - x(1)));
  REQUIRE(neg.monomials().size() == 1);
  CHECK(neg.monomials()[0].coefficient.re == Rational(-1));
}

TEST_CASE("magnitude evaluation adds term sizes") {
  Points pts;
  const EFun f = sample_function();
  const EFun cancel = EFun::sum({f, EFun::scale(GaussRational{Rational(-1), Rational(0)}, f)});
  for (int k = 0; k < 5; ++k) {
    const PointAssignment pt = pts.draw(symbols_of(f));
    CHECK(std::abs(evaluate(cancel, pt)) < 1e-15 * std::abs(evaluate(f, pt)));
    CHECK(evaluate_magnitude(cancel, pt) == doctest::Approx(2.0 * std::abs(evaluate(f, pt))));
    CHECK(evaluate_magnitude(f, pt) == doctest::Approx(std::abs(evaluate(f, pt))));
  }
}
