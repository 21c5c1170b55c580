#include <cmath>
#include <limits>

#include "doctest.h"

#include "ellclass/identities.hpp"
#include "ellclass/typecalc.hpp"

using namespace ellclass;

namespace {

CheckConfig small(int samples = 8) {
  CheckConfig c;
  c.samples = samples;
  return c;
}

void require_pass(const IdentityReport& r) {
  INFO(r.name << ": residual " << r.max_relative_residual << " " << r.detail);
  CHECK(r.passed);
  CHECK_FALSE(r.vacuous);
}

}  // namespace

TEST_CASE("residual helpers") {
  CHECK(relative_residual(1.0, 1.0) == 0.0);
  CHECK(relative_residual(0.0, 0.0) == 0.0);
  CHECK(relative_residual(2.0, 1.0) == doctest::Approx(0.5));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(std::isinf(relative_residual(Complex(nan, 0), 1.0)));
  // Two noise-level values of a vanishing function compare against the term magnitude.
  CHECK(relative_residual(Complex(1e-16), Complex(-1e-16)) == doctest::Approx(2.0));
  CHECK(relative_residual(Complex(1e-16), Complex(-1e-16), 1.0) < 1e-9);
  CHECK(relative_residual(2.0, 1.0, 1.0) == doctest::Approx(0.5));
  CHECK(vanishing_residual({1.0, -1.0}) == 0.0);
  CHECK(vanishing_residual({1.0, 1.0}) == doctest::Approx(2.0));
}

TEST_CASE("sampler is deterministic and stays in the box") {
  const ModularParams p;
  Sampler a(derive_seed(0, "x"), p), b(derive_seed(0, "x"), p);
  for (int k = 0; k < 1000; ++k) {
    const Complex z = a.complex_in_box();
    CHECK(z == b.complex_in_box());
    CHECK(std::abs(z.real()) <= 0.4);
    CHECK(std::abs(z.imag()) <= 0.4);
    const int i = a.integer(-2, 3);
    CHECK(i == b.integer(-2, 3));
    CHECK(i >= -2);
    CHECK(i <= 3);
  }
  CHECK(derive_seed(0, "x") != derive_seed(0, "y"));
  CHECK(derive_seed(0, "x") != derive_seed(1, "x"));
  CHECK(derive_seed(0, "x") == derive_seed(0, "x"));
}

TEST_CASE("sampler gives up after persistent poles") {
  Sampler s(1, ModularParams());
  CHECK_THROWS_AS(s.with_point({Symbol::x(1)}, [](const PointAssignment&) -> double { throw PoleError("p", "m"); }),
                  Error);
}

TEST_CASE("random pure functions have x-linear types") {
  Sampler s(3, ModularParams());
  for (int k = 0; k < 50; ++k) {
    const EFun f = random_pure_function(s, 3);
    CHECK_FALSE(f.type().has_x_cross_terms());
  }
}

TEST_CASE("theta-level identities") {
  require_pass(check_quasi_periodicity(small()));
  require_pass(check_delta_symmetry(small()));
  CheckConfig limit = small();
  limit.params = ModularParams(Complex(0, 6));
  require_pass(check_q_limit(limit));
  require_pass(check_fourterm(small()));
  require_pass(check_fourterm(small(), 1e-3));
  require_pass(check_braid_coefficients(small()));
  require_pass(check_monstrous(small()));
}

TEST_CASE("literal flip character is rejected as impure") {
  const EFun e = ell_min(4, 2);
  try {
    demazure(3, LinearForm::mu(1) - LinearForm::mu(2), e);
    FAIL("expected ImpurityError");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ImpurityError);
  }
  CHECK_NOTHROW(demazure(3, LinearForm::mu(2) - LinearForm::mu(1), e));
}

TEST_CASE("operator identities") {
  require_pass(check_braid_relation(small()));
  require_pass(check_quadratic_relation(small()));
  require_pass(check_reduced_quadratic(small()));
  require_pass(check_flip(4, 2, 1, small(4)));
  require_pass(check_flip(6, 3, 2, small(2)));
  require_pass(check_monstrous_flip(small()));
  CHECK_THROWS_AS(check_flip(4, 2, 2, small()), Error);
  CHECK_THROWS_AS(check_flip(4, 1, 1, small()), Error);
}

TEST_CASE("lattice and type checks") {
  require_pass(check_lattice_4_2(small(2)));
  require_pass(check_word_independence(3, 1, small(2)));
  require_pass(check_type_transport(4, 2, 4));
  require_pass(check_move_table(4));
  require_pass(check_nu_independence(4));
  require_pass(check_vanishing(small(2)));
  const IdentityReport empty = check_word_independence(2, 1, small(2));
  CHECK(empty.passed);
  CHECK(empty.vacuous);
}

TEST_CASE("Schubert and weight checks") {
  require_pass(check_fixed_point_restriction(2, small(2)));
  require_pass(check_minimal_product(2, small(2)));
  require_pass(check_schubert_recursion(2, small(2)));
  require_pass(check_r_matrix(2, small(2)));
  require_pass(check_bott_samelson(2, small(2)));
  require_pass(check_triangularity(2, small(2)));
  require_pass(check_weight_example(small(2)));
  require_pass(check_weight_recursion(3, small(2)));
  require_pass(check_weight_restriction(3, small(2)));
  require_pass(check_multiplicity_example());
}

TEST_CASE("suite registry") {
  std::set<std::string> names;
  for (const Suite& s : suites()) names.insert(s.name);
  CHECK(names.count("fourterm"));
  CHECK(names.count("theta"));
  CHECK(names.size() == suites().size());
  CHECK_THROWS_AS(run_suite("no_such_suite", small()), Error);
  const auto reports = run_suite("fourterm", small(4));
  CHECK(reports.size() == 2);
}
