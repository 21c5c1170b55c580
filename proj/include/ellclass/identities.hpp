#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ellclass/efun.hpp"
#include "ellclass/errors.hpp"
#include "ellclass/theta.hpp"

namespace ellclass {

/// Outcome of one numerical or exact check. passed == (max_relative_residual < tolerance).
struct IdentityReport {
  std::string name;
  int samples = 0;
  double max_relative_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  int resamples = 0;
  bool vacuous = false;  // no sample or comparison was made
  std::string detail;
};

struct CheckConfig {
  ModularParams params{};
  int samples = 100;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

/// |l - r| / max(|l|, |r|, 1e-30); NaN maps to +inf.
double relative_residual(Complex l, Complex r);
/// Functions that vanish identically evaluate to rounding noise; below this
/// fraction of the term magnitude, differences are measured against the magnitude.
inline constexpr double kCancellationFloor = 1e-6;
/// Like relative_residual, with the scale floored at kCancellationFloor * magnitude.
double relative_residual(Complex l, Complex r, double magnitude);
/// |sum t| / max |t| for a sum that should vanish.
double vanishing_residual(const std::vector<Complex>& terms);

/// Deterministic point generator: real and imaginary parts uniform in [-0.4, 0.4].
class Sampler {
 public:
  Sampler(std::uint64_t seed, const ModularParams& params) : rng_(seed), params_(params) {}

  static constexpr int kMaxResamples = 100;

  double uniform(double lo, double hi);
  Complex complex_in_box(double half_width = 0.4);
  Rational small_rational();
  int integer(int lo, int hi);
  std::mt19937_64& engine() { return rng_; }

  PointAssignment draw(const std::set<Symbol>& symbols);

  /// Calls fn(point) until it returns without PoleError; throws ResampleExhausted after 100 retries.
  template <typename Fn>
  auto with_point(const std::set<Symbol>& symbols, Fn&& fn) {
    for (int attempt = 0;; ++attempt) {
      PointAssignment pt = draw(symbols);
      try {
        return fn(pt);
      } catch (const PoleError&) {
        if (attempt >= kMaxResamples) {
          throw Error(ErrorKind::ResampleExhausted, "pole proximity persisted over 100 resamples");
        }
        ++resamples_;
      }
    }
  }

  int resamples() const noexcept { return resamples_; }

 private:
  std::mt19937_64 rng_;
  ModularParams params_;
  int resamples_ = 0;
};

/// Seed for a named check, so suites do not share random streams.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& name);

// Theta-level identities evaluated directly from theta values.
IdentityReport check_quasi_periodicity(const CheckConfig& cfg);
IdentityReport check_delta_symmetry(const CheckConfig& cfg);
/// q^0 limit of delta; needs Im tau >= 6 in cfg.params.
IdentityReport check_q_limit(const CheckConfig& cfg);
/// Four-term delta identity; epsilon > 0 pins mu3 = mu2 (1 + epsilon).
IdentityReport check_fourterm(const CheckConfig& cfg, double epsilon = 0.0);
IdentityReport check_braid_coefficients(const CheckConfig& cfg);
IdentityReport check_monstrous(const CheckConfig& cfg);

// Operator identities built from expression trees.
/// Random pure function of x_1..x_m whose type is linear in x.
EFun random_pure_function(Sampler& s, int m);
IdentityReport check_braid_relation(const CheckConfig& cfg);
IdentityReport check_quadratic_relation(const CheckConfig& cfg);
IdentityReport check_reduced_quadratic(const CheckConfig& cfg);
/// Throws InvalidArgument unless 1 <= k < r.
IdentityReport check_flip(int m, int r, int k, const CheckConfig& cfg);
/// Monstrous relation against the flip sides for (4,2,1) at shared points.
IdentityReport check_monstrous_flip(const CheckConfig& cfg);
IdentityReport check_word_independence(int m, int r, const CheckConfig& cfg);
/// Exact character multisets agree across all minimal presentations for every pattern with m <= max_m.
IdentityReport check_nu_independence(int max_m);
/// Twelve-pattern lattice for m = 4, r = 2 against the tabulated characters.
IdentityReport check_lattice_4_2(const CheckConfig& cfg);
/// Exact type law for every word of length <= max_len starting at the minimal class.
IdentityReport check_type_transport(int m, int r, int max_len);
/// Node-value characters against admissible characters for all patterns with m <= max_m.
IdentityReport check_move_table(int max_m);
IdentityReport check_vanishing(const CheckConfig& cfg);

// Schubert normalizations.
IdentityReport check_fixed_point_restriction(int n, const CheckConfig& cfg);
IdentityReport check_minimal_product(int n, const CheckConfig& cfg);
IdentityReport check_schubert_recursion(int n, const CheckConfig& cfg);
IdentityReport check_r_matrix(int n, const CheckConfig& cfg);
IdentityReport check_bott_samelson(int n, const CheckConfig& cfg);
IdentityReport check_triangularity(int n, const CheckConfig& cfg);
IdentityReport check_weight_example(const CheckConfig& cfg);
IdentityReport check_weight_recursion(int n, const CheckConfig& cfg);
IdentityReport check_weight_restriction(int n, const CheckConfig& cfg);
/// Exact boundary multiplicities for the rank-one example at several lambda values.
IdentityReport check_multiplicity_example();

/// A named group of checks runnable from the command line.
struct Suite {
  std::string name;
  std::string description;
  std::function<std::vector<IdentityReport>(const CheckConfig&)> run;
};

const std::vector<Suite>& suites();
/// Throws InvalidArgument for unknown names; "all" runs every suite in order.
std::vector<IdentityReport> run_suite(const std::string& name, const CheckConfig& cfg);

}  // namespace ellclass
