#pragma once

#include <complex>

namespace ellclass {

using Complex = std::complex<double>;

/// Modular parameter tau together with the truncation length of the theta product.
class ModularParams {
 public:
  /// Throws InvalidArgument unless Im(tau) > 0 and |q|^n_terms < 1e-16.
  explicit ModularParams(Complex tau = Complex(0.0, 1.0), int n_terms = 40);

  Complex tau() const noexcept { return tau_; }
  int n_terms() const noexcept { return n_terms_; }
  Complex q() const noexcept { return q_; }
  /// q^{1/8} = exp(pi i tau / 4), the branch used by the product formula.
  Complex q_eighth() const noexcept { return q_eighth_; }
  /// theta'(0); cached because every normalized evaluation needs it.
  Complex theta_prime_zero() const noexcept { return theta_prime_zero_; }
  /// Pole guard: |theta(x)| must exceed this for x to be used as a denominator.
  double pole_threshold() const noexcept { return pole_threshold_; }

 private:
  Complex tau_;
  int n_terms_;
  Complex q_;
  Complex q_eighth_;
  Complex theta_prime_zero_;
  double pole_threshold_;
};

/// theta(x) = 2 q^{1/8} sin(pi x) prod_{n<=N} (1-q^n)(1-q^n z)(1-q^n/z), z = e^{2 pi i x}.
Complex theta(Complex x, const ModularParams& p);

/// Derivative of the truncated product at 0: 2 pi q^{1/8} prod (1-q^n)^3.
Complex theta_prime_zero(const ModularParams& p);

/// theta normalized to unit slope at the origin in the multiplicative variable:
/// vartheta(x) = 2 pi i theta(x) / theta'(0), so vartheta(x) ~ e^{2 pi i x} - 1 near 0.
Complex vartheta(Complex x, const ModularParams& p);

/// F(a,b) = theta'(0) theta(a+b) / (theta(a) theta(b)). Throws PoleError near a zero.
Complex elliptic_F(Complex a, Complex b, const ModularParams& p);

/// delta(a,b) = F(a,b) / (2 pi i) = vartheta(a+b) / (vartheta(a) vartheta(b)).
/// Its q^0 term is (1 - X^{-1}Y^{-1}) / ((1 - X^{-1})(1 - Y^{-1})).
Complex delta(Complex a, Complex b, const ModularParams& p);

/// True when x is far enough from the zero lattice to divide by theta(x).
bool away_from_pole(Complex x, const ModularParams& p);

}  // namespace ellclass
