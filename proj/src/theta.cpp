#include "ellclass/theta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ellclass/errors.hpp"

namespace ellclass {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Complex theta_raw(Complex x, Complex q, Complex q_eighth, int n_terms) {
  const Complex z = std::exp(2.0 * kPi * kI * x);
  // Computed separately (not 1/z) so that theta stays exactly odd.
  const Complex zinv = std::exp(-(2.0 * kPi * kI * x));
  Complex prod = 1.0;
  Complex qn = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    qn *= q;
    prod *= (1.0 - qn) * (1.0 - qn * z) * (1.0 - qn * zinv);
  }
  return 2.0 * q_eighth * std::sin(kPi * x) * prod;
}

Complex theta_prime_raw(Complex q, Complex q_eighth, int n_terms) {
  Complex prod = 1.0;
  Complex qn = 1.0;
  for (int n = 1; n <= n_terms; ++n) {
    qn *= q;
    const Complex f = 1.0 - qn;
    prod *= f * f * f;
  }
  return 2.0 * kPi * q_eighth * prod;
}

}  // namespace

ModularParams::ModularParams(Complex tau, int n_terms) : tau_(tau), n_terms_(n_terms) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
    throw Error(ErrorKind::InvalidArgument, "tau must have positive imaginary part");
  }
  if (n_terms < 1) {
    throw Error(ErrorKind::InvalidArgument, "n_terms must be positive");
  }
  q_ = std::exp(2.0 * kPi * kI * tau);
  const double tail = static_cast<double>(n_terms) * std::log10(std::abs(q_));
  if (!(tail < -16.0)) {
    std::ostringstream os;
    os << "truncation guard violated: |q|^" << n_terms << " = 1e" << tail << " >= 1e-16";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  q_eighth_ = std::exp(kPi * kI * tau / 4.0);
  theta_prime_zero_ = theta_prime_raw(q_, q_eighth_, n_terms_);
  pole_threshold_ = 1e-6 * std::abs(theta_prime_zero_);
}

Complex theta(Complex x, const ModularParams& p) {
  return theta_raw(x, p.q(), p.q_eighth(), p.n_terms());
}

Complex theta_prime_zero(const ModularParams& p) { return p.theta_prime_zero(); }

Complex vartheta(Complex x, const ModularParams& p) {
  return 2.0 * kPi * kI * theta(x, p) / p.theta_prime_zero();
}

bool away_from_pole(Complex x, const ModularParams& p) {
  return std::abs(theta(x, p)) > p.pole_threshold();
}

Complex elliptic_F(Complex a, Complex b, const ModularParams& p) {
  const Complex ta = theta(a, p);
  const Complex tb = theta(b, p);
  if (!(std::abs(ta) > p.pole_threshold())) {
    throw PoleError("delta.a", "theta(a) too close to zero");
  }
  if (!(std::abs(tb) > p.pole_threshold())) {
    throw PoleError("delta.b", "theta(b) too close to zero");
  }
  return p.theta_prime_zero() * theta(a + b, p) / (ta * tb);
}

Complex delta(Complex a, Complex b, const ModularParams& p) {
  return elliptic_F(a, b, p) / (2.0 * kPi * kI);
}

}  // namespace ellclass
