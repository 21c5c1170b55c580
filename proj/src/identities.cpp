#include "ellclass/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ellclass/linkpattern.hpp"
#include "ellclass/schubert.hpp"
#include "ellclass/typecalc.hpp"

namespace ellclass {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// Running maximum of residuals for one report.
class Tally {
 public:
  Tally(std::string name, double tol) {
    report_.name = std::move(name);
    report_.tolerance = tol;
  }

  void add(double residual) {
    if (std::isnan(residual)) residual = kInf;
    report_.max_relative_residual = std::max(report_.max_relative_residual, residual);
    ++report_.samples;
  }

  void note(const std::string& text) {
    if (!report_.detail.empty()) report_.detail += "; ";
    report_.detail += text;
  }

  IdentityReport finish(int resamples = 0) {
    report_.resamples = resamples;
    report_.vacuous = report_.samples == 0;
    report_.passed = report_.max_relative_residual < report_.tolerance;
    return report_;
  }

 private:
  IdentityReport report_;
};

std::set<Symbol> x_symbols(int m, std::set<Symbol> extra = {}) {
  for (int i = 1; i <= m; ++i) extra.insert(Symbol::x(i));
  return extra;
}

std::set<Symbol> merged(const EFun& a, const EFun& b) {
  std::set<Symbol> s = symbols_of(a);
  const auto t = symbols_of(b);
  s.insert(t.begin(), t.end());
  return s;
}

/// Maximum relative residual between two functions over cfg.samples points.
void compare_functions(Tally& tally, Sampler& sampler, const EFun& lhs, const EFun& rhs, int samples,
                       const std::map<Symbol, Complex>& fixed = {}) {
  const auto symbols = merged(lhs, rhs);
  for (int k = 0; k < samples; ++k) {
    const double res = sampler.with_point(symbols, [&](PointAssignment& pt) {
      for (const auto& [s, v] : fixed) pt.set(s, v);
      const double magnitude = std::max(evaluate_magnitude(lhs, pt), evaluate_magnitude(rhs, pt));
      return relative_residual(evaluate(lhs, pt), evaluate(rhs, pt), magnitude);
    });
    tally.add(res);
  }
}

Complex vt(Complex x, const ModularParams& p) { return vartheta(x, p); }

std::string join_forms(const std::vector<LinearForm>& forms) {
  std::string out = "{";
  for (std::size_t k = 0; k < forms.size(); ++k) out += (k ? ", " : "") + forms[k].to_string();
  return out + "}";
}

std::vector<LinearForm> sorted(std::vector<LinearForm> v) {
  std::sort(v.begin(), v.end());
  return v;
}

LinearForm mu_(int j) { return LinearForm::mu(j); }
LinearForm h_() { return LinearForm::h(); }

}  // namespace

// ---------------------------------------------------------------- basics

double relative_residual(Complex l, Complex r) {
  const double scale = std::max({std::abs(l), std::abs(r), 1e-30});
  const double res = std::abs(l - r) / scale;
  return std::isnan(res) ? kInf : res;
}

double relative_residual(Complex l, Complex r, double magnitude) {
  const double scale = std::max({std::abs(l), std::abs(r), kCancellationFloor * magnitude, 1e-30});
  const double res = std::abs(l - r) / scale;
  return std::isnan(res) ? kInf : res;
}

double vanishing_residual(const std::vector<Complex>& terms) {
  Complex total = 0.0;
  double scale = 1e-30;
  for (Complex t : terms) {
    total += t;
    scale = std::max(scale, std::abs(t));
  }
  const double res = std::abs(total) / scale;
  return std::isnan(res) ? kInf : res;
}

double Sampler::uniform(double lo, double hi) {
  // 53 random bits mapped to [0, 1); identical on every platform for a given seed.
  const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Complex Sampler::complex_in_box(double half_width) {
  const double re = uniform(-half_width, half_width);
  const double im = uniform(-half_width, half_width);
  return {re, im};
}

int Sampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Rational Sampler::small_rational() { return Rational(integer(-3, 3), integer(1, 2)); }

PointAssignment Sampler::draw(const std::set<Symbol>& symbols) {
  PointAssignment pt(params_);
  for (Symbol s : symbols) pt.set(s, complex_in_box());
  return pt;
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : name) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::uint64_t z = seed + hash + 0x9E3779B97F4A7C15ULL;  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------- theta laws

IdentityReport check_quasi_periodicity(const CheckConfig& cfg) {
  Tally tally("theta_quasi_periodicity", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "theta_quasi_periodicity"), cfg.params);
  const ModularParams& p = cfg.params;
  const Complex i(0.0, 1.0);
  for (int k = 0; k < cfg.samples; ++k) {
    const Complex x = s.complex_in_box();
    const Complex t = theta(x, p);
    const double r1 = relative_residual(theta(x + 1.0, p), -t);
    const Complex factor = -std::exp(-kPi * i * p.tau()) * std::exp(-2.0 * kPi * i * x);
    const double r2 = relative_residual(theta(x + p.tau(), p), factor * t);
    tally.add(std::max(r1, r2));
  }
  return tally.finish();
}

IdentityReport check_delta_symmetry(const CheckConfig& cfg) {
  Tally tally("delta_symmetry", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "delta_symmetry"), cfg.params);
  const ModularParams& p = cfg.params;
  for (int k = 0; k < cfg.samples; ++k) {
    const double res = s.with_point({Symbol::x(1), Symbol::x(2)}, [&](const PointAssignment& pt) {
      const Complex a = pt.value(Symbol::x(1));
      const Complex b = pt.value(Symbol::x(2));
      const Complex d = delta(a, b, p);
      return std::max(relative_residual(d, delta(b, a, p)), relative_residual(delta(-a, -b, p), -d));
    });
    tally.add(res);
  }
  return tally.finish(s.resamples());
}

IdentityReport check_q_limit(const CheckConfig& cfg) {
  Tally tally("delta_q_limit", cfg.tol);
  if (cfg.params.tau().imag() < 6.0) {
    tally.note("skipped: needs Im tau >= 6");
    return tally.finish();
  }
  Sampler s(derive_seed(cfg.seed, "delta_q_limit"), cfg.params);
  const Complex i(0.0, 1.0);
  for (int k = 0; k < cfg.samples; ++k) {
    const double res = s.with_point({Symbol::x(1), Symbol::x(2)}, [&](const PointAssignment& pt) {
      const Complex a = pt.value(Symbol::x(1));
      const Complex b = pt.value(Symbol::x(2));
      const Complex xi = std::exp(-2.0 * kPi * i * a);
      const Complex yi = std::exp(-2.0 * kPi * i * b);
      return relative_residual(delta(a, b, cfg.params), (1.0 - xi * yi) / ((1.0 - xi) * (1.0 - yi)));
    });
    tally.add(res);
  }
  return tally.finish(s.resamples());
}

IdentityReport check_fourterm(const CheckConfig& cfg, double epsilon) {
  Tally tally(epsilon > 0 ? "fourterm_degenerate" : "fourterm", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "fourterm"), cfg.params);
  const ModularParams& p = cfg.params;
  std::set<Symbol> symbols = x_symbols(3, {Symbol::h(), Symbol::mu(1), Symbol::mu(2), Symbol::mu(3)});
  for (int k = 0; k < cfg.samples; ++k) {
    const double res = s.with_point(symbols, [&](PointAssignment& pt) {
      const Complex x1 = pt.value(Symbol::x(1)), x2 = pt.value(Symbol::x(2)), x3 = pt.value(Symbol::x(3));
      const Complex m1 = pt.value(Symbol::mu(1)), m2 = pt.value(Symbol::mu(2));
      const Complex m3 = epsilon > 0 ? m2 * (1.0 + epsilon) : pt.value(Symbol::mu(3));
      const Complex h = pt.value(Symbol::h());
      auto d = [&](Complex a, Complex b) { return delta(a, b, p); };
      const Complex lhs = d(x1 - x2, h) * d(x2 - x1, h) * d(x3 - x1, m3 - m1) +
                          d(x2 - x1, m2 - m1) * d(x2 - x1, m3 - m2) * d(x3 - x2, m3 - m1);
      const Complex rhs = d(x2 - x3, h) * d(x3 - x2, h) * d(x3 - x1, m3 - m1) +
                          d(x2 - x1, m3 - m1) * d(x3 - x2, m2 - m1) * d(x3 - x2, m3 - m2);
      return relative_residual(lhs, rhs);
    });
    tally.add(res);
  }
  return tally.finish(s.resamples());
}

IdentityReport check_braid_coefficients(const CheckConfig& cfg) {
  Tally tally("braid_coefficients", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "braid_coefficients"), cfg.params);
  const ModularParams& p = cfg.params;
  std::set<Symbol> symbols = x_symbols(3, {Symbol::mu(1), Symbol::mu(2), Symbol::mu(3)});
  for (int k = 0; k < cfg.samples; ++k) {
    const double res = s.with_point(symbols, [&](const PointAssignment& pt) {
      const Complex x1 = pt.value(Symbol::x(1)), x2 = pt.value(Symbol::x(2)), x3 = pt.value(Symbol::x(3));
      const Complex m1 = pt.value(Symbol::mu(1)), m2 = pt.value(Symbol::mu(2)), m3 = pt.value(Symbol::mu(3));
      auto d = [&](Complex a, Complex b) { return delta(a, b, p); };
      // Coefficient of f(x1,x3,x2) in the braid difference.
      const double c132 = vanishing_residual({d(x2 - x1, m3 - m2) * d(x3 - x1, m2 - m1),
                                              -d(x2 - x3, m3 - m2) * d(x3 - x1, m3 - m1),
                                              -d(x2 - x1, m3 - m1) * d(x3 - x2, m2 - m1)});
      // Coefficient of f(x2,x1,x3).
      const double c213 = vanishing_residual({d(x1 - x2, m2 - m1) * d(x3 - x1, m3 - m1),
                                              d(x2 - x1, m3 - m2) * d(x3 - x2, m3 - m1),
                                              -d(x3 - x1, m3 - m2) * d(x3 - x2, m2 - m1)});
      return std::max(c132, c213);
    });
    tally.add(res);
  }
  return tally.finish(s.resamples());
}

namespace {

struct MonstrousSides {
  Complex lhs;
  Complex rhs;
};

MonstrousSides monstrous_sides(Complex x1, Complex x2, Complex y1, Complex y2, Complex m1, Complex m2, Complex h,
                               const ModularParams& p) {
  auto t = [&](Complex a) { return vt(a, p); };
  const Complex lhs =
      t(y2 - y1) * (t(h) * t(m2 + x2 - m1 - x1) * t(x2 - y1) * t(h + x1 - y2) * t(m1 + x2 - y2) * t(m2 + x1 - y1) -
                    t(m2 - m1) * t(h + x1 - x2) * t(x1 - y1) * t(h + x2 - y2) * t(m1 + x1 - y2) * t(m2 + x2 - y1));
  const Complex rhs =
      t(x2 - x1) * (t(h) * t(x2 - y1) * t(m2 + y2 - m1 - y1) * t(h + x1 - y2) * t(m1 + x1 - y1) * t(m2 + x2 - y2) -
                    t(m2 - m1) * t(h + y1 - y2) * t(x2 - y2) * t(h + x1 - y1) * t(m1 + x1 - y2) * t(m2 + x2 - y1));
  return {lhs, rhs};
}

}  // namespace

IdentityReport check_monstrous(const CheckConfig& cfg) {
  Tally tally("monstrous", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "monstrous"), cfg.params);
  for (int k = 0; k < cfg.samples; ++k) {
    const Complex x1 = s.complex_in_box(), x2 = s.complex_in_box(), y1 = s.complex_in_box(),
                  y2 = s.complex_in_box(), m1 = s.complex_in_box(), m2 = s.complex_in_box(),
                  h = s.complex_in_box();
    const auto sides = monstrous_sides(x1, x2, y1, y2, m1, m2, h, cfg.params);
    tally.add(relative_residual(sides.lhs, sides.rhs));
  }
  return tally.finish();
}

// ---------------------------------------------------------------- operators

EFun random_pure_function(Sampler& s, int m) {
  const std::vector<LinearForm> seconds = {mu_(1), mu_(2), mu_(3), h_(), mu_(1) + mu_(2), mu_(3) - h_()};
  std::vector<EFun> factors;
  const int count = s.integer(2, 4);
  for (int k = 0; k < count; ++k) {
    LinearForm a;
    for (int j = 1; j <= m; ++j) a += s.integer(-1, 1) * LinearForm::x(j);
    if (!a.has_x()) a += LinearForm::x(s.integer(1, m));
    if (s.integer(0, 1) == 1) a += LinearForm::u();
    factors.push_back(EFun::delta_leaf(a, seconds[static_cast<std::size_t>(s.integer(0, 5))]));
  }
  // An x-free theta factor keeps the type linear in x.
  factors.push_back(EFun::theta_leaf(mu_(s.integer(1, 3)) + h_()));
  return EFun::product(std::move(factors));
}

namespace {

/// Draws random pure functions until build(f) succeeds, skipping degenerate characters.
template <typename Build>
auto build_with_random_function(Sampler& s, int m, Build&& build) {
  for (int attempt = 0;; ++attempt) {
    try {
      return build(random_pure_function(s, m));
    } catch (const Error& e) {
      const bool degenerate = e.kind() == ErrorKind::TrivialCharacter || e.kind() == ErrorKind::ReducedUndefined;
      if (!degenerate || attempt > 1000) throw;
    }
  }
}

}  // namespace

IdentityReport check_braid_relation(const CheckConfig& cfg) {
  Tally tally("braid_relation", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "braid_relation"), cfg.params);
  int type_mismatch = 0;
  for (int k = 0; k < cfg.samples; ++k) {
    const auto [lhs, rhs] = build_with_random_function(s, 3, [](const EFun& f) {
      return std::pair{compose_diamond({1, 2, 1}, f, false), compose_diamond({2, 1, 2}, f, false)};
    });
    if (lhs.type() != rhs.type()) ++type_mismatch;
    compare_functions(tally, s, lhs, rhs, 1);
  }
  if (type_mismatch) {
    tally.add(kInf);
    tally.note(std::to_string(type_mismatch) + " type mismatches");
  }
  return tally.finish(s.resamples());
}

IdentityReport check_quadratic_relation(const CheckConfig& cfg) {
  Tally tally("quadratic_relation", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "quadratic_relation"), cfg.params);
  for (int k = 0; k < cfg.samples; ++k) {
    const auto [lhs, rhs] = build_with_random_function(s, 2, [](const EFun& f) {
      const LinearForm mu = admissible_mu(f.type(), 1);
      EFun l = compose_diamond({1, 1}, f, false);
      EFun r = EFun::product({EFun::delta_leaf(h_(), mu), EFun::delta_leaf(h_(), -mu), f});
      return std::pair{l, r};
    });
    compare_functions(tally, s, lhs, rhs, 1);
  }
  return tally.finish(s.resamples());
}

IdentityReport check_reduced_quadratic(const CheckConfig& cfg) {
  Tally tally("reduced_quadratic", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "reduced_quadratic"), cfg.params);
  for (int k = 0; k < cfg.samples; ++k) {
    const auto [lhs, rhs] = build_with_random_function(s, 2, [](const EFun& f) {
      return std::pair{compose_diamond({1, 1}, f, true), f};
    });
    if (lhs.type() != rhs.type()) tally.add(kInf);
    compare_functions(tally, s, lhs, rhs, 1);
  }
  return tally.finish(s.resamples());
}

namespace {

std::pair<EFun, EFun> flip_sides(int m, int r, int k) {
  if (r < 2 || k < 1 || k >= r || 2 * r > m) {
    throw Error(ErrorKind::InvalidArgument, "flip needs 1 <= k < r and 2r <= m");
  }
  const EFun e = ell_min(m, r);
  const Permutation swap = Permutation::simple(k);
  EFun lhs = relabel_mu(swap, demazure_diamond(k, e, false));
  EFun rhs = demazure_diamond(m - r + k, e, false);
  return {lhs, rhs};
}

}  // namespace

IdentityReport check_flip(int m, int r, int k, const CheckConfig& cfg) {
  const std::string name = "flip_" + std::to_string(m) + "_" + std::to_string(r) + "_" + std::to_string(k);
  const auto [lhs, rhs] = flip_sides(m, r, k);
  Tally tally(name, cfg.tol);
  const QForm t = minimal_type(m, r);
  const LinearForm left_char = admissible_mu(t, k);
  const LinearForm right_char = admissible_mu(t, m - r + k);
  if (left_char != mu_(k) - mu_(k + 1) || right_char != mu_(k + 1) - mu_(k)) {
    tally.add(kInf);
    tally.note("unexpected characters " + left_char.to_string() + " / " + right_char.to_string());
  }
  if (lhs.type() != rhs.type()) {
    tally.add(kInf);
    tally.note("types differ");
  }
  Sampler s(derive_seed(cfg.seed, name), cfg.params);
  compare_functions(tally, s, lhs, rhs, cfg.samples);
  return tally.finish(s.resamples());
}

IdentityReport check_monstrous_flip(const CheckConfig& cfg) {
  Tally tally("monstrous_flip_consistency", cfg.tol);
  const auto [fl, fr] = flip_sides(4, 2, 1);
  Sampler s(derive_seed(cfg.seed, "monstrous_flip_consistency"), cfg.params);
  const ModularParams& p = cfg.params;
  const auto symbols = merged(fl, fr);
  for (int k = 0; k < cfg.samples; ++k) {
    const double res = s.with_point(symbols, [&](PointAssignment& pt) {
      pt.set(Symbol::u(), 0.0);
      const Complex x1 = pt.value(Symbol::x(1)), x2 = pt.value(Symbol::x(2));
      const Complex y1 = pt.value(Symbol::x(3)), y2 = pt.value(Symbol::x(4));
      const Complex m1 = pt.value(Symbol::mu(1)), m2 = pt.value(Symbol::mu(2)), h = pt.value(Symbol::h());
      const auto mono = monstrous_sides(x1, x2, y1, y2, m1, m2, h, p);
      auto t = [&](Complex a) { return vt(a, p); };
      // Common denominator clearing the deltas of both flip sides.
      const Complex d = t(h) * t(h) * t(m1) * t(m2) * t(m1 - m2) * t(x1 - x2) * t(y1 - y2) * t(x1 - y1) *
                        t(x1 - y2) * t(x2 - y1) * t(x2 - y2);
      const Complex l = evaluate(fl, pt);
      const Complex r = evaluate(fr, pt);
      return std::max(relative_residual(mono.lhs, -d * l), relative_residual(mono.rhs, -d * r));
    });
    tally.add(res);
  }
  return tally.finish(s.resamples());
}

// ---------------------------------------------------------------- lattice

IdentityReport check_word_independence(int m, int r, const CheckConfig& cfg) {
  const std::string name = "word_independence_" + std::to_string(m) + "_" + std::to_string(r);
  Tally tally(name, cfg.tol);
  Sampler s(derive_seed(cfg.seed, name), cfg.params);
  const OrbitLattice lattice(m, r);
  int multi = 0;
  for (const LinkPattern& p : lattice.representatives()) {
    const auto pres = all_minimal_presentations(p, lattice);
    if (pres.size() < 2) continue;
    ++multi;
    const auto nu0 = sorted(nu_list(pres.front()));
    const EFun base = ell_class(pres.front());
    for (std::size_t k = 1; k < pres.size(); ++k) {
      if (sorted(nu_list(pres[k])) != nu0) {
        tally.add(kInf);
        tally.note("character multisets differ for " + p.to_string());
      }
      const EFun other = ell_class(pres[k]);
      if (other.type() != base.type()) {
        tally.add(kInf);
        tally.note("types differ for " + p.to_string());
      }
      compare_functions(tally, s, base, other, cfg.samples);
    }
  }
  tally.note(std::to_string(lattice.size()) + " patterns, " + std::to_string(multi) +
             " with several minimal presentations");
  return tally.finish(s.resamples());
}

IdentityReport check_nu_independence(int max_m) {
  Tally tally("nu_independence_m_le_" + std::to_string(max_m), 0.5);
  int patterns = 0, presentations = 0;
  for (int m = 2; m <= max_m; ++m) {
    for (int r = 1; 2 * r <= m; ++r) {
      const OrbitLattice lattice(m, r);
      for (const LinkPattern& p : lattice.representatives()) {
        const auto pres = all_minimal_presentations(p, lattice);
        const auto nu0 = sorted(nu_list(pres.front()));
        for (const auto& q : pres) {
          tally.add(sorted(nu_list(q)) == nu0 ? 0.0 : 1.0);
          ++presentations;
        }
        ++patterns;
      }
    }
  }
  tally.note(std::to_string(patterns) + " patterns, " + std::to_string(presentations) + " minimal presentations");
  return tally.finish();
}

IdentityReport check_lattice_4_2(const CheckConfig& cfg) {
  Tally tally("lattice_4_2", cfg.tol);
  const OrbitLattice lattice(4, 2);
  if (lattice.size() != 12) {
    tally.add(kInf);
    tally.note("expected 12 patterns, found " + std::to_string(lattice.size()));
  }
  const LinearForm a = mu_(1), b = mu_(2), h = h_();
  const LinearForm ab = a - b, ba = b - a, aa = 2 * a - h, bb = 2 * b - h, prod = a + b - h;
  const std::vector<std::pair<std::string, std::vector<LinearForm>>> table = {
      {"4,2:1>4,2>3", {ab, aa, prod, prod, bb}},
      {"4,2:1>4,3>2", {ab, aa, prod, prod}},
      {"4,2:1>3,2>4", {aa, prod, prod, bb}},
      {"4,2:3>1,2>4", {ba, prod, bb}},
      {"4,2:1>3,4>2", {ab, aa, prod}},
      {"4,2:1>2,3>4", {aa, prod, bb}},
      {"4,2:4>1,2>3", {ba, bb}},
      {"4,2:2>1,3>4", {prod, bb}},
      {"4,2:1>2,4>3", {aa, prod}},
      {"4,2:4>1,3>2", {ba}},
      {"4,2:2>1,4>3", {prod}},
      {"4,2:3>1,4>2", {}},
  };
  Sampler s(derive_seed(cfg.seed, "lattice_4_2"), cfg.params);
  int matched = 0, doubly = 0;
  for (const auto& [text, expected] : table) {
    const LinkPattern p = LinkPattern::parse(text);
    const auto pres = all_minimal_presentations(p, lattice);
    bool ok = true;
    for (const auto& q : pres) ok = ok && sorted(nu_list(q)) == sorted(expected);
    if (static_cast<int>(lattice.distance(p)) != static_cast<int>(expected.size())) ok = false;
    if (ok) {
      ++matched;
    } else {
      tally.add(kInf);
      tally.note(text + " gives " + join_forms(nu_list(pres.front())));
    }
    std::set<std::vector<int>> words;
    for (const auto& q : pres) words.insert(q.word);
    if (words.size() > 1) {
      ++doubly;
      const EFun base = ell_class(pres.front());
      for (std::size_t k = 1; k < pres.size(); ++k) compare_functions(tally, s, base, ell_class(pres[k]), cfg.samples);
    }
  }
  tally.note(std::to_string(matched) + "/12 character multisets match; " + std::to_string(doubly) +
             " patterns with several minimal words");
  return tally.finish(s.resamples());
}

IdentityReport check_type_transport(int m, int r, int max_len) {
  const std::string name = "type_transport_" + std::to_string(m) + "_" + std::to_string(r);
  Tally tally(name, 0.5);
  const EFun start = ell_min(m, r);
  const QForm q0 = start.type();
  int skipped = 0;
  std::vector<int> word;
  std::function<void(const EFun&, const EFun&)> walk = [&](const EFun& reduced, const EFun& plain) {
    if (static_cast<int>(word.size()) == max_len) return;
    for (int i = 1; i < m; ++i) {
      word.insert(word.begin(), i);
      const Permutation w = Permutation::from_word(word, m);
      const EFun next_plain = demazure_diamond(i, plain, false);
      const bool plain_ok = next_plain.type() == unreduced_transport(w, q0, m);
      try {
        const EFun next = demazure_diamond(i, reduced, true);
        const bool ok = next.type() == reduced_transport(w, q0, m);
        tally.add(ok && plain_ok ? 0.0 : 1.0);
        walk(next, next_plain);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ReducedUndefined) throw;
        ++skipped;
        tally.add(plain_ok ? 0.0 : 1.0);
      }
      word.erase(word.begin());
    }
  };
  walk(start, start);
  tally.note(std::to_string(skipped) + " words leave the domain of the reduced operator (character -h)");
  return tally.finish();
}

IdentityReport check_move_table(int max_m) {
  Tally tally("move_table_m_le_" + std::to_string(max_m), 0.5);
  int moves = 0, increasing = 0;
  for (int m = 2; m <= max_m; ++m) {
    for (int r = 1; 2 * r <= m; ++r) {
      const OrbitLattice lattice(m, r);
      const auto labelings = all_permutations(r);
      for (const LinkPattern& rep : lattice.representatives()) {
        for (const Permutation& sigma : labelings) {
          const LinkPattern p = act_labels(sigma, rep);
          const QForm t = ell_class(p, lattice).type();
          const auto values = node_values(p);
          if (decompose_type(t, m).alpha != values) {
            tally.add(1.0);
            tally.note("x-coefficients differ from node values for " + p.to_string());
          }
          for (int i = 1; i < m; ++i) {
            const LinearForm mu = admissible_mu(t, i);
            LinearForm predicted = values[i - 1] - values[i];
            if (lattice.swappable(p, i)) {
              const Move mv = six_move_mu(p, i, lattice);
              predicted = mv.character;
              if (mv.increasing) ++increasing;
            }
            ++moves;
            tally.add(mu == predicted ? 0.0 : 1.0);
          }
        }
      }
    }
  }
  tally.note(std::to_string(moves) + " transpositions, " + std::to_string(increasing) + " increasing");
  return tally.finish();
}

IdentityReport check_vanishing(const CheckConfig& cfg) {
  Tally tally("vanishing", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "vanishing"), cfg.params);
  const EFun e = ell_min(8, 2);
  const EFun f1 = demazure_diamond(3, e, false);
  // w: 1->3, 2->6, 3->1, 4->2, 5->5, 6->8, 7->4, 8->7 moves the loose nodes 3, 4 to 1, 2.
  const Permutation w({3, 6, 1, 2, 5, 8, 4, 7});
  const LinkPattern moved = act_nodes(w, minimal_pattern(8, 2));
  const EFun cls = ell_class(moved);
  if (admissible_mu(cls.type(), 1) != -h_()) {
    tally.add(kInf);
    tally.note("permuted pattern does not have adjacent loose nodes at 1, 2");
  }
  const EFun f2 = demazure_diamond(1, cls, false);
  for (const EFun* f : {&f1, &f2}) {
    const auto symbols = symbols_of(*f);
    for (int k = 0; k < cfg.samples; ++k) {
      tally.add(s.with_point(symbols, [&](const PointAssignment& pt) { return vanishing_residual(evaluate_terms(*f, pt)); }));
    }
  }
  tally.note("permuted pattern " + moved.to_string());
  return tally.finish(s.resamples());
}

// ---------------------------------------------------------------- Schubert

IdentityReport check_fixed_point_restriction(int n, const CheckConfig& cfg) {
  const std::string name = "fixed_point_restriction_n" + std::to_string(n);
  Tally tally(name, cfg.tol);
  Sampler s(derive_seed(cfg.seed, name), cfg.params);
  const FlagContext ctx = FlagContext::matrices(n);
  const EFun x = reduced_class(minimal_pattern(2 * n, n), ctx);
  int zero = 0;
  for (const Permutation& sigma : all_permutations(n)) {
    const ThetaPolynomial poly = restrict_symbolic(x, sigma, ctx);
    const EFun res = poly.to_efun();
    if (sigma.is_identity()) {
      const auto& mono = poly.monomials();
      const bool exact_one = mono.size() == 1 && mono[0].exponents.empty() &&
                             mono[0].coefficient.re == Rational(1) && mono[0].coefficient.im == Rational(0);
      if (!exact_one) {
        tally.add(kInf);
        tally.note("identity restriction is not the constant 1");
      }
      compare_functions(tally, s, res, EFun::one(), cfg.samples);
    } else {
      const bool exact_zero = res.kind() == EFun::Kind::Sum && res.children().empty();
      if (exact_zero) {
        ++zero;
        tally.add(0.0);
      } else {
        compare_functions(tally, s, res, EFun::zero(res.type()), cfg.samples);
      }
    }
  }
  tally.note(std::to_string(zero) + " of " + std::to_string(all_permutations(n).size() - 1) +
             " non-identity restrictions vanish symbolically");
  return tally.finish(s.resamples());
}

IdentityReport check_minimal_product(int n, const CheckConfig& cfg) {
  const std::string name = "minimal_product_n" + std::to_string(n);
  Tally tally(name, cfg.tol);
  Sampler s(derive_seed(cfg.seed, name), cfg.params);
  const FlagContext ctx = FlagContext::matrices(n);
  const EFun x = reduced_class(minimal_pattern(2 * n, n), ctx);
  const auto symbols = symbols_of(x);
  const ModularParams& p = cfg.params;
  for (int k = 0; k < cfg.samples; ++k) {
    tally.add(s.with_point(symbols, [&](const PointAssignment& pt) {
      auto X = [&](int i) { return pt.value(Symbol::x(i)); };
      auto Y = [&](int j) { return pt.value(Symbol::x(n + j)); };
      const Complex h = pt.value(Symbol::h());
      Complex expected = 1.0;
      for (int i = 1; i <= n; ++i) {
        expected *= vt(X(i) - Y(i) + pt.value(Symbol::mu(i)), p) / vt(pt.value(Symbol::mu(i)), p);
        for (int j = 1; j <= n; ++j) {
          if (i > j) expected *= vt(X(i) - Y(j), p) / vt(Y(i) - Y(j), p);
          if (i < j) expected *= vt(X(i) - Y(j) + h, p) / vt(Y(i) - Y(j) + h, p);
        }
      }
      return relative_residual(evaluate(x, pt), expected);
    }));
  }
  return tally.finish(s.resamples());
}

IdentityReport check_schubert_recursion(int n, const CheckConfig& cfg) {
  const std::string name = "schubert_recursion_n" + std::to_string(n);
  Tally tally(name, cfg.tol);
  Sampler s(derive_seed(cfg.seed, name), cfg.params);
  const FlagContext ctx = FlagContext::matrices(n);
  int steps = 0;
  for (const Permutation& w : all_permutations(n)) {
    const Permutation winv = w.inverse();
    const EFun xw = reduced_class(permutation_pattern(w, n), ctx);
    for (int i = 1; i < n; ++i) {
      const Permutation sw = Permutation::simple(i) * w;
      if (sw.length() <= w.length()) continue;
      ++steps;
      if (admissible_mu(xw.type(), i) != mu_(winv(i)) - mu_(winv(i + 1))) {
        tally.add(kInf);
        tally.note("unexpected character for w = " + w.to_string() + ", i = " + std::to_string(i));
      }
      const EFun lhs = reduced_class(permutation_pattern(sw.resized(n), n), ctx);
      compare_functions(tally, s, lhs, demazure_diamond(i, xw, false), std::max(1, cfg.samples / 4));
    }
  }
  tally.note(std::to_string(steps) + " length-increasing steps");
  return tally.finish(s.resamples());
}

IdentityReport check_r_matrix(int n, const CheckConfig& cfg) {
  const std::string name = "r_matrix_n" + std::to_string(n);
  Tally tally(name, cfg.tol);
  Sampler s(derive_seed(cfg.seed, name), cfg.params);
  const FlagContext ctx = FlagContext::matrices(n, true);
  for (const Permutation& w : all_permutations(n)) {
    const Permutation winv = w.inverse();
    const EFun xw = reduced_class(permutation_pattern(w, n), ctx);
    for (int i = 1; i < n; ++i) {
      const Permutation sw = Permutation::simple(i) * w;
      if (sw.length() <= w.length()) continue;
      const EFun rhs = demazure(i, mu_(winv(i + 1)) - mu_(winv(i)), xw);
      const EFun lhs = reduced_class(permutation_pattern(sw.resized(n), n), ctx);
      compare_functions(tally, s, lhs, rhs, std::max(1, cfg.samples / 4));
    }
  }
  return tally.finish(s.resamples());
}

IdentityReport check_bott_samelson(int n, const CheckConfig& cfg) {
  const std::string name = "bott_samelson_n" + std::to_string(n);
  Tally tally(name, cfg.tol);
  Sampler s(derive_seed(cfg.seed, name), cfg.params);
  const FlagContext ctx = FlagContext::matrices(n, true);
  for (const Permutation& w : all_permutations(n)) {
    const EFun xw = reduced_class(permutation_pattern(w, n), ctx);
    for (int i = 1; i < n; ++i) {
      const Permutation ws = w * Permutation::simple(i);
      if (ws.length() <= w.length()) continue;
      const EFun swapped = relabel_mu(Permutation::simple(i), xw);
      const LinearForm dy = ctx.y(i + 1) - ctx.y(i);
      const EFun rhs = EFun::sum({
          EFun::product({EFun::delta_leaf(dy, mu_(i + 1) - mu_(i)), swapped}),
          EFun::product({EFun::delta_leaf(dy, h_()), EFun::x_permuted(Permutation::simple(n + i), swapped)}),
      });
      const EFun lhs = reduced_class(permutation_pattern(ws.resized(n), n), ctx);
      compare_functions(tally, s, lhs, rhs, std::max(1, cfg.samples / 4));
    }
  }
  return tally.finish(s.resamples());
}

IdentityReport check_triangularity(int n, const CheckConfig& cfg) {
  const std::string name = "triangularity_n" + std::to_string(n);
  Tally tally(name, cfg.tol);
  Sampler s(derive_seed(cfg.seed, name), cfg.params);
  const FlagContext ctx = FlagContext::matrices(n);
  int patterns = 0, vanish = 0;
  for (const Permutation& w : all_permutations(n)) {
    for (const Permutation& labels : all_permutations(n)) {
      const LinkPattern p = act_labels(labels, permutation_pattern(w, n));
      const EFun x = reduced_class(p, ctx);
      ++patterns;
      for (const Permutation& sigma : all_permutations(n)) {
        const ThetaPolynomial res = restrict_symbolic(x, sigma, ctx);
        const bool below = bruhat_leq(sigma, w, n);
        if (!below) {
          tally.add(res.is_zero() ? 0.0 : kInf);
          if (res.is_zero()) ++vanish;
        } else if (sigma == w && res.is_zero()) {
          tally.add(kInf);
          tally.note("diagonal restriction vanishes for " + p.to_string());
        }
      }
    }
  }
  tally.note(std::to_string(patterns) + " patterns, " + std::to_string(vanish) + " restrictions outside the Bruhat interval, all zero");
  return tally.finish(s.resamples());
}

IdentityReport check_weight_example(const CheckConfig& cfg) {
  Tally tally("weight_function_example", cfg.tol);
  Sampler s(derive_seed(cfg.seed, "weight_function_example"), cfg.params);
  const LinkPattern p = minimal_pattern(5, 2);
  const ModularParams& prm = cfg.params;
  auto displayed = [&](const PointAssignment& pt, Complex m1, Complex m2) {
    auto z = [&](int i) { return pt.value(Symbol::x(i)); };
    auto g = [&](int j) { return pt.value(Symbol::x(3 + j)); };
    const Complex h = pt.value(Symbol::h());
    return vt(z(2) - g(1), prm) * vt(z(3) - g(1), prm) * vt(z(3) - g(2), prm) * vt(z(1) - g(2) + h, prm) /
           vt(g(1) - g(2) + h, prm) * vt(z(1) - g(1) + m1, prm) / vt(m1, prm) * vt(z(2) - g(2) + m2, prm) /
           vt(m2, prm);
  };
  for (bool rtv : {false, true}) {
    const EFun wf = weight_function(p, 3, rtv);
    auto symbols = symbols_of(wf);
    symbols.insert(Symbol::mu(1));
    symbols.insert(Symbol::mu(2));
    for (int k = 0; k < cfg.samples; ++k) {
      tally.add(s.with_point(symbols, [&](const PointAssignment& pt) {
        Complex m1 = pt.value(Symbol::mu(1)), m2 = pt.value(Symbol::mu(2));
        if (rtv) {
          const Complex shift = pt.value(Symbol::h()) + pt.value(Symbol::mu(3));
          m1 = shift - m1;
          m2 = shift - m2;
        }
        return relative_residual(evaluate(wf, pt), displayed(pt, m1, m2));
      }));
    }
  }
  return tally.finish(s.resamples());
}

namespace {

std::vector<LinkPattern> weight_patterns(int n) {
  std::vector<LinkPattern> out;
  for (const Permutation& w : all_permutations(n)) {
    std::vector<Arc> arcs;
    for (int j = 1; j < n; ++j) arcs.push_back({n + j, w(j)});
    const LinkPattern p(2 * n - 1, arcs);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace

IdentityReport check_weight_recursion(int n, const CheckConfig& cfg) {
  const std::string name = "weight_recursion_n" + std::to_string(n);
  Tally tally(name, cfg.tol);
  Sampler s(derive_seed(cfg.seed, name), cfg.params);
  const OrbitLattice lattice(2 * n - 1, n - 1);
  int steps = 0;
  for (const LinkPattern& p : weight_patterns(n)) {
    const EFun wp = weight_function(p, n, false);
    for (int i = 1; i < n; ++i) {
      const LinkPattern q = act_nodes(Permutation::simple(i), p);
      if (lattice.distance(q) <= lattice.distance(p)) continue;
      ++steps;
      compare_functions(tally, s, weight_function(q, n, false), demazure_diamond(i, wp, false),
                        std::max(1, cfg.samples / 4));
    }
  }
  tally.note(std::to_string(steps) + " length-increasing steps");
  return tally.finish(s.resamples());
}

IdentityReport check_weight_restriction(int n, const CheckConfig& cfg) {
  const std::string name = "weight_restriction_n" + std::to_string(n);
  Tally tally(name, cfg.tol);
  const FlagContext ctx = FlagContext::weights(n);
  const EFun wf = weight_function(minimal_pattern(2 * n - 1, n - 1), n, false);
  for (const Permutation& sigma : all_permutations(n)) {
    const EFun res = restrict_fixed_point(wf, sigma, ctx);
    const bool zero = res.kind() == EFun::Kind::Sum && res.children().empty();
    tally.add(zero == !sigma.is_identity() ? 0.0 : kInf);
  }
  return tally.finish();
}

IdentityReport check_multiplicity_example() {
  Tally tally("multiplicity_example", 0.5);
  const LinkPattern p = LinkPattern::parse("3,1:1>2");
  const Presentation pres = minimal_presentation(p);
  if (pres.word != std::vector<int>{1, 2}) {
    tally.add(1.0);
    tally.note("unexpected minimal word");
  }
  for (const Rational lambda : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(-3, 7)}) {
    const auto alpha = multiplicities(pres, {lambda});
    const bool ok = alpha == std::vector<Rational>{2 * lambda + 1, lambda + 1};
    tally.add(ok ? 0.0 : 1.0);
  }
  tally.note("pattern " + p.to_string());
  return tally.finish();
}

// ---------------------------------------------------------------- registry

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"theta", "quasi-periodicity, delta symmetry and the q^0 limit",
       [](const CheckConfig& c) {
         CheckConfig limit = c;
         limit.params = ModularParams(Complex(0.0, 6.0), c.params.n_terms());
         return std::vector<IdentityReport>{check_quasi_periodicity(c), check_delta_symmetry(c), check_q_limit(limit)};
       }},
      {"fourterm", "four-term delta identity",
       [](const CheckConfig& c) { return std::vector<IdentityReport>{check_fourterm(c), check_fourterm(c, 1e-3)}; }},
      {"braid_coefficients", "coefficient identities behind the braid relation",
       [](const CheckConfig& c) { return std::vector<IdentityReport>{check_braid_coefficients(c)}; }},
      {"braid", "twisted braid relation of admissible operators",
       [](const CheckConfig& c) { return std::vector<IdentityReport>{check_braid_relation(c)}; }},
      {"quadratic", "quadratic relations of plain and reduced operators",
       [](const CheckConfig& c) {
         return std::vector<IdentityReport>{check_quadratic_relation(c), check_reduced_quadratic(c)};
       }},
      {"monstrous", "twelve-theta relation and its match with the flip sides",
       [](const CheckConfig& c) { return std::vector<IdentityReport>{check_monstrous(c), check_monstrous_flip(c)}; }},
      {"flip", "flip relation on minimal classes",
       [](const CheckConfig& c) {
         CheckConfig f = c;
         f.samples = std::max(1, c.samples / 2);
         return std::vector<IdentityReport>{check_flip(4, 2, 1, f), check_flip(6, 2, 1, f), check_flip(6, 3, 1, f),
                                            check_flip(6, 3, 2, f)};
       }},
      {"independence", "classes and characters do not depend on the minimal presentation",
       [](const CheckConfig& c) {
         CheckConfig f = c;
         f.samples = std::max(1, c.samples / 2);
         return std::vector<IdentityReport>{check_word_independence(2, 1, f), check_word_independence(3, 1, f),
                                            check_word_independence(4, 1, f), check_word_independence(4, 2, f),
                                            check_nu_independence(6)};
       }},
      {"lattice", "twelve-pattern lattice for m = 4, r = 2",
       [](const CheckConfig& c) {
         CheckConfig f = c;
         f.samples = std::max(1, c.samples / 2);
         return std::vector<IdentityReport>{check_lattice_4_2(f)};
       }},
      {"type_transport", "exact type law and node-value characters",
       [](const CheckConfig&) {
         return std::vector<IdentityReport>{check_type_transport(4, 2, 5), check_type_transport(6, 2, 5),
                                            check_move_table(6)};
       }},
      {"vanishing", "operators at adjacent loose nodes give zero",
       [](const CheckConfig& c) {
         CheckConfig f = c;
         f.samples = std::max(1, c.samples / 2);
         return std::vector<IdentityReport>{check_vanishing(f)};
       }},
      {"restriction", "fixed-point restrictions of localized reduced classes",
       [](const CheckConfig& c) {
         CheckConfig f = c;
         f.samples = std::max(1, c.samples / 2);
         return std::vector<IdentityReport>{check_fixed_point_restriction(2, f), check_fixed_point_restriction(3, f),
                                            check_minimal_product(2, f),         check_minimal_product(3, f),
                                            check_triangularity(2, f),           check_triangularity(3, f)};
       }},
      {"schubert_recursion", "x-side, R-matrix and Bott-Samelson recursions",
       [](const CheckConfig& c) {
         return std::vector<IdentityReport>{check_schubert_recursion(2, c), check_schubert_recursion(3, c),
                                            check_r_matrix(2, c),           check_r_matrix(3, c),
                                            check_bott_samelson(2, c),      check_bott_samelson(3, c)};
       }},
      {"weights", "weight-function example, recursion and restrictions",
       [](const CheckConfig& c) {
         CheckConfig f = c;
         f.samples = std::max(1, c.samples / 2);
         return std::vector<IdentityReport>{check_weight_example(f), check_weight_recursion(3, c),
                                            check_weight_restriction(3, c)};
       }},
      {"multiplicities", "boundary multiplicities of the rank-one example",
       [](const CheckConfig&) { return std::vector<IdentityReport>{check_multiplicity_example()}; }},
  };
  return all;
}

std::vector<IdentityReport> run_suite(const std::string& name, const CheckConfig& cfg) {
  std::vector<IdentityReport> out;
  bool found = false;
  for (const Suite& s : suites()) {
    if (name == "all" || name == s.name) {
      found = true;
      auto part = s.run(cfg);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  return out;
}

}  // namespace ellclass
