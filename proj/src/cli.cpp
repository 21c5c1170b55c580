#include "ellclass/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ellclass/errors.hpp"
#include "ellclass/schubert.hpp"

namespace ellclass {

void RunConfig::validate() const {
  if (!(tau_im >= 0.3)) throw Error(ErrorKind::InvalidArgument, "--tau-im must be at least 0.3");
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "--samples must be at least 1");
  if (points < 0) throw Error(ErrorKind::InvalidArgument, "--points must be non-negative");
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "--tol must be positive");
}

ModularParams RunConfig::params() const { return ModularParams(Complex(0.0, tau_im), n_terms); }

CheckConfig RunConfig::check_config() const {
  CheckConfig c;
  c.params = params();
  c.samples = samples;
  c.tol = tol;
  c.seed = seed;
  return c;
}

Permutation parse_sigma(const std::string& text) {
  std::vector<int> images;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        images.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "bad permutation entry '" + part + "'");
      }
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw Error(ErrorKind::InvalidArgument, "bad permutation '" + text + "'");
      images.push_back(c - '0');
    }
  }
  return Permutation(std::move(images));
}

namespace {

Json forms_json(const std::vector<LinearForm>& forms) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(f.to_string());
  return out;
}

Json sample_values(const EFun& f, const RunConfig& cfg, const std::string& stream) {
  Sampler s(derive_seed(cfg.seed, stream), cfg.params());
  const auto symbols = symbols_of(f);
  Json out = Json::array();
  for (int k = 0; k < cfg.points; ++k) {
    out.push_back(s.with_point(symbols, [&](const PointAssignment& pt) {
      const Complex v = evaluate(f, pt);
      return Json{{"point", to_json(pt)}, {"value", to_json(v)}};
    }));
  }
  return out;
}

bool is_weight_shape(const LinkPattern& p) {
  const int n = p.r() + 1;
  if (p.m() != 2 * n - 1) return false;
  for (const Arc& a : p.arcs()) {
    if (a.source <= n) return false;
  }
  return true;
}

}  // namespace

Json cmd_compute(const std::string& pattern, const RunConfig& cfg) {
  cfg.validate();
  const LinkPattern p = LinkPattern::parse(pattern);
  const Presentation pres = minimal_presentation(p);
  const EFun cls = ell_class(pres);
  Json out;
  out["pattern"] = p.to_string();
  out["minimal_word"] = pres.word;
  out["sigma"] = to_json(pres.sigma);
  out["nu_list"] = forms_json(nu_list(pres));
  out["type"] = to_json(cls.type());
  out["node_count"] = node_count(cls);
  out["expression"] = to_json(cls);
  out["sample_values"] = sample_values(cls, cfg, "compute:" + p.to_string());
  return out;
}

Json cmd_verify(const std::string& suite, const RunConfig& cfg) {
  cfg.validate();
  Json out = Json::array();
  for (const IdentityReport& r : run_suite(suite, cfg.check_config())) out.push_back(to_json(r));
  return out;
}

bool reports_passed(const Json& reports) {
  for (const Json& r : reports) {
    if (!r.value("passed", false)) return false;
  }
  return true;
}

Json cmd_orbits(int m, int r, const RunConfig& cfg) {
  cfg.validate();
  if (m > 6) throw Error(ErrorKind::InvalidArgument, "orbit dumps are limited to m <= 6");
  const OrbitLattice lattice(m, r);
  Json patterns = Json::array();
  for (const LinkPattern& p : lattice.representatives()) {
    const Presentation pres = minimal_presentation(p, lattice);
    patterns.push_back(Json{{"pattern", p.to_string()},
                            {"distance", lattice.distance(p)},
                            {"minimal_word", pres.word},
                            {"nu_list", forms_json(nu_list(pres))}});
  }
  return Json{{"m", m}, {"r", r}, {"size", lattice.size()}, {"patterns", std::move(patterns)}};
}

Json cmd_restrict(const std::string& pattern, const std::string& sigma_text, const RunConfig& cfg) {
  cfg.validate();
  const LinkPattern p = LinkPattern::parse(pattern);
  const Permutation sigma = parse_sigma(sigma_text);
  EFun f = EFun::one();
  FlagContext ctx;
  std::string setting;
  if (is_weight_shape(p)) {
    ctx = FlagContext::weights(p.r() + 1);
    f = weight_function(p, ctx.n, false);
    setting = "weight_function";
  } else {
    ctx = FlagContext::matrices(p.m() / 2);
    f = reduced_class(p, ctx);
    setting = "reduced_class";
  }
  if (sigma.size() > ctx.n) throw Error(ErrorKind::InvalidArgument, "sigma is larger than S_" + std::to_string(ctx.n));
  const ThetaPolynomial res = restrict_symbolic(f, sigma, ctx);
  const auto& mono = res.monomials();
  const bool one = mono.size() == 1 && mono[0].exponents.empty() && mono[0].coefficient.re == Rational(1) &&
                   mono[0].coefficient.im == Rational(0);
  Json out;
  out["pattern"] = p.to_string();
  out["sigma"] = to_json(sigma.resized(ctx.n));
  out["setting"] = setting;
  out["is_zero"] = res.is_zero();
  out["is_one"] = one;
  out["restriction"] = to_json(res);
  out["sample_values"] = sample_values(res.to_efun(), cfg, "restrict:" + p.to_string());
  return out;
}

Json cmd_weights(const std::string& pattern, bool rtv, const RunConfig& cfg) {
  cfg.validate();
  const LinkPattern p = LinkPattern::parse(pattern);
  const int n = p.r() + 1;
  const EFun w = weight_function(p, n, rtv);
  Json out;
  out["pattern"] = p.to_string();
  out["n"] = n;
  out["rtv_substitution"] = rtv;
  out["type"] = to_json(w.type());
  out["node_count"] = node_count(w);
  out["expression"] = to_json(w);
  out["sample_values"] = sample_values(w, cfg, "weights:" + p.to_string());
  return out;
}

Json cmd_multiplicities(const std::string& pattern, const std::vector<std::string>& lambda_text,
                        const RunConfig& cfg) {
  cfg.validate();
  const LinkPattern p = LinkPattern::parse(pattern);
  std::vector<Rational> lambda;
  for (const auto& t : lambda_text) lambda.push_back(parse_rational(t));
  if (static_cast<int>(lambda.size()) < p.r()) {
    throw Error(ErrorKind::InvalidArgument, "need one lambda per arc (" + std::to_string(p.r()) + ")");
  }
  const Presentation pres = minimal_presentation(p);
  Json alpha = Json::array();
  for (const Rational& a : multiplicities(pres, lambda)) alpha.push_back(to_string(a));
  Json lam = Json::array();
  for (const Rational& l : lambda) lam.push_back(to_string(l));
  Json out;
  out["pattern"] = p.to_string();
  out["minimal_word"] = pres.word;
  out["nu_list"] = forms_json(raw_nu_list(pres));
  out["lambda"] = std::move(lam);
  out["alpha"] = std::move(alpha);
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Elliptic classes of 2-nilpotent orbits: computations and identity checks"};
  app.require_subcommand(1);
  app.add_option("--tau-im", cfg.tau_im, "imaginary part of tau (tau = i * value)")->capture_default_str();
  app.add_option("--q-terms", cfg.n_terms, "number of q-product factors")->capture_default_str();
  app.add_option("--tol", cfg.tol, "relative tolerance for verify")->capture_default_str();
  app.add_option("--samples", cfg.samples, "random points per check")->capture_default_str();
  app.add_option("--seed", cfg.seed, "base random seed")->capture_default_str();
  app.add_option("--points", cfg.points, "sample values printed by compute, restrict and weights")
      ->capture_default_str();
  app.add_option("--out", cfg.output, "write JSON here instead of stdout");

  std::string pattern, sigma, suite;
  int m = 0, r = 0;
  bool rtv = false;
  std::vector<std::string> lambda;

  auto* compute = app.add_subcommand("compute", "class, characters and type of a labelled pattern");
  compute->add_option("pattern", pattern, "m,r:a1>b1,...")->required();
  auto* verify = app.add_subcommand("verify", "run an identity suite, or all of them");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  auto* orbits = app.add_subcommand("orbits", "BFS orbit lattice for m <= 6");
  orbits->add_option("m", m)->required();
  orbits->add_option("r", r)->required();
  auto* restrict = app.add_subcommand("restrict", "fixed-point restriction of a reduced class or weight function");
  restrict->add_option("pattern", pattern)->required();
  restrict->add_option("sigma", sigma, "one-line permutation, e.g. 213 or 2,1,3")->required();
  auto* weights = app.add_subcommand("weights", "elliptic weight function of a pattern of size 2n-1");
  weights->add_option("pattern", pattern)->required();
  weights->add_flag("--rtv", rtv, "apply mu_i -> h + mu_n - mu_i");
  auto* mult = app.add_subcommand("multiplicities", "boundary multiplicities along the minimal word");
  mult->add_option("pattern", pattern)->required();
  mult->add_option("lambda", lambda, "one rational per arc")->required();

  Json result;
  int status = 0;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      Json err{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}};
      out << err.dump(2) << "\n";
      return 2;
    }
    if (compute->parsed()) result = cmd_compute(pattern, cfg);
    if (verify->parsed()) {
      result = cmd_verify(suite, cfg);
      if (!reports_passed(result)) status = 1;
    }
    if (orbits->parsed()) result = cmd_orbits(m, r, cfg);
    if (restrict->parsed()) result = cmd_restrict(pattern, sigma, cfg);
    if (weights->parsed()) result = cmd_weights(pattern, rtv, cfg);
    if (mult->parsed()) result = cmd_multiplicities(pattern, lambda, cfg);
  } catch (const std::exception& e) {
    result = error_json(e);
    status = 2;
  }

  const std::string text = result.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      out << Json{{"error", {{"kind", "InvalidArgument"}, {"message", "cannot open " + cfg.output}}}}.dump(2) << "\n";
      return 2;
    }
    file << text;
  }
  return status;
}

}  // namespace ellclass
