#include "ellclass/efun.hpp"

#include <functional>
#include <numbers>
#include <unordered_map>

#include "ellclass/errors.hpp"
#include "ellclass/typecalc.hpp"

namespace ellclass {

// ---------------------------------------------------------------- PointAssignment

Complex PointAssignment::value(Symbol s) const {
  auto it = values_.find(s);
  if (it == values_.end()) throw Error(ErrorKind::InvalidArgument, "point assigns no value to " + s.name());
  return it->second;
}

Complex PointAssignment::value(const LinearForm& f) const {
  return f.evaluate<Complex>([this](Symbol s) { return value(s); });
}

PointAssignment PointAssignment::permuted_x(const Permutation& w) const {
  PointAssignment out(params_);
  for (const auto& [s, v] : values_) {
    if (!s.is_x()) out.values_.emplace(s, v);
  }
  for (const auto& [s, v] : values_) {
    if (!s.is_x()) continue;
    // x_j of the new point reads x_{w(j)}; indices outside w are fixed.
    const Symbol src = Symbol::x(w(s.index));
    auto it = values_.find(src);
    if (it != values_.end()) out.values_[s] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------- construction

namespace {

EFun::Node leaf(EFun::Kind kind, LinearForm a, LinearForm b, QForm type) {
  EFun::Node n{kind, std::move(type), {}, std::move(a), std::move(b), {}, {}};
  return n;
}

}  // namespace

EFun EFun::one() {
  return EFun(std::make_shared<const Node>(leaf(Kind::Product, {}, {}, {})));
}

EFun EFun::zero(QForm type) {
  return EFun(std::make_shared<const Node>(leaf(Kind::Sum, {}, {}, std::move(type))));
}

EFun EFun::delta_leaf(LinearForm a, LinearForm b) {
  QForm t = qf_of_delta(a, b);
  return EFun(std::make_shared<const Node>(leaf(Kind::Delta, std::move(a), std::move(b), std::move(t))));
}

EFun EFun::theta_leaf(LinearForm a) {
  QForm t = qf_of_theta(a);
  return EFun(std::make_shared<const Node>(leaf(Kind::Theta, std::move(a), {}, std::move(t))));
}

EFun EFun::inv_theta_leaf(LinearForm a) {
  QForm t = -qf_of_theta(a);
  return EFun(std::make_shared<const Node>(leaf(Kind::InvTheta, std::move(a), {}, std::move(t))));
}

EFun EFun::sum(std::vector<EFun> terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "sum of no terms has no type; use EFun::zero");
  const QForm& t = terms.front().type();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k].type() != t) {
      throw Error(ErrorKind::ImpurityError, "sum of functions of different types: " + t.to_string() + " vs " +
                                                terms[k].type().to_string());
    }
  }
  Node n = leaf(Kind::Sum, {}, {}, t);
  n.children = std::move(terms);
  return EFun(std::make_shared<const Node>(std::move(n)));
}

EFun EFun::product(std::vector<EFun> factors) {
  QForm t;
  for (const EFun& f : factors) t += f.type();
  Node n = leaf(Kind::Product, {}, {}, std::move(t));
  n.children = std::move(factors);
  return EFun(std::make_shared<const Node>(std::move(n)));
}

EFun EFun::scale(GaussRational c, EFun f) {
  Node n = leaf(Kind::Scale, {}, {}, f.type());
  n.constant = c;
  n.children = {std::move(f)};
  return EFun(std::make_shared<const Node>(std::move(n)));
}

EFun EFun::x_permuted(const Permutation& w, EFun f) {
  if (f.kind() == Kind::XPermuted) {
    const Permutation composed = w * f.permutation();
    return x_permuted(composed, f.children().front());
  }
  Node n = leaf(Kind::XPermuted, {}, {}, f.type().permute_x(w));
  n.perm = w;
  n.children = {std::move(f)};
  return EFun(std::make_shared<const Node>(std::move(n)));
}

// ---------------------------------------------------------------- evaluation

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void throw_pole(const std::vector<int>& path, const std::string& what) {
  std::string p = "root";
  for (int k : path) p += "/" + std::to_string(k);
  p += ":" + what;
  throw PoleError(p, "pole proximity at " + p);
}

Complex guarded_theta(const LinearForm& a, const PointAssignment& pt, const std::vector<int>& path,
                      const char* what) {
  const Complex x = pt.value(a);
  const Complex t = theta(x, pt.params());
  if (!(std::abs(t) > pt.params().pole_threshold())) {
    throw_pole(path, std::string(what) + "(" + a.to_string() + ")");
  }
  return t;
}

// With absolute set, sums add the magnitudes of their terms.
Complex eval(const EFun& f, const PointAssignment& pt, std::vector<int>& path, bool absolute = false) {
  const ModularParams& p = pt.params();
  const auto out = [absolute](Complex v) { return absolute ? Complex(std::abs(v)) : v; };
  switch (f.kind()) {
    case EFun::Kind::Delta: {
      const Complex ta = guarded_theta(f.arg_a(), pt, path, "delta.a");
      const Complex tb = guarded_theta(f.arg_b(), pt, path, "delta.b");
      const Complex tab = theta(pt.value(f.arg_a() + f.arg_b()), p);
      return out(p.theta_prime_zero() * tab / (ta * tb) / Complex(0.0, kTwoPi));
    }
    case EFun::Kind::Theta:
      return out(vartheta(pt.value(f.arg_a()), p));
    case EFun::Kind::InvTheta: {
      const Complex t = guarded_theta(f.arg_a(), pt, path, "inv_theta");
      return out(p.theta_prime_zero() / (Complex(0.0, kTwoPi) * t));
    }
    case EFun::Kind::Scale: {
      const GaussRational& c = f.constant();
      const Complex cz(boost::rational_cast<double>(c.re), boost::rational_cast<double>(c.im));
      path.push_back(0);
      const Complex v = out(cz) * eval(f.children().front(), pt, path, absolute);
      path.pop_back();
      return v;
    }
    case EFun::Kind::XPermuted: {
      const PointAssignment moved = pt.permuted_x(f.permutation());
      path.push_back(0);
      const Complex v = eval(f.children().front(), moved, path, absolute);
      path.pop_back();
      return v;
    }
    case EFun::Kind::Sum: {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < f.children().size(); ++k) {
        path.push_back(static_cast<int>(k));
        acc += eval(f.children()[k], pt, path, absolute);
        path.pop_back();
      }
      return acc;
    }
    case EFun::Kind::Product: {
      Complex acc = 1.0;
      for (std::size_t k = 0; k < f.children().size(); ++k) {
        path.push_back(static_cast<int>(k));
        acc *= eval(f.children()[k], pt, path, absolute);
        path.pop_back();
      }
      return acc;
    }
  }
  return 0.0;
}

}  // namespace

Complex evaluate(const EFun& f, const PointAssignment& pt) {
  std::vector<int> path;
  return eval(f, pt, path);
}

double evaluate_magnitude(const EFun& f, const PointAssignment& pt) {
  std::vector<int> path;
  return eval(f, pt, path, true).real();
}

std::vector<Complex> evaluate_terms(const EFun& f, const PointAssignment& pt) {
  if (f.kind() != EFun::Kind::Sum) return {evaluate(f, pt)};
  std::vector<Complex> out;
  std::vector<int> path;
  for (std::size_t k = 0; k < f.children().size(); ++k) {
    path.assign(1, static_cast<int>(k));
    out.push_back(eval(f.children()[k], pt, path));
  }
  return out;
}

// ---------------------------------------------------------------- traversal

namespace {

template <typename Visit>
void visit_dag(const EFun& f, Visit&& visit) {
  std::set<const EFun::Node*> seen;
  std::vector<EFun> stack{f};
  while (!stack.empty()) {
    EFun cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur.node()).second) continue;
    visit(cur);
    for (const EFun& c : cur.children()) stack.push_back(c);
  }
}

}  // namespace

std::set<Symbol> symbols_of(const EFun& f) {
  std::set<Symbol> out;
  int max_perm = 0;
  visit_dag(f, [&](const EFun& g) {
    for (const auto& [s, c] : g.arg_a().terms()) out.insert(s);
    for (const auto& [s, c] : g.arg_b().terms()) out.insert(s);
    if (g.kind() == EFun::Kind::XPermuted) max_perm = std::max(max_perm, g.permutation().size());
  });
  int max_x = max_perm;
  for (Symbol s : out) {
    if (s.is_x()) max_x = std::max(max_x, s.index);
  }
  // A permutation can route any x index up to its size into a leaf.
  for (int j = 1; j <= max_x; ++j) out.insert(Symbol::x(j));
  return out;
}

std::size_t node_count(const EFun& f) {
  std::size_t n = 0;
  visit_dag(f, [&](const EFun&) { ++n; });
  return n;
}

// ---------------------------------------------------------------- rewriting

namespace {

EFun rebuild(const EFun& f, const std::vector<EFun>& children) {
  switch (f.kind()) {
    case EFun::Kind::Sum: return children.empty() ? f : EFun::sum(children);
    case EFun::Kind::Product: return EFun::product(children);
    case EFun::Kind::Scale: return EFun::scale(f.constant(), children.front());
    case EFun::Kind::XPermuted: return EFun::x_permuted(f.permutation(), children.front());
    default: return f;
  }
}

EFun substitute_leaves(const EFun& f, const LinearSubstitution& s,
                       std::unordered_map<const EFun::Node*, EFun>& memo) {
  if (auto it = memo.find(f.node()); it != memo.end()) return it->second;
  EFun out = f;
  switch (f.kind()) {
    case EFun::Kind::Delta: out = EFun::delta_leaf(s.apply(f.arg_a()), s.apply(f.arg_b())); break;
    case EFun::Kind::Theta: out = EFun::theta_leaf(s.apply(f.arg_a())); break;
    case EFun::Kind::InvTheta: out = EFun::inv_theta_leaf(s.apply(f.arg_a())); break;
    default: {
      if (f.kind() == EFun::Kind::Sum && f.children().empty()) {
        out = EFun::zero(s.apply(f.type()));
        break;
      }
      std::vector<EFun> kids;
      for (const EFun& c : f.children()) kids.push_back(substitute_leaves(c, s, memo));
      out = rebuild(f, kids);
    }
  }
  memo.emplace(f.node(), out);
  return out;
}

struct PermKey {
  const EFun::Node* node;
  std::vector<int> images;
  bool operator<(const PermKey& o) const {
    return node != o.node ? node < o.node : images < o.images;
  }
};

EFun push_permutation(const EFun& f, const Permutation& w, std::map<PermKey, EFun>& memo) {
  const PermKey key{f.node(), w.images()};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  EFun out = f;
  switch (f.kind()) {
    case EFun::Kind::Delta: out = EFun::delta_leaf(f.arg_a().permute_x(w), f.arg_b().permute_x(w)); break;
    case EFun::Kind::Theta: out = EFun::theta_leaf(f.arg_a().permute_x(w)); break;
    case EFun::Kind::InvTheta: out = EFun::inv_theta_leaf(f.arg_a().permute_x(w)); break;
    case EFun::Kind::XPermuted: out = push_permutation(f.children().front(), w * f.permutation(), memo); break;
    default: {
      if (f.kind() == EFun::Kind::Sum && f.children().empty()) {
        out = EFun::zero(f.type().permute_x(w));
        break;
      }
      std::vector<EFun> kids;
      for (const EFun& c : f.children()) kids.push_back(push_permutation(c, w, memo));
      out = rebuild(f, kids);
    }
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace

EFun materialize(const EFun& f) {
  std::map<PermKey, EFun> memo;
  return push_permutation(f, Permutation(), memo);
}

EFun substitute(const EFun& f, const LinearSubstitution& s) {
  if (s.empty()) return f;
  std::unordered_map<const EFun::Node*, EFun> memo;
  if (s.touches_x()) return substitute_leaves(materialize(f), s, memo);
  return substitute_leaves(f, s, memo);
}

EFun relabel_mu(const Permutation& sigma, const EFun& f) {
  return substitute(f, LinearSubstitution::relabel_mu(sigma));
}

// ---------------------------------------------------------------- operators

namespace {

void require_character(const LinearForm& mu) {
  if (mu.has_x()) throw Error(ErrorKind::NotACharacter, "character " + mu.to_string() + " involves x variables");
  if (mu.is_zero()) throw Error(ErrorKind::TrivialCharacter, "character is zero");
}

}  // namespace

EFun demazure(int i, const LinearForm& mu, const EFun& f) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "operator index must be >= 1");
  require_character(mu);
  const LinearForm root = LinearForm::x(i + 1) - LinearForm::x(i);
  return EFun::sum({
      EFun::product({EFun::delta_leaf(root, mu), f}),
      EFun::product({EFun::delta_leaf(-root, LinearForm::h()), EFun::x_permuted(Permutation::simple(i), f)}),
  });
}

EFun demazure_reduced(int i, const LinearForm& mu, const EFun& f) {
  require_character(mu);
  if (mu == -LinearForm::h()) {
    throw Error(ErrorKind::ReducedUndefined, "reduced operator at step " + std::to_string(i) +
                                                 " is undefined for character -h");
  }
  // 1 / delta(mu, h) = vartheta(mu) vartheta(h) / vartheta(mu + h).
  const EFun inverse_delta = EFun::product({EFun::theta_leaf(mu), EFun::theta_leaf(LinearForm::h()),
                                            EFun::inv_theta_leaf(mu + LinearForm::h())});
  return EFun::product({inverse_delta, demazure(i, mu, f)});
}

EFun demazure_diamond(int i, const EFun& f, bool reduced) {
  const LinearForm mu = admissible_mu(f.type(), i);
  return reduced ? demazure_reduced(i, mu, f) : demazure(i, mu, f);
}

EFun compose_diamond(const std::vector<int>& word, const EFun& f, bool reduced) {
  EFun g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure_diamond(*it, g, reduced);
  return g;
}

EFun ell_min(int m, int r) {
  minimal_pattern(m, r);  // validates
  std::vector<EFun> factors;
  for (int i = 1; i <= r; ++i) {
    const LinearForm base = LinearForm::u() + LinearForm::x(i);
    factors.push_back(EFun::delta_leaf(base - LinearForm::x(m - r + i), LinearForm::mu(i)));
    for (int j = m - r + i + 1; j <= m; ++j) {
      factors.push_back(EFun::delta_leaf(base - LinearForm::x(j), LinearForm::h()));
    }
  }
  return EFun::product(std::move(factors));
}

EFun ell_class(const Presentation& pres, bool reduced) {
  const EFun g = compose_diamond(pres.word, ell_min(pres.m, pres.r), reduced);
  return pres.sigma.is_identity() ? g : relabel_mu(pres.sigma, g);
}

EFun ell_class(const LinkPattern& p, const OrbitLattice& lattice) {
  return ell_class(minimal_presentation(p, lattice));
}

EFun ell_class(const LinkPattern& p) { return ell_class(minimal_presentation(p)); }

// ---------------------------------------------------------------- theta polynomials

namespace {

using Exponents = std::map<LinearForm, int>;

/// Multiplies vartheta(a)^e into the monomial; returns false if the monomial became zero.
void multiply_factor(GaussRational& coefficient, Exponents& exps, LinearForm a, int e) {
  if (e == 0) return;
  if (!a.is_zero() && a.terms().begin()->second < 0) {
    a = -a;
    if (e % 2 != 0) coefficient = coefficient * GaussRational{Rational(-1), Rational(0)};
  }
  auto [it, inserted] = exps.try_emplace(std::move(a), e);
  if (!inserted) {
    it->second += e;
    if (it->second == 0) exps.erase(it);
  }
}

/// Folds like monomials and removes vanishing ones.
std::vector<ThetaMonomial> normalize(std::vector<ThetaMonomial> raw) {
  std::map<Exponents, GaussRational> merged;
  for (ThetaMonomial& t : raw) {
    auto zero = t.exponents.find(LinearForm());
    if (zero != t.exponents.end()) {
      if (zero->second > 0) continue;  // contains vartheta(0)
      throw Error(ErrorKind::RestrictionPole, "vartheta(0) remains in a denominator");
    }
    auto [it, inserted] = merged.try_emplace(std::move(t.exponents), t.coefficient);
    if (!inserted) it->second = it->second + t.coefficient;
  }
  std::vector<ThetaMonomial> out;
  for (auto& [e, c] : merged) {
    if (c.re == Rational(0) && c.im == Rational(0)) continue;
    out.push_back({c, e});
  }
  return out;
}

std::vector<ThetaMonomial> expand_node(const EFun& f, const Permutation& w,
                                       std::map<PermKey, std::vector<ThetaMonomial>>& memo) {
  const PermKey key{f.node(), w.images()};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const GaussRational unit{Rational(1), Rational(0)};
  std::vector<ThetaMonomial> out;
  auto single = [&](std::initializer_list<std::pair<LinearForm, int>> factors) {
    ThetaMonomial t{unit, {}};
    for (const auto& [a, e] : factors) multiply_factor(t.coefficient, t.exponents, a.permute_x(w), e);
    return std::vector<ThetaMonomial>{t};
  };
  switch (f.kind()) {
    case EFun::Kind::Delta:
      out = single({{f.arg_a() + f.arg_b(), 1}, {f.arg_a(), -1}, {f.arg_b(), -1}});
      break;
    case EFun::Kind::Theta: out = single({{f.arg_a(), 1}}); break;
    case EFun::Kind::InvTheta: out = single({{f.arg_a(), -1}}); break;
    case EFun::Kind::XPermuted: out = expand_node(f.children().front(), w * f.permutation(), memo); break;
    case EFun::Kind::Scale:
      out = expand_node(f.children().front(), w, memo);
      for (ThetaMonomial& t : out) t.coefficient = f.constant() * t.coefficient;
      break;
    case EFun::Kind::Sum:
      for (const EFun& c : f.children()) {
        auto part = expand_node(c, w, memo);
        out.insert(out.end(), part.begin(), part.end());
      }
      break;
    case EFun::Kind::Product: {
      out = {ThetaMonomial{unit, {}}};
      for (const EFun& c : f.children()) {
        const auto part = expand_node(c, w, memo);
        std::vector<ThetaMonomial> next;
        next.reserve(out.size() * part.size());
        for (const ThetaMonomial& l : out) {
          for (const ThetaMonomial& r : part) {
            ThetaMonomial t{l.coefficient * r.coefficient, l.exponents};
            for (const auto& [a, e] : r.exponents) multiply_factor(t.coefficient, t.exponents, a, e);
            next.push_back(std::move(t));
          }
        }
        out = std::move(next);
      }
      break;
    }
  }
  out = normalize(std::move(out));
  memo.emplace(key, out);
  return out;
}

}  // namespace

ThetaPolynomial ThetaPolynomial::expand(const EFun& f) {
  std::map<PermKey, std::vector<ThetaMonomial>> memo;
  ThetaPolynomial p;
  p.monomials_ = expand_node(f, Permutation(), memo);
  p.type_ = f.type();
  return p;
}

ThetaPolynomial ThetaPolynomial::substitute(const LinearSubstitution& s) const {
  std::vector<ThetaMonomial> raw;
  for (const ThetaMonomial& t : monomials_) {
    ThetaMonomial out{t.coefficient, {}};
    for (const auto& [a, e] : t.exponents) multiply_factor(out.coefficient, out.exponents, s.apply(a), e);
    raw.push_back(std::move(out));
  }
  ThetaPolynomial p;
  p.monomials_ = normalize(std::move(raw));
  p.type_ = s.apply(type_);
  return p;
}

EFun ThetaPolynomial::to_efun() const {
  if (monomials_.empty()) return EFun::zero(type_);
  std::vector<EFun> terms;
  for (const ThetaMonomial& t : monomials_) {
    std::vector<EFun> factors;
    for (const auto& [a, e] : t.exponents) {
      for (int k = 0; k < std::abs(e); ++k) {
        factors.push_back(e > 0 ? EFun::theta_leaf(a) : EFun::inv_theta_leaf(a));
      }
    }
    EFun prod = EFun::product(std::move(factors));
    const bool unit = t.coefficient.re == Rational(1) && t.coefficient.im == Rational(0);
    terms.push_back(unit ? prod : EFun::scale(t.coefficient, prod));
  }
  return EFun::sum(std::move(terms));
}

}  // namespace ellclass
