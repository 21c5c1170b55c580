#include "ellclass/schubert.hpp"

#include "ellclass/errors.hpp"

namespace ellclass {

FlagContext FlagContext::matrices(int n, bool invert_mu) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "flag context needs n >= 1");
  return FlagContext{n, n, true, invert_mu};
}

FlagContext FlagContext::weights(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "weight context needs n >= 2");
  return FlagContext{n, n - 1, true, false};
}

std::string FlagContext::display_name(Symbol s) const {
  const bool weight = y_count == n - 1;
  if (s.is_x()) {
    if (s.index <= n) return (weight ? "z" : "x") + std::to_string(s.index);
    if (s.index <= n + y_count) return (weight ? "gamma" : "y") + std::to_string(s.index - n);
  }
  return s.name();
}

namespace {

LinearForm xv(int i) { return LinearForm::x(i); }

EFun theta_grid(int n, int cols) {
  std::vector<EFun> f;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= cols; ++j) f.push_back(EFun::theta_leaf(xv(i) - xv(n + j)));
  }
  return EFun::product(std::move(f));
}

/// prod_{i<j<=count} vartheta(y_i - y_j + h) / vartheta(h), or its inverse.
EFun unipotent_factor(int n, int count, bool inverse) {
  std::vector<EFun> f;
  const LinearForm h = LinearForm::h();
  for (int i = 1; i <= count; ++i) {
    for (int j = i + 1; j <= count; ++j) {
      const LinearForm arg = xv(n + i) - xv(n + j) + h;
      if (inverse) {
        f.push_back(EFun::theta_leaf(h));
        f.push_back(EFun::inv_theta_leaf(arg));
      } else {
        f.push_back(EFun::theta_leaf(arg));
        f.push_back(EFun::inv_theta_leaf(h));
      }
    }
  }
  return EFun::product(std::move(f));
}

EFun tangent_factor(int n, bool inverse) {
  std::vector<EFun> f;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      const LinearForm arg = xv(n + i) - xv(n + j);
      f.push_back(inverse ? EFun::inv_theta_leaf(arg) : EFun::theta_leaf(arg));
    }
  }
  return EFun::product(std::move(f));
}

}  // namespace

EFun eu_ell_M(int n) { return theta_grid(n, n); }
EFun eu_ell_M_prime(int n) { return theta_grid(n, n - 1); }
EFun eu_ell_Fl(int n) { return tangent_factor(n, false); }
EFun b_class(int n) { return unipotent_factor(n, n, false); }
EFun b_class_prime(int n) { return unipotent_factor(n, n - 1, false); }

Permutation pattern_permutation(const LinkPattern& p) {
  const int n = p.m() / 2;
  if (p.m() != 2 * n || p.r() != n) {
    throw Error(ErrorKind::NotPermutationPattern, "pattern " + p.to_string() + " does not have m = 2r");
  }
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (const Arc& a : p.arcs()) {
    if (a.target > n) {
      throw Error(ErrorKind::NotPermutationPattern, "arc " + std::to_string(a.source) + ">" + std::to_string(a.target) +
                                                        " ends beyond node " + std::to_string(n));
    }
    images[a.source - n - 1] = a.target;
  }
  return Permutation(std::move(images));
}

LinkPattern permutation_pattern(const Permutation& w, int n) {
  std::vector<Arc> arcs;
  for (int j = 1; j <= n; ++j) arcs.push_back({n + j, w(j)});
  return LinkPattern(2 * n, std::move(arcs));
}

LinearSubstitution mu_inversion(int r) {
  LinearSubstitution s;
  for (int i = 1; i <= r; ++i) s.set(Symbol::mu(i), -LinearForm::mu(i));
  return s;
}

LinearSubstitution rtv_substitution(int n) {
  LinearSubstitution s;
  for (int i = 1; i < n; ++i) s.set(Symbol::mu(i), LinearForm::h() + LinearForm::mu(n) - LinearForm::mu(i));
  return s;
}

EFun localize(const EFun& cls, const FlagContext& ctx) {
  const int n = ctx.n;
  EFun f = EFun::product({eu_ell_M(n), tangent_factor(n, true), unipotent_factor(n, n, true), cls});
  if (ctx.u_specialized) f = substitute(f, LinearSubstitution::zero(Symbol::u()));
  if (ctx.invert_mu) f = substitute(f, mu_inversion(n));
  return f;
}

EFun reduced_class(const LinkPattern& p, const FlagContext& ctx) {
  pattern_permutation(p);  // validates the shape
  if (p.m() != 2 * ctx.n) throw Error(ErrorKind::InvalidArgument, "context size does not match the pattern");
  return localize(ell_class(p), ctx);
}

ThetaPolynomial restrict_symbolic(const EFun& f, const Permutation& sigma, const FlagContext& ctx) {
  LinearSubstitution s;
  for (int i = 1; i <= ctx.y_count; ++i) s.set(Symbol::x(ctx.n + i), LinearForm::x(sigma(i)));
  return ThetaPolynomial::expand(f).substitute(s);
}

EFun restrict_fixed_point(const EFun& f, const Permutation& sigma, const FlagContext& ctx) {
  return restrict_symbolic(f, sigma, ctx).to_efun();
}

EFun weight_function(const LinkPattern& p, int n, bool rtv) {
  if (n < 2 || p.m() != 2 * n - 1 || p.r() != n - 1) {
    throw Error(ErrorKind::NotWeightPattern, "pattern " + p.to_string() + " is not of size 2n-1 and rank n-1");
  }
  for (const Arc& a : p.arcs()) {
    if (a.source <= n) {
      throw Error(ErrorKind::NotWeightPattern, "arc source " + std::to_string(a.source) + " is not among the last n-1 nodes");
    }
  }
  EFun f = EFun::product({ell_class(p), eu_ell_M_prime(n), unipotent_factor(n, n - 1, true)});
  f = substitute(f, LinearSubstitution::zero(Symbol::u()));
  if (rtv) f = substitute(f, rtv_substitution(n));
  return f;
}

}  // namespace ellclass
