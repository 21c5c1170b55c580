#pragma once

#include <string>

#include "ellclass/efun.hpp"
#include "ellclass/linkpattern.hpp"
#include "ellclass/permutation.hpp"

namespace ellclass {

/// Flag-variety view of the variables: x_{n+j} plays the role of y_j for j = 1..y_count.
struct FlagContext {
  int n = 0;
  int y_count = 0;
  bool u_specialized = true;  // u := 0
  bool invert_mu = false;     // mu_i := -mu_i

  /// n x n matrices: y_1..y_n.
  static FlagContext matrices(int n, bool invert_mu = false);
  /// n x (n-1) block of the weight-function setting: gamma_1..gamma_{n-1}.
  static FlagContext weights(int n);

  LinearForm y(int j) const { return LinearForm::x(n + j); }
  /// Display name in the renamed variables (y_j or gamma_j; x_i or z_i below n).
  std::string display_name(Symbol s) const;
};

/// prod_{i,j<=n} vartheta(x_i - y_j).
EFun eu_ell_M(int n);
/// prod_{i<=n, j<=n-1} vartheta(z_i - gamma_j).
EFun eu_ell_M_prime(int n);
/// prod_{i>j} vartheta(y_i - y_j).
EFun eu_ell_Fl(int n);
/// prod_{i<j} vartheta(y_i - y_j + h) / vartheta(h).
EFun b_class(int n);
/// Same product over the n-1 gamma variables.
EFun b_class_prime(int n);

/// w with w(j) the target of the arc starting at n+j. Throws NotPermutationPattern.
Permutation pattern_permutation(const LinkPattern& p);
/// Pattern with arc j running n+j -> w(j).
LinkPattern permutation_pattern(const Permutation& w, int n);

/// eu_M / (eu_Fl * B) * cls with the context's u and mu specializations.
EFun localize(const EFun& cls, const FlagContext& ctx);
/// localize(ell_class(p)). Throws NotPermutationPattern.
EFun reduced_class(const LinkPattern& p, const FlagContext& ctx);

/// y_i := x_{sigma(i)} applied to the fully expanded theta monomials of f.
ThetaPolynomial restrict_symbolic(const EFun& f, const Permutation& sigma, const FlagContext& ctx);
/// restrict_symbolic, rebuilt as an expression tree.
EFun restrict_fixed_point(const EFun& f, const Permutation& sigma, const FlagContext& ctx);

/// mu_i -> h + mu_n - mu_i for i < n.
LinearSubstitution rtv_substitution(int n);
/// mu_i -> -mu_i for i <= r.
LinearSubstitution mu_inversion(int r);

/// ell_class(p) * eu_M' / B' with u := 0, optionally followed by the RTV substitution.
/// Throws NotWeightPattern unless m = 2n-1, r = n-1 and every source lies in n+1..2n-1.
EFun weight_function(const LinkPattern& p, int n, bool rtv_substitution);

}  // namespace ellclass
