#pragma once

#include <vector>

#include "ellclass/forms.hpp"
#include "ellclass/permutation.hpp"

namespace ellclass {

/// Type of theta(a).
QForm qf_of_theta(const LinearForm& a);
/// Type of delta(a, b).
QForm qf_of_delta(const LinearForm& a, const LinearForm& b);

/// Swaps the x_i and x_{i+1} rows and columns.
QForm s_action(int i, const QForm& q);

/// Solves diff = (x_i - x_{i+1}) (.) L for L and verifies the reconstruction.
/// Throws NotDivisible if no such L exists.
LinearForm divide_by_root(int i, const QForm& diff);

/// (q - s_i q) / (x_i - x_{i+1}).
LinearForm divided_difference(int i, const QForm& q);

/// rho_m = -sum i x_i.
LinearForm rho(int m);
/// rho_m (.) h as a quadratic form.
QForm rho_h(int m);

/// sum over inversions i<j, w(i)>w(j) of alpha_i - alpha_j.
LinearForm phi(const Permutation& w, const std::vector<LinearForm>& alpha);

/// The unique character mu making the i-th operator preserve purity at type q.
/// Throws NotACharacter if x symbols survive, TrivialCharacter for mu = 0.
LinearForm admissible_mu(const QForm& q, int i);

/// q = sum_i x_i (.) alpha_i + rho_m h + q_mu.
struct TypeDecomposition {
  std::vector<LinearForm> alpha;  // alpha[i-1] is the coefficient form of x_i
  QForm q_mu;
};

/// Throws CrossTerm if q has an x_i x_j entry.
TypeDecomposition decompose_type(const QForm& q, int m);
QForm recompose_type(const TypeDecomposition& d);

/// w acting on the coefficient list: the coefficient of x_i moves to x_{w(i)}.
std::vector<LinearForm> permute_coefficients(const Permutation& w, const std::vector<LinearForm>& alpha);

/// Predicted type of the reduced composite along a reduced word of w, starting at type q.
QForm reduced_transport(const Permutation& w, const QForm& q, int m);
/// Predicted type of the unreduced composite.
QForm unreduced_transport(const Permutation& w, const QForm& q, int m);

}  // namespace ellclass
