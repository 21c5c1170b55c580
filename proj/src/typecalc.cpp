#include "ellclass/typecalc.hpp"

#include "ellclass/errors.hpp"

namespace ellclass {

QForm qf_of_theta(const LinearForm& a) { return QForm::half_square(a); }

QForm qf_of_delta(const LinearForm& a, const LinearForm& b) { return QForm::product(a, b); }

QForm s_action(int i, const QForm& q) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "s_action index must be >= 1");
  return q.permute_x(Permutation::simple(i));
}

LinearForm divide_by_root(int i, const QForm& diff) {
  const Symbol xi = Symbol::x(i);
  const Symbol xj = Symbol::x(i + 1);
  // With e = x_i - x_{i+1}: (e (.) L)[x_i][c] = L_c / 2 for c outside {x_i, x_{i+1}},
  // the diagonal entries are L_{x_i} and -L_{x_{i+1}}.
  LinearForm quotient;
  quotient.add(xi, diff.entry(xi, xi));
  quotient.add(xj, -diff.entry(xj, xj));
  const LinearForm row = diff.row(xi);
  for (const auto& [c, v] : row.terms()) {
    if (c == xi || c == xj) continue;
    quotient.add(c, 2 * v);
  }
  LinearForm root = LinearForm(xi) - LinearForm(xj);
  if (QForm::product(root, quotient) != diff) {
    throw Error(ErrorKind::NotDivisible,
                "type difference is not divisible by x" + std::to_string(i) + " - x" + std::to_string(i + 1));
  }
  return quotient;
}

LinearForm divided_difference(int i, const QForm& q) { return divide_by_root(i, q - s_action(i, q)); }

LinearForm rho(int m) {
  LinearForm r;
  for (int i = 1; i <= m; ++i) r.add(Symbol::x(i), Rational(-i));
  return r;
}

QForm rho_h(int m) { return QForm::product(rho(m), LinearForm::h()); }

LinearForm phi(const Permutation& w, const std::vector<LinearForm>& alpha) {
  LinearForm acc;
  const int m = static_cast<int>(alpha.size());
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (w(i) > w(j)) acc += alpha[i - 1] - alpha[j - 1];
    }
  }
  return acc;
}

LinearForm admissible_mu(const QForm& q, int i) {
  LinearForm mu = divided_difference(i, q) - LinearForm::h();
  if (mu.has_x()) {
    throw Error(ErrorKind::NotACharacter, "admissible character at step " + std::to_string(i) +
                                              " involves x variables: " + mu.to_string());
  }
  if (mu.is_zero()) {
    throw Error(ErrorKind::TrivialCharacter, "admissible character at step " + std::to_string(i) + " is zero");
  }
  return mu;
}

TypeDecomposition decompose_type(const QForm& q, int m) {
  const QForm shifted = q - rho_h(m);
  if (shifted.has_x_cross_terms()) {
    throw Error(ErrorKind::CrossTerm, "type has an x_i x_j entry");
  }
  TypeDecomposition d;
  for (int i = 1; i <= m; ++i) {
    // The polynomial of x_i (.) alpha has M[x_i][c] = alpha_c / 2.
    d.alpha.push_back(2 * shifted.row(Symbol::x(i)));
  }
  for (const auto& [key, c] : shifted.entries()) {
    const Symbol x = key.first.is_x() ? key.first : key.second;
    if (key.first.is_x() != key.second.is_x() && x.index > m) {
      throw Error(ErrorKind::InvalidArgument, "type involves " + x.name() + " beyond m = " + std::to_string(m));
    }
  }
  d.q_mu = shifted.non_x_part();
  return d;
}

QForm recompose_type(const TypeDecomposition& d) {
  const int m = static_cast<int>(d.alpha.size());
  QForm q = rho_h(m) + d.q_mu;
  for (int i = 1; i <= m; ++i) q += QForm::product(LinearForm::x(i), d.alpha[i - 1]);
  return q;
}

std::vector<LinearForm> permute_coefficients(const Permutation& w, const std::vector<LinearForm>& alpha) {
  std::vector<LinearForm> out(alpha.size());
  for (std::size_t i = 1; i <= alpha.size(); ++i) out[w(static_cast<int>(i)) - 1] = alpha[i - 1];
  return out;
}

QForm unreduced_transport(const Permutation& w, const QForm& q, int m) {
  TypeDecomposition d = decompose_type(q, m);
  d.alpha = permute_coefficients(w, d.alpha);
  return recompose_type(d);
}

QForm reduced_transport(const Permutation& w, const QForm& q, int m) {
  const TypeDecomposition d = decompose_type(q, m);
  return unreduced_transport(w, q, m) - QForm::product(phi(w, d.alpha), LinearForm::h());
}

}  // namespace ellclass
