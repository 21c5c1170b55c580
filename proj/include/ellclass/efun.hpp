#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "ellclass/forms.hpp"
#include "ellclass/linkpattern.hpp"
#include "ellclass/permutation.hpp"
#include "ellclass/theta.hpp"

namespace ellclass {

/// Complex values for the symbols, in additive coordinates, plus the modular parameter.
class PointAssignment {
 public:
  explicit PointAssignment(ModularParams params = ModularParams()) : params_(params) {}

  void set(Symbol s, Complex v) { values_[s] = v; }
  /// Throws InvalidArgument if s has no value.
  Complex value(Symbol s) const;
  Complex value(const LinearForm& f) const;
  const std::map<Symbol, Complex>& values() const noexcept { return values_; }
  const ModularParams& params() const noexcept { return params_; }

  /// The point whose x_j equals this point's x_{w(j)}.
  PointAssignment permuted_x(const Permutation& w) const;

 private:
  ModularParams params_;
  std::map<Symbol, Complex> values_;
};

/// Immutable elliptic function given as an expression tree, carrying its exact type.
/// Children are shared, so trees built by repeated operators are DAGs.
class EFun {
 public:
  enum class Kind { Sum, Product, Scale, Delta, Theta, InvTheta, XPermuted };

  struct Node {
    Kind kind;
    QForm type;
    std::vector<EFun> children;
    LinearForm a;            // Delta, Theta, InvTheta
    LinearForm b;            // Delta
    GaussRational constant;  // Scale
    Permutation perm;        // XPermuted
  };

  /// Empty product: the constant 1 of type 0.
  static EFun one();
  /// Empty sum with a prescribed type.
  static EFun zero(QForm type);
  /// delta(a, b) = vartheta(a+b) / (vartheta(a) vartheta(b)); type a (.) b.
  static EFun delta_leaf(LinearForm a, LinearForm b);
  /// vartheta(a); type a^2 / 2.
  static EFun theta_leaf(LinearForm a);
  /// 1 / vartheta(a); type -a^2 / 2.
  static EFun inv_theta_leaf(LinearForm a);
  /// Throws ImpurityError unless every term has the same type.
  static EFun sum(std::vector<EFun> terms);
  static EFun product(std::vector<EFun> factors);
  static EFun scale(GaussRational c, EFun f);
  /// f evaluated with x_j replaced by x_{w(j)}; nested permutations are merged.
  static EFun x_permuted(const Permutation& w, EFun f);

  Kind kind() const noexcept { return node_->kind; }
  const QForm& type() const noexcept { return node_->type; }
  const std::vector<EFun>& children() const noexcept { return node_->children; }
  const LinearForm& arg_a() const noexcept { return node_->a; }
  const LinearForm& arg_b() const noexcept { return node_->b; }
  const GaussRational& constant() const noexcept { return node_->constant; }
  const Permutation& permutation() const noexcept { return node_->perm; }
  const Node* node() const noexcept { return node_.get(); }

 private:
  explicit EFun(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Value at a point. Throws PoleError (with the offending leaf path) near a pole.
Complex evaluate(const EFun& f, const PointAssignment& pt);
/// Value with every sum replaced by the sum of its terms' magnitudes; bounds the cancellation scale.
double evaluate_magnitude(const EFun& f, const PointAssignment& pt);
/// Values of the immediate terms of a top-level Sum (or the value itself otherwise).
std::vector<Complex> evaluate_terms(const EFun& f, const PointAssignment& pt);

/// Every symbol a point must assign for f to be evaluated.
std::set<Symbol> symbols_of(const EFun& f);
/// Number of distinct nodes in the DAG.
std::size_t node_count(const EFun& f);

/// Rewrites leaf arguments and types. Substitutions touching x first push every
/// permutation node into the leaves.
EFun substitute(const EFun& f, const LinearSubstitution& s);
/// mu_j -> mu_{sigma(j)} on arguments and type.
EFun relabel_mu(const Permutation& sigma, const EFun& f);
/// Equivalent tree without XPermuted nodes.
EFun materialize(const EFun& f);

/// delta(x_{i+1} - x_i, mu) f + delta(x_i - x_{i+1}, h) s_i f.
/// Throws NotACharacter, TrivialCharacter, or ImpurityError when mu is not admissible.
EFun demazure(int i, const LinearForm& mu, const EFun& f);
/// demazure / delta(mu, h). Throws ReducedUndefined when mu = -h.
EFun demazure_reduced(int i, const LinearForm& mu, const EFun& f);
/// Demazure operator with the admissible character for type(f).
EFun demazure_diamond(int i, const EFun& f, bool reduced);
/// Applies demazure_diamond along the word, rightmost letter first.
EFun compose_diamond(const std::vector<int>& word, const EFun& f, bool reduced);

/// prod_i delta(u + x_i - x_{m-r+i}, mu_i) prod_{j > m-r+i} delta(u + x_i - x_j, h).
EFun ell_min(int m, int r);
/// sigma^mu C_w(ell_min) for the given presentation.
EFun ell_class(const Presentation& pres, bool reduced = false);
/// Class of a labelled pattern via its lexicographic minimal presentation.
EFun ell_class(const LinkPattern& p);
EFun ell_class(const LinkPattern& p, const OrbitLattice& lattice);

/// Sum of monomials c * prod vartheta(a)^e with canonical arguments
/// (first nonzero coefficient positive, so vartheta(-a) = -vartheta(a) is folded into c).
struct ThetaMonomial {
  GaussRational coefficient;
  std::map<LinearForm, int> exponents;
};

class ThetaPolynomial {
 public:
  /// Expands f completely; throws RestrictionPole on 1/vartheta(0).
  static ThetaPolynomial expand(const EFun& f);

  /// Applies s to every argument, cancels powers, and drops monomials that contain vartheta(0).
  /// Throws RestrictionPole when vartheta(0) survives in a denominator.
  ThetaPolynomial substitute(const LinearSubstitution& s) const;

  const std::vector<ThetaMonomial>& monomials() const noexcept { return monomials_; }
  const QForm& type() const noexcept { return type_; }
  bool is_zero() const noexcept { return monomials_.empty(); }

  EFun to_efun() const;

 private:
  std::vector<ThetaMonomial> monomials_;
  QForm type_;
};

}  // namespace ellclass
