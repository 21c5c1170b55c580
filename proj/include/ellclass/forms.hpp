#pragma once

#include <concepts>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include <boost/rational.hpp>

namespace ellclass {

using Rational = boost::rational<std::int64_t>;

// boost 1.74 rational == integer recurses forever under C++20 rewritten comparisons;
// compare against Rational(k) instead. These overloads catch int literals at compile time.
template <std::integral I>
bool operator==(const Rational&, I) = delete;
template <std::integral I>
bool operator==(I, const Rational&) = delete;

/// Exact complex rational, used for constant prefactors in expression trees.
struct GaussRational {
  Rational re{0};
  Rational im{0};

  friend bool operator==(const GaussRational&, const GaussRational&) = default;
};

GaussRational operator*(const GaussRational& a, const GaussRational& b);
GaussRational operator+(const GaussRational& a, const GaussRational& b);

/// Canonical text for a rational: "3", "-1/2".
std::string to_string(const Rational& r);
/// Inverse of to_string; throws InvalidArgument.
Rational parse_rational(const std::string& text);

enum class SymbolKind : std::uint8_t { X = 0, U = 1, H = 2, Mu = 3 };

/// One variable of the symbol universe: x_i, u, h or mu_j.
/// Ordered x_1 < x_2 < ... < u < h < mu_1 < mu_2 < ...
struct Symbol {
  SymbolKind kind = SymbolKind::X;
  int index = 0;  // 1-based for X and Mu, 0 for U and H

  static Symbol x(int i) { return {SymbolKind::X, i}; }
  static Symbol u() { return {SymbolKind::U, 0}; }
  static Symbol h() { return {SymbolKind::H, 0}; }
  static Symbol mu(int j) { return {SymbolKind::Mu, j}; }

  bool is_x() const noexcept { return kind == SymbolKind::X; }

  /// "x3", "u", "h", "mu2".
  std::string name() const;
  /// Inverse of name(); throws InvalidArgument.
  static Symbol parse(const std::string& text);

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

class Permutation;

/// Exact linear form sum c_s * s with sparse rational coefficients.
class LinearForm {
 public:
  using Map = std::map<Symbol, Rational>;

  LinearForm() = default;
  /// The form 1 * s.
  LinearForm(Symbol s);  // NOLINT(google-explicit-constructor)

  static LinearForm x(int i) { return LinearForm(Symbol::x(i)); }
  static LinearForm u() { return LinearForm(Symbol::u()); }
  static LinearForm h() { return LinearForm(Symbol::h()); }
  static LinearForm mu(int j) { return LinearForm(Symbol::mu(j)); }

  Rational coefficient(Symbol s) const;
  void add(Symbol s, const Rational& c);
  const Map& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool has_x() const;
  /// The part supported on non-x symbols.
  LinearForm non_x_part() const;

  /// Moves the coefficient of x_j to x_{w(j)}.
  LinearForm permute_x(const Permutation& w) const;

  /// Numerical value at an assignment of the symbols.
  template <typename T, typename F>
  T evaluate(F&& value_of) const {
    T acc{};
    for (const auto& [s, c] : terms_) {
      acc += value_of(s) * (static_cast<double>(c.numerator()) / static_cast<double>(c.denominator()));
    }
    return acc;
  }

  /// Additive text such as "mu1 - mu2 + 2*h".
  std::string to_string() const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm& operator*=(const Rational& c);

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator-(LinearForm a) { return a *= Rational(-1); }
  friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }
  friend LinearForm operator*(std::int64_t c, LinearForm a) { return a *= Rational(c); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.terms_ < b.terms_; }

 private:
  Map terms_;  // never stores zero coefficients
};

/// Exact symmetric bilinear form, stored as its upper triangle.
/// Its polynomial is sum_{a,b} M[a][b] v_a v_b.
class QForm {
 public:
  using Key = std::pair<Symbol, Symbol>;  // first <= second
  using Map = std::map<Key, Rational>;

  QForm() = default;

  /// (1/2) a (x) a, the type of a theta factor.
  static QForm half_square(const LinearForm& a);
  /// The symmetrized product a (.) b, whose polynomial is (a.v)(b.v).
  static QForm product(const LinearForm& a, const LinearForm& b);

  Rational entry(Symbol a, Symbol b) const;
  /// Adds c to M[a][b] and M[b][a] (once if a == b).
  void add_entry(Symbol a, Symbol b, const Rational& c);
  const Map& entries() const noexcept { return entries_; }

  bool is_zero() const noexcept { return entries_.empty(); }
  /// sum_c M[a][c] e_c.
  LinearForm row(Symbol a) const;
  bool has_x_cross_terms() const;
  /// Keeps only entries with both indices outside x.
  QForm non_x_part() const;

  QForm permute_x(const Permutation& w) const;

  /// The polynomial value at an exact assignment.
  Rational polynomial(const std::function<Rational(Symbol)>& value_of) const;

  std::string to_string() const;

  QForm& operator+=(const QForm& o);
  QForm& operator-=(const QForm& o);
  QForm& operator*=(const Rational& c);

  friend QForm operator+(QForm a, const QForm& b) { return a += b; }
  friend QForm operator-(QForm a, const QForm& b) { return a -= b; }
  friend QForm operator-(QForm a) { return a *= Rational(-1); }
  friend QForm operator*(const Rational& c, QForm a) { return a *= c; }

  friend bool operator==(const QForm&, const QForm&) = default;

 private:
  Map entries_;  // never stores zero entries
};

/// Linear change of variables s -> image(s); symbols without an image are fixed.
class LinearSubstitution {
 public:
  LinearSubstitution() = default;

  void set(Symbol s, LinearForm image) { images_[s] = std::move(image); }
  const std::map<Symbol, LinearForm>& images() const noexcept { return images_; }
  bool empty() const noexcept { return images_.empty(); }
  bool touches_x() const;

  LinearForm apply(const LinearForm& f) const;
  QForm apply(const QForm& q) const;

  /// mu_j -> mu_{sigma(j)}.
  static LinearSubstitution relabel_mu(const Permutation& sigma);
  /// s -> 0.
  static LinearSubstitution zero(Symbol s);

 private:
  std::map<Symbol, LinearForm> images_;
};

}  // namespace ellclass
