#include "ellclass/forms.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ellclass/errors.hpp"
#include "ellclass/permutation.hpp"

namespace ellclass {

GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRational operator+(const GaussRational& a, const GaussRational& b) {
  return {a.re + b.re, a.im + b.im};
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
      throw Error(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  const auto slash = sv.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(sv));
  const std::int64_t den = parse_int(sv.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
  return Rational(parse_int(sv.substr(0, slash)), den);
}

std::string Symbol::name() const {
  switch (kind) {
    case SymbolKind::X: return "x" + std::to_string(index);
    case SymbolKind::U: return "u";
    case SymbolKind::H: return "h";
    case SymbolKind::Mu: return "mu" + std::to_string(index);
  }
  return "?";
}

Symbol Symbol::parse(const std::string& text) {
  if (text == "u") return u();
  if (text == "h") return h();
  auto index_after = [&](std::size_t prefix) {
    const std::string_view digits = std::string_view(text).substr(prefix);
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || v < 1) {
      throw Error(ErrorKind::InvalidArgument, "unknown symbol '" + text + "'");
    }
    return v;
  };
  if (text.rfind("mu", 0) == 0) return mu(index_after(2));
  if (text.rfind("x", 0) == 0) return x(index_after(1));
  throw Error(ErrorKind::InvalidArgument, "unknown symbol '" + text + "'");
}

// ---------------------------------------------------------------- LinearForm

LinearForm::LinearForm(Symbol s) { terms_[s] = Rational(1); }

Rational LinearForm::coefficient(Symbol s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinearForm::add(Symbol s, const Rational& c) {
  if (c == Rational(0)) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Rational(0)) terms_.erase(it);
  }
}

bool LinearForm::has_x() const {
  return !terms_.empty() && terms_.begin()->first.is_x();
}

LinearForm LinearForm::non_x_part() const {
  LinearForm out;
  for (const auto& [s, c] : terms_) {
    if (!s.is_x()) out.terms_.emplace(s, c);
  }
  return out;
}

LinearForm LinearForm::permute_x(const Permutation& w) const {
  LinearForm out;
  for (const auto& [s, c] : terms_) {
    out.terms_.emplace(s.is_x() ? Symbol::x(w(s.index)) : s, c);
  }
  return out;
}

std::string LinearForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    Rational mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != Rational(1)) out += ellclass::to_string(mag) + "*";
    out += s.name();
    first = false;
  }
  return out;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& c) {
  if (c == Rational(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

// ---------------------------------------------------------------- QForm

namespace {

QForm::Key ordered(Symbol a, Symbol b) { return a <= b ? QForm::Key{a, b} : QForm::Key{b, a}; }

}  // namespace

QForm QForm::half_square(const LinearForm& a) {
  QForm q = product(a, a);
  q *= Rational(1, 2);
  return q;
}

QForm QForm::product(const LinearForm& a, const LinearForm& b) {
  // Entry (s,t) of the symmetrized outer product is (a_s b_t + a_t b_s) / 2.
  QForm q;
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) {
      q.add_entry(s, t, s == t ? cs * ct : cs * ct / 2);
    }
  }
  return q;
}

Rational QForm::entry(Symbol a, Symbol b) const {
  auto it = entries_.find(ordered(a, b));
  return it == entries_.end() ? Rational(0) : it->second;
}

void QForm::add_entry(Symbol a, Symbol b, const Rational& c) {
  if (c == Rational(0)) return;
  auto [it, inserted] = entries_.try_emplace(ordered(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second == Rational(0)) entries_.erase(it);
  }
}

LinearForm QForm::row(Symbol a) const {
  LinearForm out;
  for (const auto& [key, c] : entries_) {
    if (key.first == a) out.add(key.second, c);
    else if (key.second == a) out.add(key.first, c);
  }
  return out;
}

bool QForm::has_x_cross_terms() const {
  for (const auto& [key, c] : entries_) {
    if (key.first.is_x() && key.second.is_x()) return true;
  }
  return false;
}

QForm QForm::non_x_part() const {
  QForm out;
  for (const auto& [key, c] : entries_) {
    if (!key.first.is_x() && !key.second.is_x()) out.entries_.emplace(key, c);
  }
  return out;
}

QForm QForm::permute_x(const Permutation& w) const {
  auto map = [&](Symbol s) { return s.is_x() ? Symbol::x(w(s.index)) : s; };
  QForm out;
  for (const auto& [key, c] : entries_) out.entries_.emplace(ordered(map(key.first), map(key.second)), c);
  return out;
}

Rational QForm::polynomial(const std::function<Rational(Symbol)>& value_of) const {
  Rational acc(0);
  for (const auto& [key, c] : entries_) {
    const Rational term = c * value_of(key.first) * value_of(key.second);
    acc += key.first == key.second ? term : 2 * term;
  }
  return acc;
}

std::string QForm::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : entries_) {
    if (!first) os << ", ";
    os << "[" << key.first.name() << "," << key.second.name() << "]=" << ellclass::to_string(c);
    first = false;
  }
  return os.str();
}

QForm& QForm::operator+=(const QForm& o) {
  for (const auto& [key, c] : o.entries_) add_entry(key.first, key.second, c);
  return *this;
}

QForm& QForm::operator-=(const QForm& o) {
  for (const auto& [key, c] : o.entries_) add_entry(key.first, key.second, -c);
  return *this;
}

QForm& QForm::operator*=(const Rational& c) {
  if (c == Rational(0)) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, v] : entries_) v *= c;
  return *this;
}

// ---------------------------------------------------------------- LinearSubstitution

bool LinearSubstitution::touches_x() const {
  for (const auto& [s, image] : images_) {
    if (s.is_x() || image.has_x()) return true;
  }
  return false;
}

LinearForm LinearSubstitution::apply(const LinearForm& f) const {
  LinearForm out;
  for (const auto& [s, c] : f.terms()) {
    auto it = images_.find(s);
    if (it == images_.end()) out.add(s, c);
    else out += c * it->second;
  }
  return out;
}

QForm LinearSubstitution::apply(const QForm& q) const {
  QForm out;
  for (const auto& [key, c] : q.entries()) {
    const LinearForm a = apply(LinearForm(key.first));
    const LinearForm b = apply(LinearForm(key.second));
    // M[s][t] v_s v_t appears twice off the diagonal in the full polynomial.
    const Rational weight = key.first == key.second ? c : 2 * c;
    out += weight * QForm::product(a, b);
  }
  return out;
}

LinearSubstitution LinearSubstitution::relabel_mu(const Permutation& sigma) {
  LinearSubstitution sub;
  for (int j = 1; j <= sigma.size(); ++j) {
    if (sigma(j) != j) sub.set(Symbol::mu(j), LinearForm::mu(sigma(j)));
  }
  return sub;
}

LinearSubstitution LinearSubstitution::zero(Symbol s) {
  LinearSubstitution sub;
  sub.set(s, LinearForm());
  return sub;
}

}  // namespace ellclass
