#include "ellclass/linkpattern.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "ellclass/errors.hpp"
#include "ellclass/typecalc.hpp"

namespace ellclass {

// ---------------------------------------------------------------- LinkPattern

LinkPattern::LinkPattern(int m, std::vector<Arc> arcs) : m_(m), arcs_(std::move(arcs)) {
  if (m < 0 || 2 * r() > m) {
    throw Error(ErrorKind::BadRank, "rank " + std::to_string(r()) + " needs at least " +
                                        std::to_string(2 * r()) + " nodes, got " + std::to_string(m));
  }
  roles_.assign(static_cast<std::size_t>(m), NodeRole{});
  for (int a = 1; a <= r(); ++a) {
    const Arc& arc = arcs_[a - 1];
    for (int node : {arc.source, arc.target}) {
      if (node < 1 || node > m) {
        throw Error(ErrorKind::InvalidArgument, "endpoint " + std::to_string(node) + " outside 1.." + std::to_string(m));
      }
      if (roles_[node - 1].index != 0) {
        throw Error(ErrorKind::DistinctnessError, "node " + std::to_string(node) + " is used twice");
      }
      roles_[node - 1] = NodeRole{node == arc.source ? Role::Source : Role::Target, a};
    }
  }
  int loose = 0;
  for (auto& role : roles_) {
    if (role.index == 0) role = NodeRole{Role::Loose, ++loose};
  }
}

LinkPattern LinkPattern::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](ErrorKind kind, std::size_t at, const std::string& msg) -> ParseError {
    return ParseError(kind, at, msg + " at byte " + std::to_string(at));
  };
  auto number = [&]() {
    const std::size_t start = pos;
    long long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw fail(ErrorKind::ParseError, start, "number too large");
      ++pos;
    }
    if (pos == start) throw fail(ErrorKind::ParseError, start, "expected a number");
    return std::pair<int, std::size_t>{static_cast<int>(v), start};
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) {
      throw fail(ErrorKind::ParseError, pos, std::string("expected '") + c + "'");
    }
    ++pos;
  };

  const int m = number().first;
  expect(',');
  const auto [r, r_at] = number();
  if (2 * r > m) throw fail(ErrorKind::BadRank, r_at, "rank exceeds half the node count");
  expect(':');
  std::vector<Arc> arcs;
  std::vector<std::size_t> used_at(static_cast<std::size_t>(m) + 1, std::string_view::npos);
  while (pos < text.size()) {
    if (!arcs.empty()) expect(',');
    const auto [a, a_at] = number();
    expect('>');
    const auto [b, b_at] = number();
    for (auto [node, at] : {std::pair{a, a_at}, std::pair{b, b_at}}) {
      if (node < 1 || node > m) {
        throw fail(ErrorKind::ParseError, at, "node " + std::to_string(node) + " outside 1.." + std::to_string(m));
      }
      if (used_at[node] != std::string_view::npos) {
        throw fail(ErrorKind::DistinctnessError, at,
                   "node " + std::to_string(node) + " reused (first seen at byte " + std::to_string(used_at[node]) + ")");
      }
      used_at[node] = at;
    }
    arcs.push_back({a, b});
  }
  if (static_cast<int>(arcs.size()) != r) {
    throw fail(ErrorKind::ParseError, r_at,
               "declared rank " + std::to_string(r) + " but " + std::to_string(arcs.size()) + " arcs follow");
  }
  return LinkPattern(m, std::move(arcs));
}

std::string LinkPattern::to_string() const {
  std::string out = std::to_string(m_) + "," + std::to_string(r()) + ":";
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(arcs_[k].source) + ">" + std::to_string(arcs_[k].target);
  }
  return out;
}

std::vector<int> LinkPattern::loose_nodes() const {
  std::vector<int> out;
  for (int node = 1; node <= m_; ++node) {
    if (roles_[node - 1].role == Role::Loose) out.push_back(node);
  }
  return out;
}

std::vector<int> LinkPattern::unlabelled_key() const {
  std::vector<int> key(static_cast<std::size_t>(m_), 0);
  for (const Arc& a : arcs_) {
    key[a.source - 1] = a.target;
    key[a.target - 1] = -a.source;
  }
  return key;
}

LinkPattern minimal_pattern(int m, int r) {
  if (r < 0 || 2 * r > m) {
    throw Error(ErrorKind::BadRank, "no minimal pattern of size " + std::to_string(m) + " and rank " + std::to_string(r));
  }
  std::vector<Arc> arcs;
  for (int i = 1; i <= r; ++i) arcs.push_back({m - r + i, i});
  return LinkPattern(m, std::move(arcs));
}

LinkPattern act_nodes(const Permutation& w, const LinkPattern& p) {
  std::vector<Arc> arcs;
  for (const Arc& a : p.arcs()) arcs.push_back({w(a.source), w(a.target)});
  return LinkPattern(p.m(), std::move(arcs));
}

LinkPattern act_labels(const Permutation& sigma, const LinkPattern& p) {
  if (sigma.size() > p.r()) throw Error(ErrorKind::InvalidArgument, "label permutation larger than the rank");
  std::vector<Arc> arcs(p.arcs().size());
  for (int j = 1; j <= p.r(); ++j) arcs[sigma(j) - 1] = p.arc(j);
  return LinkPattern(p.m(), std::move(arcs));
}

std::vector<LinearForm> node_values(const LinkPattern& p) {
  const int m = p.m();
  const int r = p.r();
  std::vector<LinearForm> v;
  for (int node = 1; node <= m; ++node) {
    const auto role = p.role(node);
    switch (role.role) {
      case LinkPattern::Role::Target:
        v.push_back(r * LinearForm::h() + LinearForm::mu(role.index));
        break;
      case LinkPattern::Role::Source:
        v.push_back((m - r + 1) * LinearForm::h() - LinearForm::mu(role.index));
        break;
      case LinkPattern::Role::Loose:
        v.push_back((r + role.index) * LinearForm::h());
        break;
    }
  }
  return v;
}

QForm minimal_type(int m, int r) {
  minimal_pattern(m, r);  // validates the shape
  QForm q;
  for (int i = 1; i <= r; ++i) {
    q += QForm::product(LinearForm::u() + LinearForm::x(i) - LinearForm::x(m - r + i), LinearForm::mu(i));
    for (int j = m - r + i + 1; j <= m; ++j) {
      q += QForm::product(LinearForm::u() + LinearForm::x(i) - LinearForm::x(j), LinearForm::h());
    }
  }
  return q;
}

// ---------------------------------------------------------------- OrbitLattice

namespace {

bool loose_pair(const LinkPattern& p, int i) {
  return p.role(i).role == LinkPattern::Role::Loose && p.role(i + 1).role == LinkPattern::Role::Loose;
}

LinkPattern transpose(const LinkPattern& p, int i) { return act_nodes(Permutation::simple(i), p); }

std::vector<int> lexicographic_descent(const LinkPattern& p, const OrbitLattice& lattice) {
  std::vector<int> word;
  LinkPattern cur = p;
  int d = lattice.distance(cur);
  while (d > 0) {
    bool stepped = false;
    for (int i = 1; i < cur.m(); ++i) {
      if (!lattice.swappable(cur, i)) continue;
      LinkPattern next = transpose(cur, i);
      if (lattice.distance(next) == d - 1) {
        word.push_back(i);
        cur = std::move(next);
        --d;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw Error(ErrorKind::Unreachable, "no descending transposition from " + cur.to_string());
  }
  return word;
}

Presentation presentation_from_word(const LinkPattern& p, std::vector<int> word) {
  Presentation pres;
  pres.m = p.m();
  pres.r = p.r();
  pres.w = Permutation::from_word(word, p.m());
  pres.word = std::move(word);
  const LinkPattern q = act_nodes(pres.w, minimal_pattern(p.m(), p.r()));
  std::vector<int> sigma(static_cast<std::size_t>(p.r()), 0);
  for (int j = 1; j <= p.r(); ++j) {
    for (int k = 1; k <= p.r(); ++k) {
      if (p.arc(k) == q.arc(j)) sigma[j - 1] = k;
    }
    if (sigma[j - 1] == 0) throw Error(ErrorKind::Unreachable, "arc matching failed for " + p.to_string());
  }
  pres.sigma = Permutation(std::move(sigma));
  return pres;
}

}  // namespace

OrbitLattice::OrbitLattice(int m, int r) : m_(m), r_(r) {
  const LinkPattern start = minimal_pattern(m, r);
  std::deque<LinkPattern> queue{start};
  std::vector<LinkPattern> bfs_order{start};
  distance_[start.unlabelled_key()] = 0;
  while (!queue.empty()) {
    const LinkPattern cur = queue.front();
    queue.pop_front();
    const int d = distance_.at(cur.unlabelled_key());
    for (int i = 1; i < m; ++i) {
      if (loose_pair(cur, i)) continue;
      LinkPattern next = transpose(cur, i);
      auto [it, inserted] = distance_.try_emplace(next.unlabelled_key(), d + 1);
      if (inserted) {
        queue.push_back(next);
        bfs_order.push_back(next);
      }
    }
  }
  for (const LinkPattern& p : bfs_order) {
    const auto word = lexicographic_descent(p, *this);
    representatives_.push_back(act_nodes(Permutation::from_word(word, m), start));
  }
}

int OrbitLattice::distance(const LinkPattern& p) const {
  if (p.m() != m_ || p.r() != r_) {
    throw Error(ErrorKind::Unreachable, "pattern " + p.to_string() + " has a different shape than the lattice");
  }
  auto it = distance_.find(p.unlabelled_key());
  if (it == distance_.end()) throw Error(ErrorKind::Unreachable, "pattern " + p.to_string() + " not in the orbit lattice");
  return it->second;
}

bool OrbitLattice::swappable(const LinkPattern& p, int i) const {
  return i >= 1 && i < p.m() && !loose_pair(p, i);
}

Presentation minimal_presentation(const LinkPattern& p, const OrbitLattice& lattice) {
  return presentation_from_word(p, lexicographic_descent(p, lattice));
}

Presentation minimal_presentation(const LinkPattern& p) {
  const OrbitLattice lattice(p.m(), p.r());
  return minimal_presentation(p, lattice);
}

std::vector<Presentation> all_minimal_presentations(const LinkPattern& p, const OrbitLattice& lattice) {
  std::vector<Presentation> out;
  std::vector<int> word;
  std::function<void(const LinkPattern&, int)> descend = [&](const LinkPattern& cur, int d) {
    if (d == 0) {
      out.push_back(presentation_from_word(p, word));
      return;
    }
    for (int i = 1; i < cur.m(); ++i) {
      if (!lattice.swappable(cur, i)) continue;
      LinkPattern next = transpose(cur, i);
      if (lattice.distance(next) != d - 1) continue;
      word.push_back(i);
      descend(next, d - 1);
      word.pop_back();
    }
  };
  descend(p, lattice.distance(p));
  return out;
}

// ---------------------------------------------------------------- characters

std::vector<LinearForm> raw_nu_list(const Presentation& pres) {
  std::vector<LinearForm> nu(pres.word.size());
  QForm q = minimal_type(pres.m, pres.r);
  const QForm shift = rho_h(pres.m);
  for (std::size_t k = pres.word.size(); k-- > 0;) {
    const int i = pres.word[k];
    nu[k] = admissible_mu(q, i);
    q = s_action(i, q - shift) + shift;
  }
  return nu;
}

std::vector<LinearForm> nu_list(const Presentation& pres) {
  const LinearSubstitution relabel = LinearSubstitution::relabel_mu(pres.sigma);
  std::vector<LinearForm> nu = raw_nu_list(pres);
  for (LinearForm& f : nu) f = relabel.apply(f);
  return nu;
}

std::vector<Rational> multiplicities(const Presentation& pres, const std::vector<Rational>& lambda) {
  std::vector<Rational> alpha;
  for (const LinearForm& nu : raw_nu_list(pres)) {
    Rational value = 1 - nu.coefficient(Symbol::h());
    int labels = 0;
    for (const auto& [s, c] : nu.terms()) {
      if (s.kind == SymbolKind::H) continue;
      if (s.kind != SymbolKind::Mu) {
        throw Error(ErrorKind::BadCharacterShape, "character " + nu.to_string() + " involves " + s.name());
      }
      if (s.index > static_cast<int>(lambda.size())) {
        throw Error(ErrorKind::InvalidArgument, "no multiplicity given for label " + std::to_string(s.index));
      }
      ++labels;
      value -= c * (1 - lambda[s.index - 1]);
    }
    if (labels > 2) {
      throw Error(ErrorKind::BadCharacterShape, "character " + nu.to_string() + " involves more than two labels");
    }
    alpha.push_back(value);
  }
  return alpha;
}

// ---------------------------------------------------------------- moves

Move six_move_mu(const LinkPattern& p, int i, const OrbitLattice& lattice) {
  if (i < 1 || i >= p.m()) throw Error(ErrorKind::InvalidArgument, "move index out of range");
  using Role = LinkPattern::Role;
  const auto a = p.role(i);
  const auto b = p.role(i + 1);
  if (a.role == Role::Loose && b.role == Role::Loose) {
    throw Error(ErrorKind::LooseLoose, "nodes " + std::to_string(i) + " and " + std::to_string(i + 1) + " are both loose");
  }
  MoveKind kind{};
  if (a.role != Role::Loose && b.role != Role::Loose && a.index == b.index) {
    kind = MoveKind::ArcReversal;
  } else if (a.role == Role::Target) {
    kind = b.role == Role::Target ? MoveKind::TwoTargets
         : b.role == Role::Source ? MoveKind::TargetSource
                                  : MoveKind::TargetLoose;
  } else if (a.role == Role::Source) {
    kind = b.role == Role::Target ? MoveKind::SourceTarget
         : b.role == Role::Source ? MoveKind::TwoSources
                                  : MoveKind::SourceLoose;
  } else {
    kind = b.role == Role::Target ? MoveKind::LooseTarget : MoveKind::LooseSource;
  }
  const auto v = node_values(p);
  const bool increasing = lattice.distance(transpose(p, i)) > lattice.distance(p);
  return Move{kind, v[i - 1] - v[i], increasing};
}

Move six_move_mu(const LinkPattern& p, int i) {
  const OrbitLattice lattice(p.m(), p.r());
  return six_move_mu(p, i, lattice);
}

// ---------------------------------------------------------------- extension

Extension extend_pattern(const LinkPattern& p) {
  const int m = p.m();
  const int r = p.r();
  if (m == 2 * r) throw Error(ErrorKind::AlreadySquare, "pattern already has m = 2r");
  const int extra = m - 2 * r;
  const Rational half_m(m, 2);
  Extension ext;
  ext.shift = half_m - r;
  std::vector<Arc> arcs = p.arcs();
  const auto loose = p.loose_nodes();
  for (int j = 1; j <= extra; ++j) arcs.push_back({m + j, loose[j - 1]});
  ext.pattern = LinkPattern(2 * (m - r), std::move(arcs));
  for (int i = 1; i <= r; ++i) ext.mu_new.push_back(LinearForm::mu(i) - ext.shift * LinearForm::h());
  for (int j = r + 1; j <= m - r; ++j) ext.mu_new.push_back((Rational(j) - half_m) * LinearForm::h());
  return ext;
}

}  // namespace ellclass
