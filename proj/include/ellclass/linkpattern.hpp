#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ellclass/forms.hpp"
#include "ellclass/permutation.hpp"

namespace ellclass {

struct Arc {
  int source = 0;
  int target = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// m nodes carrying r labelled directed arcs; label j is arcs()[j-1].
class LinkPattern {
 public:
  enum class Role { Loose, Source, Target };
  struct NodeRole {
    Role role = Role::Loose;
    int index = 0;  // arc label for sources/targets, rank among loose nodes otherwise
  };

  LinkPattern() = default;
  /// Throws BadRank if 2r > m, InvalidArgument for endpoints outside 1..m,
  /// DistinctnessError for repeated endpoints.
  LinkPattern(int m, std::vector<Arc> arcs);

  /// Strict parser for "m,r:a1>b1,a2>b2,..."; errors carry byte offsets.
  static LinkPattern parse(std::string_view text);
  std::string to_string() const;

  int m() const noexcept { return m_; }
  int r() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(int label) const { return arcs_.at(static_cast<std::size_t>(label - 1)); }

  NodeRole role(int node) const { return roles_.at(static_cast<std::size_t>(node - 1)); }
  std::vector<int> loose_nodes() const;

  /// Encoding that forgets labels: +t at a source with target t, -s at a target with source s, 0 if loose.
  std::vector<int> unlabelled_key() const;

  friend bool operator==(const LinkPattern& a, const LinkPattern& b) {
    return a.m_ == b.m_ && a.arcs_ == b.arcs_;
  }

 private:
  int m_ = 0;
  std::vector<Arc> arcs_;
  std::vector<NodeRole> roles_;
};

/// Arcs (m-r+i -> i), i = 1..r. Throws BadRank if 2r > m or r < 0.
LinkPattern minimal_pattern(int m, int r);

/// Relabels every endpoint e as w(e).
LinkPattern act_nodes(const Permutation& w, const LinkPattern& p);
/// Moves the arc labelled j to label sigma(j).
LinkPattern act_labels(const Permutation& sigma, const LinkPattern& p);

/// Node values: r h + mu_a at the target of arc a, (m-r+1) h - mu_a at its source,
/// (r+k) h at the k-th loose node from the left.
std::vector<LinearForm> node_values(const LinkPattern& p);

/// Type of the class of the minimal pattern:
/// sum_i (u + x_i - x_{m-r+i}) mu_i + sum_{j > m-r+i} (u + x_i - x_j) h.
QForm minimal_type(int m, int r);

/// Breadth-first orbit lattice of unlabelled patterns reachable from the minimal
/// pattern by adjacent transpositions that do not swap two loose nodes.
class OrbitLattice {
 public:
  OrbitLattice(int m, int r);

  int m() const noexcept { return m_; }
  int r() const noexcept { return r_; }
  std::size_t size() const noexcept { return distance_.size(); }

  /// Throws Unreachable for patterns of another shape or outside the orbit.
  int distance(const LinkPattern& p) const;
  bool swappable(const LinkPattern& p, int i) const;

  /// BFS-ordered representatives, each labelled as lexicographic_word * minimal pattern.
  const std::vector<LinkPattern>& representatives() const noexcept { return representatives_; }

 private:
  int m_;
  int r_;
  std::map<std::vector<int>, int> distance_;
  std::vector<LinkPattern> representatives_;
};

/// p = act_labels(sigma, act_nodes(w, minimal_pattern)), w = s_{word[0]} s_{word[1]} ...
struct Presentation {
  int m = 0;
  int r = 0;
  Permutation sigma;
  Permutation w;
  std::vector<int> word;
};

/// Minimal-length presentation with the lexicographically smallest word.
Presentation minimal_presentation(const LinkPattern& p);
Presentation minimal_presentation(const LinkPattern& p, const OrbitLattice& lattice);
/// Every minimal-length word (as a presentation), lexicographically ordered.
std::vector<Presentation> all_minimal_presentations(const LinkPattern& p, const OrbitLattice& lattice);

/// Characters nu_k consumed by the admissible composite along the word, in word order,
/// written in the labels of the minimal pattern.
std::vector<LinearForm> raw_nu_list(const Presentation& pres);
/// Same characters relabelled by sigma, i.e. in the labels of the pattern itself.
std::vector<LinearForm> nu_list(const Presentation& pres);

/// Boundary multiplicities alpha_k = 1 - c_h - sum_a c_a (1 - lambda_a) for nu_k = c_h h + sum_a c_a mu_a.
/// lambda[a-1] is the multiplicity attached to label a. Throws BadCharacterShape.
std::vector<Rational> multiplicities(const Presentation& pres, const std::vector<Rational>& lambda);

enum class MoveKind {
  TwoTargets,
  TwoSources,
  TargetSource,
  SourceTarget,
  ArcReversal,
  TargetLoose,
  LooseTarget,
  SourceLoose,
  LooseSource,
};

struct Move {
  MoveKind kind;
  LinearForm character;  // v(i) - v(i+1)
  bool increasing;       // the transposition lengthens the minimal word
};

/// Character predicted from node values for transposing nodes i and i+1.
/// Throws LooseLoose when both nodes are loose.
Move six_move_mu(const LinkPattern& p, int i);
Move six_move_mu(const LinkPattern& p, int i, const OrbitLattice& lattice);

struct Extension {
  LinkPattern pattern;             // size 2(m-r), rank m-r
  std::vector<LinearForm> mu_new;  // mu_new[j-1] = mu'_j in terms of the original labels
  Rational shift;                  // node values move by shift * h
};

/// Adds m-2r nodes with arcs to the loose nodes in order. Throws AlreadySquare if m = 2r.
Extension extend_pattern(const LinkPattern& p);

}  // namespace ellclass
