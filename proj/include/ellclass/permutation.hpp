#pragma once

#include <string>
#include <vector>

namespace ellclass {

/// Bijection of {1..n}; acts as the identity on indices above n, so permutations
/// of different sizes compose as elements of the infinite symmetric group.
class Permutation {
 public:
  Permutation() = default;
  /// images[k] is the image of k+1. Throws InvalidArgument unless bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The simple reflection swapping i and i+1.
  static Permutation simple(int i);
  /// s_{word[0]} s_{word[1]} ... (rightmost factor acts first), sized at least n.
  static Permutation from_word(const std::vector<int>& word, int n = 0);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int j) const noexcept {
    return (j >= 1 && j <= size()) ? images_[j - 1] : j;
  }
  const std::vector<int>& images() const noexcept { return images_; }

  /// Same permutation padded (or trimmed of trailing fixed points) to size n.
  Permutation resized(int n) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Number of inversions.
  int length() const;
  /// A reduced word (bubble-sort order); from_word(reduced_word()) == *this.
  std::vector<int> reduced_word() const;

  /// One-line notation "312".
  std::string to_string() const;

  /// (a * b)(j) = a(b(j)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  /// Equality as maps on all positive integers.
  friend bool operator==(const Permutation& a, const Permutation& b);
  friend bool operator<(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> images_;
};

/// Every permutation of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// u <= w in the Bruhat order of S_n (tableau criterion).
bool bruhat_leq(const Permutation& u, const Permutation& w, int n);

}  // namespace ellclass
