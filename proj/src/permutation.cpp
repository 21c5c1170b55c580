#include "ellclass/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ellclass/errors.hpp"

namespace ellclass {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) {
      throw Error(ErrorKind::InvalidArgument, "permutation images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::simple(int i) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "simple reflection index must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(i + 1));
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[i - 1], img[i]);
  return Permutation(std::move(img));
}

Permutation Permutation::from_word(const std::vector<int>& word, int n) {
  Permutation w = identity(n);
  for (int i : word) w = w * simple(i);
  return w.resized(std::max(n, w.size()));
}

Permutation Permutation::resized(int n) const {
  int keep = size();
  while (keep > n && images_[keep - 1] == keep) --keep;
  if (keep > n) throw Error(ErrorKind::InvalidArgument, "permutation moves an index above the target size");
  std::vector<int> img(images_.begin(), images_.begin() + keep);
  for (int j = keep + 1; j <= n; ++j) img.push_back(j);
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int j = 1; j <= size(); ++j) img[images_[j - 1] - 1] = j;
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= size(); ++j) {
    if (images_[j - 1] != j) return false;
  }
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (images_[i] > images_[j]) ++inv;
    }
  }
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // Sorting one-line notation by adjacent swaps: w s_{i1} ... s_{ik} = id gives
  // w = s_{ik} ... s_{i1}.
  std::vector<int> a = images_;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(i + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int j = 0; j < size(); ++j) {
    if (j > 0 && size() > 9) out += ',';
    out += std::to_string(images_[j]);
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  const int n = std::max(a.size(), b.size());
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) img[j - 1] = a(b(j));
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

bool operator==(const Permutation& a, const Permutation& b) {
  const int n = std::max(a.size(), b.size());
  for (int j = 1; j <= n; ++j) {
    if (a(j) != b(j)) return false;
  }
  return true;
}

bool operator<(const Permutation& a, const Permutation& b) {
  const int n = std::max(a.size(), b.size());
  for (int j = 1; j <= n; ++j) {
    if (a(j) != b(j)) return a(j) < b(j);
  }
  return false;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w, int n) {
  // u <= w iff for every k the sorted prefix u(1..k) is entrywise <= that of w.
  for (int k = 1; k <= n; ++k) {
    std::vector<int> pu, pw;
    for (int j = 1; j <= k; ++j) {
      pu.push_back(u(j));
      pw.push_back(w(j));
    }
    std::sort(pu.begin(), pu.end());
    std::sort(pw.begin(), pw.end());
    for (int j = 0; j < k; ++j) {
      if (pu[j] > pw[j]) return false;
    }
  }
  return true;
}

}  // namespace ellclass
