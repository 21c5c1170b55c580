#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"

#include "ellclass/errors.hpp"
#include "ellclass/permutation.hpp"

using namespace ellclass;

namespace {

int inversions(const std::vector<int>& v) {
  int c = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j];
  return c;
}

// u <= w iff u is a product of a subword of a reduced word of w.
bool bruhat_by_subwords(const Permutation& u, const Permutation& w, int n) {
  const std::vector<int> word = w.reduced_word();
  const std::size_t len = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < len; ++k)
      if (mask & (std::size_t{1} << k)) sub.push_back(word[k]);
    if (Permutation::from_word(sub, n) == u) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
  CHECK_THROWS_AS(Permutation({1, 3}), Error);
  CHECK(Permutation({2, 1})(5) == 5);
}

TEST_CASE("all_permutations enumerates S_n in lexicographic order") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::size_t k = 0;
    do {
      REQUIRE(k < perms.size());
      CHECK(perms[k].images() == v);
      ++k;
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(k == perms.size());
  }
}

TEST_CASE("length, reduced words and inverses") {
  for (const Permutation& w : all_permutations(5)) {
    CHECK(w.length() == inversions(w.images()));
    const auto word = w.reduced_word();
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(Permutation::from_word(word, 5) == w);
    CHECK((w * w.inverse()).is_identity());
    CHECK(w.inverse().length() == w.length());
  }
}

TEST_CASE("composition applies the right factor first") {
  const Permutation a({2, 3, 1}), b({2, 1, 3});
  const Permutation ab = a * b;
  for (int j = 1; j <= 3; ++j) CHECK(ab(j) == a(b(j)));
  CHECK(Permutation::from_word({1, 2}, 3) == Permutation::simple(1) * Permutation::simple(2));
  CHECK(Permutation::from_word({1, 2}, 3)(3) == 1);
}

TEST_CASE("permutations of different sizes compare as maps") {
  CHECK(Permutation({2, 1}) == Permutation({2, 1, 3}));
  CHECK(Permutation::identity(4) == Permutation());
  CHECK(Permutation({2, 1, 3}).resized(2).size() == 2);
  CHECK(Permutation({3, 1, 2}).to_string() == "312");
}

TEST_CASE("tableau Bruhat criterion agrees with the subword property") {
  for (int n = 2; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& u : perms) {
      for (const auto& w : perms) CHECK(bruhat_leq(u, w, n) == bruhat_by_subwords(u, w, n));
    }
  }
}
