#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "alcove/admissible.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

RootDatum make(Family f, int n, LatticeKind k = LatticeKind::Adjoint) {
  return RootDatum(CartanSpec{f, n}, LatticeSpec{k, {}});
}

RootDatum gl3() { return RootDatum(CartanSpec{Family::A, 2}, LatticeSpec{LatticeKind::GL, {}}); }

std::vector<std::string> words_of(const std::vector<AffineElement>& S) {
  std::vector<std::string> out;
  for (const AffineElement& w : S) out.push_back(aff_to_string(w));
  return out;
}

// Independent description of the admissible set: the union of the subword
// lower sets of the extreme translations.
std::vector<AffineElement> lower_union_oracle(const AdmissibleSet& A) {
  std::vector<AffineElement> all;
  for (const AffineElement& t : A.maxima) {
    std::vector<AffineElement> part = oracle::aff_lower_set(t);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), aff_word_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

TEST_CASE("dominance helpers") {
  RootDatum rd = gl3();
  CHECK(dominant_representative(rd, {0, 2, 1}) == IVec{2, 1, 0});
  CHECK(dominant_representative(rd, {-1, 3, -1}) == IVec{3, -1, -1});
  CHECK(dual_dominant(rd, {1, 0, 0}) == IVec{0, 0, -1});
  CHECK(weyl_orbit(rd, {1, 0, 0}).size() == 3);
  CHECK(weyl_orbit(rd, {2, 1, 0}).size() == 6);
  CHECK(weyl_orbit(rd, {1, 1, 1}).size() == 1);

  RootDatum c2 = make(Family::C, 2);
  // the longest element acts by -1, so duality fixes dominants
  CHECK(dual_dominant(c2, {1, 2}) == IVec{1, 2});
  for (const IVec& v : weyl_orbit(c2, {1, 2})) {
    IVec rep = dominant_representative(c2, v);
    CHECK(rep == IVec{1, 2});
    CHECK(c2.is_dominant(rep));
  }
  CHECK(weyl_orbit(c2, {1, 2}).size() == 4);
  CHECK(weyl_orbit(c2, {1, 1}).size() == 4);
}

TEST_CASE("dominant coweights below a dominant coweight") {
  CHECK(dominant_below(gl3(), {2, 1, 0}) ==
        std::vector<IVec>{IVec{1, 1, 1}, IVec{2, 1, 0}});
  CHECK(dominant_below(gl3(), {1, 0, 0}) == std::vector<IVec>{IVec{1, 0, 0}});
  CHECK(dominant_below(make(Family::C, 2), {1, 2}) ==
        std::vector<IVec>{IVec{0, 0}, IVec{1, 1}, IVec{1, 2}});
  CHECK(dominant_below(make(Family::C, 2), {1, 1}) ==
        std::vector<IVec>{IVec{0, 0}, IVec{1, 1}});
  CHECK(dominant_below(make(Family::G, 2), {1, 2}) ==
        std::vector<IVec>{IVec{0, 0}, IVec{1, 2}});
  CHECK(dominant_below(make(Family::A, 1), {2}) ==
        std::vector<IVec>{IVec{0}, IVec{1}, IVec{2}});
  CHECK_THROWS_AS(dominant_below(make(Family::A, 2), {-1, 0}), Error);
}

TEST_CASE("rank one admissible sets match frozen data") {
  RootDatum rd = make(Family::A, 1);
  AdmissibleSet A = admissible_set(rd, {1});
  CHECK(A.elements.size() == 5);
  CHECK(words_of(A.elements) == std::vector<std::string>{"e", "0", "1", "01", "10"});
  CHECK(words_of(A.maxima) == std::vector<std::string>{"01", "10"});
  CHECK(A.contains(aff_simple(rd, 0)));
  CHECK(!A.contains(aff_translation(rd, {2})));

  AdmissibleSet B = admissible_set(rd, {2});
  CHECK(B.elements.size() == 9);
  CHECK(B.contains(aff_translation(rd, {1})));
  CHECK(B.contains(aff_translation(rd, {-2})));

  CHECK_THROWS_AS(admissible_set(rd, {-1}), Error);
}

TEST_CASE("minuscule gl(3) admissible set") {
  RootDatum rd = gl3();
  AdmissibleSet A = admissible_set(rd, {1, 0, 0});
  CHECK(A.elements.size() == 7);
  CHECK(A.maxima.size() == 3);
  for (const AffineElement& t : A.maxima) CHECK(t.len == 2);
  // one length zero class representative and three reflections of it
  int by_len[3] = {0, 0, 0};
  for (const AffineElement& w : A.elements) ++by_len[w.len];
  CHECK(by_len[0] == 1);
  CHECK(by_len[1] == 3);
  CHECK(by_len[2] == 3);
  for (const AffineElement& w : A.elements) CHECK(w.tau_lambda == IVec{1, 0, 0});
}

TEST_CASE("admissible set equals the union of subword lower sets of its maxima") {
  auto run = [](const RootDatum& rd, const IVec& mu) {
    AdmissibleSet A = admissible_set(rd, mu);
    CHECK(A.elements == lower_union_oracle(A));
  };
  run(make(Family::A, 1), {1});
  run(make(Family::A, 1), {2});
  run(make(Family::A, 2), {1, 1});
  run(make(Family::C, 2), {1, 1});
  run(make(Family::C, 2), {1, 2});
  run(make(Family::G, 2), {1, 2});
  run(gl3(), {1, 0, 0});
  run(gl3(), {2, 1, 0});
}

TEST_CASE("strata partition the admissible set by translation orbit") {
  auto run = [](const RootDatum& rd, const IVec& mu) {
    AdmissibleSet A = admissible_set(rd, mu);
    size_t total = 0;
    for (const IVec& lam : dominant_below(rd, mu)) total += stratum(A, lam).size();
    CHECK(total == A.elements.size());
  };
  run(make(Family::A, 1), {2});
  run(make(Family::C, 2), {1, 2});
  run(make(Family::G, 2), {1, 2});
  run(gl3(), {2, 1, 0});

  RootDatum rd = make(Family::A, 1);
  AdmissibleSet A = admissible_set(rd, {1});
  CHECK(words_of(stratum(A, {1})) == std::vector<std::string>{"0", "01", "10"});
  CHECK(words_of(stratum(A, {0})) == std::vector<std::string>{"e", "1"});
  CHECK_THROWS_AS(stratum(A, {-1}), Error);
}

TEST_CASE("two sided saturation has the same minimal representatives") {
  auto run = [](const RootDatum& rd, const IVec& mu, const std::set<int>& K) {
    AdmissibleSet A = admissible_set(rd, mu);
    std::vector<AffineElement> AK = admissible_K(A, K);
    // saturation only grows the set
    for (const AffineElement& w : A.elements)
      CHECK(std::binary_search(AK.begin(), AK.end(), w, aff_word_less));
    CHECK(min_in_coset_filter(AK, K, Side::Right) ==
          min_in_coset_filter(A.elements, K, Side::Right));
    CHECK(min_in_coset_filter(AK, K, Side::Left) ==
          min_in_coset_filter(A.elements, K, Side::Left));
  };
  run(make(Family::A, 1), {1}, {0});
  run(make(Family::A, 1), {1}, {1});
  run(make(Family::A, 1), {2}, {1});
  run(make(Family::A, 2), {1, 1}, {1});
  run(make(Family::A, 2), {1, 1}, {0, 2});
  run(make(Family::A, 2), {1, 1}, {1, 2});
  run(make(Family::C, 2), {1, 1}, {2});
  run(make(Family::C, 2), {1, 1}, {0, 2});
  run(make(Family::C, 2), {1, 2}, {0, 1});
  run(gl3(), {1, 0, 0}, {1, 2});
}

TEST_CASE("extreme translations with nonpositive K pairings are the K minimal maxima") {
  auto run = [](const RootDatum& rd, const IVec& mu, const std::set<int>& K) {
    AdmissibleSet A = admissible_set(rd, mu);
    std::vector<AffineElement> expected =
        bruhat_maxima(min_in_coset_filter(A.elements, K, Side::Right));
    std::vector<AffineElement> got = max_translations_K(A, K);
    CHECK(got == expected);
    for (const AffineElement& t : got) CHECK(is_min_in_coset(t, K, Side::Right));
  };
  for (const std::set<int>& K :
       {std::set<int>{}, std::set<int>{0}, std::set<int>{1}}) {
    run(make(Family::A, 1), {1}, K);
    run(make(Family::A, 1), {2}, K);
  }
  for (const std::set<int>& K :
       {std::set<int>{}, std::set<int>{1}, std::set<int>{2}, std::set<int>{0, 1},
        std::set<int>{0, 2}, std::set<int>{1, 2}}) {
    run(make(Family::A, 2), {1, 1}, K);
    run(make(Family::C, 2), {1, 1}, K);
    run(make(Family::C, 2), {1, 2}, K);
    run(gl3(), {1, 0, 0}, K);
  }
}

TEST_CASE("bruhat maxima of a lower set are its generators") {
  RootDatum rd = make(Family::C, 2);
  AdmissibleSet A = admissible_set(rd, {1, 1});
  CHECK(bruhat_maxima(A.elements) == A.maxima);
  RootDatum g = gl3();
  AdmissibleSet B = admissible_set(g, {1, 0, 0});
  CHECK(bruhat_maxima(B.elements) == B.maxima);
}
