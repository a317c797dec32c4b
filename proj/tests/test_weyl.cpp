#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "alcove/root_datum.hpp"
#include "alcove/weyl.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

RootDatum make(Family f, int n, LatticeKind k = LatticeKind::Adjoint) {
  return RootDatum(CartanSpec{f, n}, LatticeSpec{k, {}});
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(WeylGroup(make(Family::A, 1)).size() == 2);
  CHECK(WeylGroup(make(Family::A, 3)).size() == 24);
  CHECK(WeylGroup(make(Family::B, 3)).size() == 48);
  CHECK(WeylGroup(make(Family::C, 2)).size() == 8);
  CHECK(WeylGroup(make(Family::D, 4)).size() == 192);
  CHECK(WeylGroup(make(Family::G, 2)).size() == 12);
  CHECK(WeylGroup(make(Family::F, 4)).size() == 1152);
}

TEST_CASE("canonical words are reduced and lex minimal") {
  RootDatum rd = make(Family::C, 2);
  WeylGroup W(rd);
  for (int x = 0; x < W.size(); ++x) {
    const WeylElement& w = W.at(x);
    CHECK(static_cast<i64>(w.word.size()) == w.len);
    CHECK(weyl_from_word(rd, w.word) == w);
  }
  // longest element of C2 prints as the lex smallest of its reduced words
  CHECK(word_string(W.at(W.longest_index()).word) == "1212");
  // A2 longest element: 121 beats 212
  WeylGroup WA(make(Family::A, 2));
  CHECK(word_string(WA.at(WA.longest_index()).word) == "121");
}

TEST_CASE("composition lengths and inverses") {
  RootDatum rd = make(Family::G, 2);
  WeylGroup W(rd);
  CHECK(W.at(W.longest_index()).len == 6);
  for (int x = 0; x < W.size(); ++x) {
    const WeylElement& w = W.at(x);
    CHECK(compose(w, inverse(w)).is_identity());
    CHECK(inverse(w).len == w.len);
    CHECK(W.length(W.inverse(x)) == W.length(x));
  }
}

TEST_CASE("descents match length change") {
  RootDatum rd = make(Family::B, 2);
  WeylGroup W(rd);
  for (int x = 0; x < W.size(); ++x) {
    const WeylElement& w = W.at(x);
    for (int i = 1; i <= rd.rank(); ++i) {
      CHECK(is_descent(w, i, Side::Right) == (W.length(W.mult_right(x, i)) < w.len));
      CHECK(is_descent(w, i, Side::Left) == (W.length(W.mult_left(x, i)) < w.len));
    }
  }
}

TEST_CASE("reflection through a positive root") {
  RootDatum rd = make(Family::C, 2);
  WeylGroup W(rd);
  for (const IVec& a : rd.positive_roots()) {
    WeylElement s = weyl_reflection(rd, Root{&rd, a});
    CHECK(compose(s, s).is_identity());
    CHECK(s.rmat.apply(a) == vneg(a));
    CHECK(W.index_of(s) >= 0);  // lands in the enumerated group
  }
  // s_theta in A2 equals s1 s2 s1
  RootDatum ra = make(Family::A, 2);
  CHECK(weyl_reflection(ra, ra.theta()) == weyl_from_word(ra, {1, 2, 1}));
}

TEST_CASE("bruhat order agrees with the subword oracle") {
  for (Family f : {Family::A, Family::B}) {
    RootDatum rd = make(f, 2);
    WeylGroup W(rd);
    for (int x = 0; x < W.size(); ++x)
      for (int y = 0; y < W.size(); ++y) {
        bool got = bruhat_leq(W.at(x), W.at(y));
        bool want = oracle::subword_leq(W.at(x), W.at(y));
        CHECK(got == want);
        CHECK(W.leq(x, y) == want);
      }
  }
}

TEST_CASE("bruhat order spot checks in G2") {
  RootDatum rd = make(Family::G, 2);
  WeylGroup W(rd);
  WeylElement w0 = W.at(W.longest_index());
  for (int x = 0; x < W.size(); ++x) {
    CHECK(bruhat_leq(W.at(x), w0));
    CHECK(bruhat_leq(weyl_identity(rd), W.at(x)));
  }
  CHECK_FALSE(bruhat_leq(weyl_from_word(rd, {1}), weyl_from_word(rd, {2})));
  CHECK(bruhat_leq(weyl_from_word(rd, {1}), weyl_from_word(rd, {2, 1, 2})));
}

TEST_CASE("coset minima and maxima") {
  RootDatum rd = make(Family::A, 2);
  WeylGroup W(rd);
  // min of W_{1} * (s1 s2) on the left strips the leading s1
  CHECK(coset_min(weyl_from_word(rd, {1, 2}), {1}, Side::Left) == weyl_from_word(rd, {2}));
  // right min of w0 by W_{1}: w0 = s1s2s1 = s2s1 * s1... the right coset rep is s1s2
  WeylElement w0 = W.at(W.longest_index());
  CHECK(coset_min(w0, {1}, Side::Right) == weyl_from_word(rd, {1, 2}));
  CHECK(coset_max(weyl_identity(rd), {1, 2}, Side::Right) == w0);
  CHECK(longest_element(rd, {1}) == weyl_from_word(rd, {1}));

  // exhaustive agreement with the scan oracle over B2, both sides, all J
  RootDatum rb = make(Family::B, 2);
  WeylGroup WB(rb);
  const std::set<int> subsets[] = {{}, {1}, {2}, {1, 2}};
  for (const auto& J : subsets)
    for (int x = 0; x < WB.size(); ++x)
      for (Side s : {Side::Left, Side::Right})
        CHECK(coset_min(WB.at(x), J, s) == oracle::scan_coset_min(WB, WB.at(x), J, s));
}

TEST_CASE("minimal coset representatives are minima of their cosets") {
  RootDatum rd = make(Family::C, 2);
  WeylGroup W(rd);
  for (int x = 0; x < W.size(); ++x) {
    WeylElement m = coset_min(W.at(x), {2}, Side::Right);
    // every element of m W_{2} dominates m in Bruhat order
    CHECK(bruhat_leq(m, W.at(x)));
    CHECK_FALSE(is_descent(m, 2, Side::Right));
  }
}

TEST_CASE("support and subgroup closure") {
  RootDatum rd = make(Family::A, 3);
  CHECK(support(weyl_from_word(rd, {1, 3})) == std::set<int>{1, 3});
  CHECK(support(weyl_identity(rd)).empty());
  std::vector<WeylElement> gens{weyl_simple(rd, 1), weyl_simple(rd, 3)};
  CHECK(subgroup_closure(gens, 25).size() == 4);
  CHECK_THROWS_AS(subgroup_closure(gens, 3), Error);
}

TEST_CASE("double coset representatives") {
  // C2 with the hyperspecial-transport group <s_theta, s2> on the left.
  // s_theta = s1 s2 s1 (theta = 2a1+a2), giving the full sign-change group of order 4.
  RootDatum rd = make(Family::C, 2);
  WeylGroup W(rd);
  std::vector<WeylElement> pr_gens{weyl_reflection(rd, rd.theta()), weyl_simple(rd, 2)};
  CHECK(subgroup_closure(pr_gens, 9).size() == 4);
  CHECK(double_coset_reps(W, pr_gens, {1}).size() == 1);
  auto reps = double_coset_reps(W, pr_gens, {2});
  CHECK(reps.size() == 2);
  CHECK(reps[0].is_identity());
  CHECK(reps[1] == weyl_simple(rd, 1));

  // trivial gens on both sides recover the whole group, ordered by (length, word)
  std::vector<WeylElement> triv{weyl_identity(rd)};
  auto all = double_coset_reps(W, triv, {});
  CHECK(static_cast<int>(all.size()) == W.size());
  CHECK(all.front().is_identity());
}
