#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "alcove/admissible.hpp"
#include "alcove/qbg.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

RootDatum make(Family f, int n, LatticeKind k = LatticeKind::Adjoint) {
  return RootDatum(CartanSpec{f, n}, LatticeSpec{k, {}});
}

// All gamma in the nonnegative box with simple-coroot coordinates <= bound.
std::vector<IVec> coroot_box(const RootDatum& rd, i64 bound) {
  std::vector<IVec> out;
  IVec c(rd.rank(), 0);
  for (;;) {
    IVec g(rd.dim(), 0);
    for (int i = 0; i < rd.rank(); ++i)
      g = vadd(g, vscale(c[i], rd.simple_coroot(i + 1).x));
    out.push_back(g);
    int p = 0;
    while (p < rd.rank() && c[p] == bound) c[p++] = 0;
    if (p == rd.rank()) break;
    ++c[p];
  }
  return out;
}

WeylElement scan_z(const WeylGroup& W, const QBG& qbg, const IVec& gamma) {
  const RootDatum& rd = *W.at(0).rd;
  int e = W.index_of(weyl_identity(rd));
  std::vector<int> S;
  for (int x = 0; x < W.size(); ++x)
    if (rd.dominance_leq(qbg.weight(x, e), gamma)) S.push_back(x);
  return W.at(oracle::unique_max_index(W, S));
}

// Writes the lam-stratum of Adm(mu) in coordinates (x, y): w = t^{x(lam)} x y
// with y shortest in its W_{I(lam)} coset.
std::vector<std::pair<int, int>> pairs_from_stratum(const WeylGroup& W, const AdmissibleSet& A,
                                                    const IVec& lam) {
  const RootDatum& rd = *W.at(0).rd;
  std::set<int> I;
  for (int i = 1; i <= rd.rank(); ++i)
    if (rd.pair(lam, rd.simple_root(i).alpha) == 0) I.insert(i);
  std::vector<std::pair<int, int>> out;
  for (const AffineElement& w : stratum(A, lam)) {
    int x0 = -1;
    for (int x = 0; x < W.size(); ++x)
      if (apply(W.at(x), Coweight{&rd, lam}).x == w.lambda) {
        x0 = x;
        break;
      }
    REQUIRE(x0 >= 0);
    WeylElement yprime = compose(inverse(W.at(x0)), w.y);
    WeylElement y = coset_min(yprime, I, Side::Left);
    WeylElement x = compose(w.y, inverse(y));
    out.emplace_back(W.index_of(x), W.index_of(y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("edge census of the rank two graphs") {
  RootDatum rd = make(Family::A, 2);
  WeylGroup W(rd);
  QBG qbg(W);
  int bruhat = 0, quantum = 0;
  for (const QBGEdge& e : qbg.edges()) (e.quantum ? quantum : bruhat)++;
  CHECK(bruhat == 8);
  CHECK(quantum == 7);
  // the only long quantum edge drops from the top to the identity
  int w0 = W.longest_index(), e0 = W.index_of(weyl_identity(rd));
  for (const QBGEdge& e : qbg.edges())
    if (e.quantum && e.alpha == rd.theta().alpha) {
      CHECK(e.from == w0);
      CHECK(e.to == e0);
      CHECK(e.weight == IVec{1, 1});
    }
  CHECK(qbg.weight(w0, e0) == IVec{1, 1});
  CHECK(qbg.distance(w0, e0) == 1);
  // every quantum edge along a simple root carries that simple coroot
  for (const QBGEdge& e : qbg.edges())
    if (e.quantum && !(e.alpha == rd.theta().alpha))
      CHECK(e.weight == rd.coroot_coords_of(e.alpha));
}

TEST_CASE("weights agree with direct path enumeration") {
  for (Family f : {Family::A, Family::C, Family::G}) {
    RootDatum rd = make(f, 2);
    WeylGroup W(rd);
    QBG qbg(W);
    for (int u = 0; u < W.size(); ++u)
      for (int v = 0; v < W.size(); ++v) {
        std::set<IVec> ws = oracle::shortest_path_weights(qbg, u, v);
        REQUIRE(ws.size() == 1);
        CHECK(*ws.begin() == qbg.weight(u, v));
      }
  }
}

TEST_CASE("distances agree with unpruned search") {
  RootDatum rd = make(Family::A, 2);
  WeylGroup W(rd);
  QBG qbg(W);
  for (int u = 0; u < W.size(); ++u)
    for (int v = 0; v < W.size(); ++v)
      CHECK(qbg.distance(u, v) == oracle::brute_distance(qbg, u, v, 10));
  RootDatum g2 = make(Family::G, 2);
  WeylGroup WG(g2);
  QBG qg(WG);
  std::mt19937 rng(3);
  for (int k = 0; k < 30; ++k) {
    int u = static_cast<int>(rng() % WG.size());
    int v = static_cast<int>(rng() % WG.size());
    CHECK(qg.distance(u, v) == oracle::brute_distance(qg, u, v, 12));
  }
}

TEST_CASE("zero weight characterizes the Bruhat order") {
  for (Family f : {Family::A, Family::C, Family::G}) {
    RootDatum rd = make(f, 2);
    WeylGroup W(rd);
    QBG qbg(W);
    for (int u = 0; u < W.size(); ++u)
      for (int v = 0; v < W.size(); ++v)
        CHECK(vzero(qbg.weight(u, v)) == W.leq(u, v));
  }
  RootDatum c3 = make(Family::C, 3);
  WeylGroup W(c3);
  QBG qbg(W);
  for (int u = 0; u < W.size(); ++u)
    for (int v = 0; v < W.size(); ++v)
      CHECK(vzero(qbg.weight(u, v)) == W.leq(u, v));
}

TEST_CASE("weight triangle inequality") {
  auto run = [](const RootDatum& rd, int samples) {
    WeylGroup W(rd);
    QBG qbg(W);
    if (samples == 0) {
      for (int u = 0; u < W.size(); ++u)
        for (int v = 0; v < W.size(); ++v)
          for (int w = 0; w < W.size(); ++w)
            CHECK(rd.dominance_leq(qbg.weight(u, w),
                                   vadd(qbg.weight(u, v), qbg.weight(v, w))));
      return;
    }
    std::mt19937 rng(17);
    for (int k = 0; k < samples; ++k) {
      int u = static_cast<int>(rng() % W.size());
      int v = static_cast<int>(rng() % W.size());
      int w = static_cast<int>(rng() % W.size());
      CHECK(rd.dominance_leq(qbg.weight(u, w), vadd(qbg.weight(u, v), qbg.weight(v, w))));
    }
  };
  run(make(Family::A, 2), 0);
  run(make(Family::C, 2), 0);
  run(make(Family::G, 2), 0);
  run(make(Family::A, 3), 500);
  run(make(Family::C, 3), 500);
}

TEST_CASE("weight recursion along a left descent of the target") {
  auto run = [](const RootDatum& rd, int samples) {
    WeylGroup W(rd);
    QBG qbg(W);
    std::mt19937 rng(23);
    int total = samples == 0 ? W.size() * W.size() : samples;
    for (int k = 0; k < total; ++k) {
      int x = samples == 0 ? k / W.size() : static_cast<int>(rng() % W.size());
      int v = samples == 0 ? k % W.size() : static_cast<int>(rng() % W.size());
      for (int i = 1; i <= rd.rank(); ++i) {
        int siv = W.mult_left(v, i);
        if (W.length(siv) > W.length(v)) continue;
        int six = W.mult_left(x, i);
        int xmin = W.length(six) < W.length(x) ? six : x;
        CHECK(qbg.weight(x, v) == qbg.weight(xmin, siv));
      }
    }
  };
  run(make(Family::A, 2), 0);
  run(make(Family::C, 2), 0);
  run(make(Family::G, 2), 0);
  run(make(Family::A, 3), 500);
  run(make(Family::C, 3), 500);
}

TEST_CASE("weight sublevel sets are lower sets") {
  for (Family f : {Family::A, Family::C, Family::G}) {
    RootDatum rd = make(f, 2);
    WeylGroup W(rd);
    QBG qbg(W);
    for (const IVec& gamma : coroot_box(rd, 2))
      for (int v = 0; v < W.size(); ++v)
        for (int x = 0; x < W.size(); ++x) {
          if (!rd.dominance_leq(qbg.weight(x, v), gamma)) continue;
          for (int xp = 0; xp < W.size(); ++xp)
            if (W.leq(xp, x)) CHECK(rd.dominance_leq(qbg.weight(xp, v), gamma));
        }
  }
}

TEST_CASE("finite demazure product matches the pair scan") {
  RootDatum rd = make(Family::C, 2);
  WeylGroup W(rd);
  for (int a = 0; a < W.size(); ++a)
    for (int b = 0; b < W.size(); ++b) {
      WeylElement d = demazure(W.at(a), W.at(b));
      CHECK(d == oracle::scan_finite_demazure(W, W.at(a), W.at(b)));
      CHECK(bruhat_leq(W.at(a), d));
      CHECK(bruhat_leq(W.at(b), d));
    }
  RootDatum g2 = make(Family::G, 2);
  WeylGroup WG(g2);
  std::mt19937 rng(5);
  for (int k = 0; k < 40; ++k) {
    int a = static_cast<int>(rng() % WG.size());
    int b = static_cast<int>(rng() % WG.size());
    CHECK(demazure(WG.at(a), WG.at(b)) == oracle::scan_finite_demazure(WG, WG.at(a), WG.at(b)));
  }
}

TEST_CASE("greedy peel of rank two coweights") {
  RootDatum rd = make(Family::A, 2);
  CHECK(greedy_decomposition(rd, {1, 2}) == std::vector<IVec>{IVec{1, 1}, IVec{0, 1}});
  CHECK(greedy_decomposition(rd, {1, 1}) == std::vector<IVec>{IVec{1, 1}});
  CHECK(greedy_decomposition(rd, {0, 0}).empty());
  CHECK_THROWS_AS(greedy_decomposition(rd, {-1, 0}), Error);

  RootDatum c2 = make(Family::C, 2);
  // the long root wins over the short root with the larger coroot
  CHECK(greedy_decomposition(c2, {1, 2}) == std::vector<IVec>{IVec{2, 1}, IVec{0, 1}});
  CHECK(greedy_decomposition(c2, {1, 1}) == std::vector<IVec>{IVec{2, 1}});

  RootDatum gl(CartanSpec{Family::A, 2}, LatticeSpec{LatticeKind::GL, {}});
  CHECK_THROWS_AS(greedy_decomposition(gl, {1, 0, 0}), Error);
  CHECK(greedy_decomposition(gl, {1, 0, -1}) == std::vector<IVec>{IVec{1, 1}});
}

TEST_CASE("extremal elements of sublevel sets") {
  RootDatum a2 = make(Family::A, 2);
  WeylGroup WA(a2);
  CHECK(z_gamma(WA, {1, 2}) == WA.at(WA.longest_index()));
  CHECK(z_gamma(WA, {1, 1}) == weyl_reflection(a2, a2.theta()));
  CHECK(z_gamma(WA, {0, 0}).is_identity());
  CHECK(z_gamma(WA, {1, 0}) == weyl_simple(a2, 1));
  CHECK(z_gamma(WA, {0, 1}) == weyl_simple(a2, 2));

  RootDatum c2 = make(Family::C, 2);
  WeylGroup WC(c2);
  CHECK(z_gamma(WC, {1, 2}) == WC.at(WC.longest_index()));
  CHECK(word_string(z_gamma(WC, {1, 2}).word) == "1212");

  // exhaustive against the unique-maximum scan
  for (Family f : {Family::A, Family::C, Family::G}) {
    RootDatum rd = make(f, 2);
    WeylGroup W(rd);
    QBG qbg(W);
    for (const IVec& gamma : coroot_box(rd, 3)) {
      WeylElement z = z_gamma(W, gamma);
      CHECK(z == scan_z(W, qbg, gamma));
      CHECK(inverse(z) == z);
    }
  }
  RootDatum a1 = make(Family::A, 1);
  WeylGroup W1(a1);
  QBG q1(W1);
  for (const IVec& gamma : coroot_box(a1, 3)) CHECK(z_gamma(W1, gamma) == scan_z(W1, q1, gamma));
}

TEST_CASE("strata computed in the finite group match the affine ones") {
  auto run = [](const RootDatum& rd, const IVec& mu) {
    WeylGroup W(rd);
    QBG qbg(W);
    AdmissibleSet A = admissible_set(rd, mu);
    for (const IVec& lam : dominant_below(rd, mu)) {
      auto got = qbg_stratum_pairs(qbg, mu, lam);
      auto expected = pairs_from_stratum(W, A, lam);
      CHECK(got == expected);
      CHECK(stratum(A, lam).size() == got.size());
    }
  };
  run(make(Family::A, 1), {1});
  run(make(Family::A, 1), {2});
  run(make(Family::A, 2), {1, 1});
  run(make(Family::C, 2), {1, 1});
  run(make(Family::C, 2), {1, 2});
  run(make(Family::G, 2), {1, 2});
  RootDatum gl(CartanSpec{Family::A, 2}, LatticeSpec{LatticeKind::GL, {}});
  run(gl, {1, 0, 0});
  run(gl, {2, 1, 0});

  // frozen rank one picture: lam = 0 leaves only y = e, and both x fit under mu
  RootDatum a1 = make(Family::A, 1);
  WeylGroup W1(a1);
  QBG q1(W1);
  auto pairs = qbg_stratum_pairs(q1, {1}, {0});
  int e0 = W1.index_of(weyl_identity(a1)), s1 = W1.index_of(weyl_simple(a1, 1));
  CHECK(pairs == std::vector<std::pair<int, int>>{{std::min(e0, s1), e0}, {std::max(e0, s1), e0}});
  CHECK_THROWS_AS(qbg_stratum_pairs(q1, {1}, {-1}), Error);
}
