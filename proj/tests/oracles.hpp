// Brute-force reference implementations used only by tests. Each oracle is
// deliberately independent of the library's computation path: subword
// characterizations, exhaustive scans, and direct path enumeration.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/weyl.hpp"

namespace alcove::oracle {

// Bruhat order via the subword property: x <= y iff some reduced word of y
// contains a subword multiplying to x. One reduced word suffices.
inline bool subword_leq(const WeylElement& x, const WeylElement& y) {
  const std::vector<int>& w = y.word;
  size_t n = w.size();
  if (x.len > y.len) return false;
  for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (static_cast<size_t>(1) << i)) sub.push_back(w[i]);
    if (static_cast<i64>(sub.size()) != x.len) continue;
    if (weyl_from_word(*x.rd, sub) == x) return true;
  }
  return false;
}

// Minimal-length element of w W_J or W_J w by exhaustive scan over W_J.
inline WeylElement scan_coset_min(const WeylGroup& W, const WeylElement& w, const std::set<int>& J,
                                  Side side) {
  std::vector<WeylElement> gens;
  for (int j : J) gens.push_back(weyl_simple(*w.rd, j));
  std::vector<WeylElement> WJ =
      gens.empty() ? std::vector<WeylElement>{weyl_identity(*w.rd)} : subgroup_closure(gens, W.size() + 1);
  WeylElement best = w;
  for (const WeylElement& v : WJ) {
    WeylElement c = (side == Side::Left) ? compose(v, w) : compose(w, v);
    if (word_less(c, best)) best = c;
  }
  return best;
}

// Affine Bruhat order via the subword property on the canonical word,
// with the length-zero residual multiplied back on the right.
inline bool aff_subword_leq(const AffineElement& x, const AffineElement& y) {
  if (x.len > y.len) return false;
  const std::vector<int>& w = y.word;
  size_t n = w.size();
  AffineElement ytau = tau_part(y);
  for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (static_cast<size_t>(1) << i)) sub.push_back(w[i]);
    if (static_cast<i64>(sub.size()) != x.len) continue;
    if (compose(aff_from_word(*x.rd, sub), ytau) == x) return true;
  }
  return false;
}

// All elements <= y, as subword products of y's canonical word.
inline std::vector<AffineElement> aff_lower_set(const AffineElement& y) {
  const std::vector<int>& w = y.word;
  size_t n = w.size();
  AffineElement ytau = tau_part(y);
  std::vector<AffineElement> out;
  for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (static_cast<size_t>(1) << i)) sub.push_back(w[i]);
    out.push_back(compose(aff_from_word(*y.rd, sub), ytau));
  }
  std::sort(out.begin(), out.end(), aff_word_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Monoid product as the unique Bruhat maximum of {u x : x <= v}.
inline AffineElement scan_demazure(const AffineElement& u, const AffineElement& v) {
  std::vector<AffineElement> prods;
  for (const AffineElement& x : aff_lower_set(v)) prods.push_back(compose(u, x));
  std::vector<AffineElement> maxima;
  for (const AffineElement& p : prods) {
    bool dominated = false;
    for (const AffineElement& q : prods)
      if (p != q && aff_leq(p, q)) dominated = true;
    if (!dominated) maxima.push_back(p);
  }
  std::sort(maxima.begin(), maxima.end(), aff_word_less);
  maxima.erase(std::unique(maxima.begin(), maxima.end()), maxima.end());
  if (maxima.size() != 1) fail(Err::NotUnique, "monoid product scan");
  return maxima.front();
}

// Unique Bruhat maximum of a set of group indices; fails if the maximal
// elements are not a singleton.
inline int unique_max_index(const WeylGroup& W, const std::vector<int>& S) {
  std::vector<int> maxima;
  for (int x : S) {
    bool maximal = true;
    for (int y : S)
      if (y != x && W.leq(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) maxima.push_back(x);
  }
  if (maxima.size() != 1) fail(Err::NotUnique, "no unique maximum");
  return maxima.front();
}

// max { x' y' : x' <= x, y' <= y } by scanning all pairs.
inline WeylElement scan_finite_demazure(const WeylGroup& W, const WeylElement& x,
                                        const WeylElement& y) {
  int xi = W.index_of(x), yi = W.index_of(y);
  std::vector<int> prods;
  for (int a = 0; a < W.size(); ++a) {
    if (!W.leq(a, xi)) continue;
    for (int b = 0; b < W.size(); ++b)
      if (W.leq(b, yi)) prods.push_back(W.mult(a, b));
  }
  std::sort(prods.begin(), prods.end());
  prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
  return W.at(unique_max_index(W, prods));
}

// All total weights of directed paths from u to v of exactly `steps` edges.
template <typename Graph>
inline void walk_weights(const Graph& g, int cur, int v, int steps, const IVec& acc,
                         std::set<IVec>& out) {
  if (steps == 0) {
    if (cur == v) out.insert(acc);
    return;
  }
  for (const auto& e : g.edges_from(cur)) {
    if (g.distance(e.to, v) > steps - 1) continue;
    walk_weights(g, e.to, v, steps - 1, vadd(acc, e.weight), out);
  }
}

template <typename Graph>
inline std::set<IVec> shortest_path_weights(const Graph& g, int u, int v) {
  std::set<IVec> out;
  IVec zero(g.group().at(0).rd->dim(), 0);
  walk_weights(g, u, v, g.distance(u, v), zero, out);
  return out;
}

// Shortest length of a directed walk from u to v found without any distance
// pruning, capped by `bound`.
template <typename Graph>
inline int brute_distance(const Graph& g, int u, int v, int bound) {
  std::vector<int> frontier{u};
  for (int d = 0; d <= bound; ++d) {
    for (int x : frontier)
      if (x == v) return d;
    std::set<int> next;
    for (int x : frontier)
      for (const auto& e : g.edges_from(x)) next.insert(e.to);
    frontier.assign(next.begin(), next.end());
  }
  return -1;
}

}  // namespace alcove::oracle
