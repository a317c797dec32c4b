#include "alcove/qbg.hpp"

#include <algorithm>
#include <deque>

namespace alcove {

QBG::QBG(const WeylGroup& W) : W_(&W) {
  const RootDatum& rd = *W.at(0).rd;
  int n = W.size();
  out_.resize(n);
  IVec zero(rd.dim(), 0);
  for (const IVec& alpha : rd.positive_roots()) {
    int r = W.index_of(weyl_reflection(rd, Root{&rd, alpha}));
    IVec acor = rd.coroot_coords_of(alpha);
    i64 depth = rd.pair(acor, rd.two_rho());
    for (int x = 0; x < n; ++x) {
      int y = W.mult(x, r);
      i64 dl = W.length(y) - W.length(x);
      if (dl == 1) {
        edges_.push_back(QBGEdge{x, y, alpha, false, zero});
      } else if (dl == 1 - depth) {
        edges_.push_back(QBGEdge{x, y, alpha, true, acor});
      }
    }
  }
  for (const QBGEdge& e : edges_) out_[e.from].push_back(e);

  dist_.assign(n, std::vector<int>(n, -1));
  wt_.assign(n, std::vector<IVec>(n));
  for (int u = 0; u < n; ++u) {
    dist_[u][u] = 0;
    wt_[u][u] = zero;
    std::deque<int> queue{u};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const QBGEdge& e : out_[v]) {
        IVec cand = vadd(wt_[u][v], e.weight);
        if (dist_[u][e.to] < 0) {
          dist_[u][e.to] = dist_[u][v] + 1;
          wt_[u][e.to] = cand;
          queue.push_back(e.to);
        } else if (dist_[u][e.to] == dist_[u][v] + 1 && wt_[u][e.to] != cand) {
          fail(Err::RouteDisagreement, "shortest paths with different weights");
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (dist_[u][v] < 0) fail(Err::InvalidSpec, "graph is not strongly connected");
  }
}

const IVec& QBG::weight(const WeylElement& u, const WeylElement& v) const {
  return weight(W_->index_of(u), W_->index_of(v));
}

WeylElement demazure(const WeylElement& u, const WeylElement& v) {
  u.rd->check_same(v.rd, "demazure");
  WeylElement r = u;
  for (int i : v.word) {
    WeylElement t = compose(r, weyl_simple(*u.rd, i));
    if (t.len > r.len) r = std::move(t);
  }
  return r;
}

std::vector<IVec> greedy_decomposition(const RootDatum& rd, const IVec& gamma) {
  std::optional<FracVec> fc = rd.coroot_coords(gamma);
  if (!fc) fail(Err::NotNonnegative, "gamma escapes the coroot span");
  for (const Frac& f : *fc)
    if (f.den != 1 || f.num < 0)
      fail(Err::NotNonnegative, "gamma is not a nonnegative integral coroot sum");
  std::vector<IVec> peel;
  IVec residual = gamma;
  while (!vzero(residual)) {
    std::vector<std::pair<IVec, IVec>> cand;  // (root coords, coroot X-coords)
    for (const IVec& alpha : rd.positive_roots()) {
      IVec acor = rd.coroot_coords_of(alpha);
      if (rd.dominance_leq(acor, residual)) cand.emplace_back(alpha, acor);
    }
    // peel the dominance-largest ROOT whose coroot fits, smallest coords on ties
    auto root_leq = [](const IVec& a, const IVec& b) {
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
      return true;
    };
    const std::pair<IVec, IVec>* best = nullptr;
    for (const auto& c : cand) {
      bool dominated = false;
      for (const auto& d : cand)
        if (d.first != c.first && root_leq(c.first, d.first)) {
          dominated = true;
          break;
        }
      if (!dominated && (!best || c.first < best->first)) best = &c;
    }
    if (!best) fail(Err::NotNonnegative, "no positive coroot fits under the residual");
    peel.push_back(best->first);
    residual = vsub(residual, best->second);
  }
  return peel;
}

WeylElement z_gamma(const WeylGroup& W, const IVec& gamma) {
  const RootDatum& rd = *W.at(0).rd;
  std::vector<IVec> peel = greedy_decomposition(rd, gamma);
  WeylElement z = weyl_identity(rd);
  for (auto it = peel.rbegin(); it != peel.rend(); ++it)
    z = demazure(z, weyl_reflection(rd, Root{&rd, *it}));
  return z;
}

std::vector<std::pair<int, int>> qbg_stratum_pairs(const QBG& qbg, const IVec& mu,
                                                   const IVec& lam) {
  const WeylGroup& W = qbg.group();
  const RootDatum& rd = *W.at(0).rd;
  if (!rd.is_dominant(lam)) fail(Err::NotDominant, "qbg_stratum_pairs: lam must be dominant");
  std::set<int> I;
  for (int i = 1; i <= rd.rank(); ++i)
    if (rd.pair(lam, rd.simple_root(i).alpha) == 0) I.insert(i);
  IVec gap = vsub(mu, lam);
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < W.size(); ++y) {
    bool minimal = true;
    for (int i : I)
      if (W.length(W.mult_left(y, i)) < W.length(y)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    int yinv = W.inverse(y);
    for (int x = 0; x < W.size(); ++x)
      if (rd.dominance_leq(qbg.weight(x, yinv), gap)) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace alcove
