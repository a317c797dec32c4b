// The quantum Bruhat graph on the finite Weyl group, its weight function,
// and the greedy construction of the extremal element z_gamma.
#pragma once

#include "alcove/weyl.hpp"

namespace alcove {

struct QBGEdge {
  int from = 0;  // WeylGroup indices
  int to = 0;
  IVec alpha;    // positive root, root coords
  bool quantum = false;
  IVec weight;   // coroot of alpha in X-coords if quantum, else zero
};

// Directed graph on W with edges w -> w s_alpha for positive alpha, kept
// when the length goes up by one (Bruhat) or down by <alpha^v, 2rho> - 1
// (quantum). Edge weights accumulate along paths; all shortest directed
// paths between two vertices carry the same total weight wt(u, v).
class QBG {
 public:
  explicit QBG(const WeylGroup& W);
  QBG(WeylGroup&&) = delete;  // keeps a pointer to W

  const WeylGroup& group() const { return *W_; }
  const std::vector<QBGEdge>& edges() const { return edges_; }
  const std::vector<QBGEdge>& edges_from(int x) const { return out_.at(x); }

  int distance(int u, int v) const { return dist_.at(u).at(v); }
  // Total weight of any shortest directed path, in X-coords.
  const IVec& weight(int u, int v) const { return wt_.at(u).at(v); }
  const IVec& weight(const WeylElement& u, const WeylElement& v) const;

 private:
  const WeylGroup* W_;
  std::vector<QBGEdge> edges_;
  std::vector<std::vector<QBGEdge>> out_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<IVec>> wt_;
};

// max { u' v' : u' <= u, v' <= v } in Bruhat order (finite group).
WeylElement demazure(const WeylElement& u, const WeylElement& v);

// Positive roots beta_1, ..., beta_r peeled greedily from gamma: each step
// takes the dominance-largest positive root whose coroot still fits under
// the residual, ties broken by smallest root coords. Requires gamma to be a
// nonnegative integer combination of simple coroots.
std::vector<IVec> greedy_decomposition(const RootDatum& rd, const IVec& gamma);

// z_gamma = s_{beta_r} * ... * s_{beta_1} (Demazure products, reverse peel
// order). The maximum of { x in W : wt(x, e) <= gamma }.
WeylElement z_gamma(const WeylGroup& W, const IVec& gamma);

// Elements x t^{lam} y of the lam-stratum of Adm(mu), described inside W:
// pairs (x, y) with y minimal in W_{I(lam)} y and wt(x, y^{-1}) <= mu - lam.
// Returned as WeylGroup index pairs, sorted.
std::vector<std::pair<int, int>> qbg_stratum_pairs(const QBG& qbg, const IVec& mu,
                                                   const IVec& lam);

}  // namespace alcove
