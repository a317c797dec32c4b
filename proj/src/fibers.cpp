#include "alcove/fibers.hpp"

#include <algorithm>

namespace alcove {

namespace {

void check_nested(const RootDatum& rd, const std::set<int>& K1, const std::set<int>& K2) {
  validate_spherical(rd, K2);
  for (int i : K1)
    if (!K2.count(i)) fail(Err::NotNested, "K1 must sit inside K2");
}

}  // namespace

std::vector<AffineElement> strata(const AdmissibleSet& A, const std::set<int>& K1,
                                  const std::set<int>& K2) {
  check_nested(*A.rd, K1, K2);
  return min_in_coset_filter(A.elements, K2, Side::Right);
}

std::vector<AffineElement> member_set(const AdmissibleSet& A, const AffineElement& w,
                                      const std::set<int>& K2) {
  std::vector<AffineElement> out;
  for (const AffineElement& x : aff_subgroup(*A.rd, K2))
    if (A.contains(compose(w, x))) out.push_back(x);
  std::sort(out.begin(), out.end(), aff_word_less);
  return out;
}

FiberDescriptor fiber(const AdmissibleSet& A, const AffineElement& w, const std::set<int>& K1,
                      const std::set<int>& K2) {
  check_nested(*A.rd, K1, K2);
  if (!A.contains(w) || !is_min_in_coset(w, K2, Side::Right))
    fail(Err::NotAStratum, "fiber: not a K2-minimal admissible element");
  FiberDescriptor d;
  d.base = w;
  // saturate the member set on the right by the K1 subgroup: the fiber is a
  // union of K1-cells, and only the saturated set is a lower set in general
  std::vector<AffineElement> S = member_set(A, w, K2);
  std::vector<AffineElement> WK1 = aff_subgroup(*A.rd, K1);
  std::unordered_set<AffineElement, AffineElementHash> seen;
  for (const AffineElement& x : S)
    for (const AffineElement& u : WK1) {
      AffineElement xu = compose(x, u);
      if (seen.insert(xu).second) d.members.push_back(std::move(xu));
    }
  std::sort(d.members.begin(), d.members.end(), aff_word_less);
  std::vector<AffineElement> maxima = bruhat_maxima(d.members);
  if (maxima.size() != 1) fail(Err::NotUnique, "fiber members have no single maximum");
  d.top = maxima.front();
  d.min_rep = aff_coset_min(d.top, K1, Side::Right);
  d.dimension = d.top.len - aff_longest(*A.rd, K1).len;
  return d;
}

namespace {

// max { x : x t^lam v^{-1} admissible }, by induction on v: stripping the
// first letter of v keeps the candidate set a lower set, and lifting the
// letter back in moves the maximum to the longer of M and s_i M.
int max_over_sublevel(const WeylGroup& W, const IVec& gamma, int v) {
  if (W.length(v) == 0) return W.index_of(z_gamma(W, gamma));
  int i = W.at(v).word.front();
  int m = max_over_sublevel(W, gamma, W.mult_left(v, i));
  int sm = W.mult_left(m, i);
  return W.length(sm) > W.length(m) ? sm : m;
}

}  // namespace

WeylElement hyperspecial_max_fast(const WeylGroup& W, const IVec& mu, const AffineElement& w) {
  const RootDatum& rd = *W.at(0).rd;
  rd.check_same(w.rd, "hyperspecial_max_fast");
  if (!rd.is_dominant(w.lambda))
    fail(Err::PreconditionViolated, "translation part must be dominant");
  if (!rd.dominance_leq(w.lambda, mu))
    fail(Err::PreconditionViolated, "translation part must lie below mu");
  for (int i = 1; i <= rd.rank(); ++i)
    if (rd.pair(w.lambda, rd.simple_root(i).alpha) == 0 &&
        is_descent(w.y, i, Side::Left))
      fail(Err::PreconditionViolated, "finite part must be shortest in its stabilizer coset");
  IVec gamma = vsub(mu, w.lambda);
  int v = W.inverse(W.index_of(w.y));
  return W.at(max_over_sublevel(W, gamma, v));
}

std::vector<SweepRow> schubert_sweep(const WeylGroup& W, const IVec& mu) {
  const RootDatum& rd = *W.at(0).rd;
  std::vector<SweepRow> rows;
  for (const IVec& lam : dominant_below(rd, mu)) {
    std::set<int> I;
    for (int i = 1; i <= rd.rank(); ++i)
      if (rd.pair(lam, rd.simple_root(i).alpha) == 0) I.insert(i);
    for (int y = 0; y < W.size(); ++y) {
      bool minimal = true;
      for (int i : I)
        if (W.length(W.mult_left(y, i)) < W.length(y)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      AffineElement w = aff_element(rd, lam, W.at(y));
      rows.push_back(SweepRow{lam, W.at(y), hyperspecial_max_fast(W, mu, w), I.empty()});
    }
  }
  return rows;
}

}  // namespace alcove
