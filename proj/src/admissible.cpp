#include "alcove/admissible.hpp"

#include <algorithm>
#include <deque>

namespace alcove {

IVec dominant_representative(const RootDatum& rd, const IVec& cw) {
  IVec v = cw;
  for (;;) {
    bool moved = false;
    for (int i = 1; i <= rd.rank(); ++i) {
      if (rd.pair(v, rd.simple_root(i).alpha) < 0) {
        v = rd.reflect_cow(i, v);
        moved = true;
      }
    }
    if (!moved) return v;
  }
}

IVec dual_dominant(const RootDatum& rd, const IVec& mu) {
  return dominant_representative(rd, vneg(mu));
}

std::vector<IVec> weyl_orbit(const RootDatum& rd, const IVec& cw) {
  std::vector<IVec> out;
  std::set<IVec> seen;
  std::deque<IVec> queue{cw};
  seen.insert(cw);
  while (!queue.empty()) {
    IVec v = queue.front();
    queue.pop_front();
    out.push_back(v);
    for (int i = 1; i <= rd.rank(); ++i) {
      IVec u = rd.reflect_cow(i, v);
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IVec> dominant_below(const RootDatum& rd, const IVec& mu) {
  if (!rd.is_dominant(mu)) fail(Err::NotDominant, "dominant_below: mu must be dominant");
  // Any dominant lam <= mu satisfies mu - lam <= mu - w0(mu) coordinatewise
  // in simple-coroot coordinates, so a box scan is exhaustive.
  IVec span = vadd(mu, dual_dominant(rd, mu));
  std::optional<FracVec> fc = rd.coroot_coords(span);
  if (!fc) fail(Err::InvalidSpec, "dominant_below: span escapes the coroot span");
  IVec box;
  for (const Frac& f : *fc) {
    if (f.den != 1 || f.num < 0) fail(Err::InvalidSpec, "dominant_below: bad span coordinates");
    box.push_back(f.num);
  }
  std::vector<IVec> out;
  IVec c(box.size(), 0);
  for (;;) {
    IVec lam = mu;
    for (size_t i = 0; i < c.size(); ++i)
      lam = vsub(lam, vscale(c[i], rd.simple_coroot(static_cast<int>(i) + 1).x));
    if (rd.is_dominant(lam)) out.push_back(lam);
    size_t p = 0;
    while (p < c.size() && c[p] == box[p]) c[p++] = 0;
    if (p == c.size()) break;
    ++c[p];
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdmissibleSet admissible_set(const RootDatum& rd, const IVec& mu) {
  if (!rd.is_dominant(mu)) fail(Err::NotDominant, "admissible_set: mu must be dominant");
  AdmissibleSet A;
  A.rd = &rd;
  A.mu = mu;
  for (const IVec& v : weyl_orbit(rd, mu)) A.maxima.push_back(aff_translation(rd, v));
  std::sort(A.maxima.begin(), A.maxima.end(), aff_word_less);
  std::deque<AffineElement> queue;
  for (const AffineElement& t : A.maxima)
    if (A.index.insert(t).second) queue.push_back(t);
  while (!queue.empty()) {
    AffineElement w = queue.front();
    queue.pop_front();
    A.elements.push_back(w);
    for (const AffineElement& c : aff_cocovers(w))
      if (A.index.insert(c).second) queue.push_back(c);
  }
  std::sort(A.elements.begin(), A.elements.end(), aff_word_less);
  return A;
}

std::vector<AffineElement> admissible_K(const AdmissibleSet& A, const std::set<int>& K) {
  validate_spherical(*A.rd, K);
  std::vector<AffineElement> WK = aff_subgroup(*A.rd, K);
  std::unordered_set<AffineElement, AffineElementHash> seen;
  std::vector<AffineElement> out;
  for (const AffineElement& u : WK)
    for (const AffineElement& w : A.elements) {
      AffineElement uw = compose(u, w);
      for (const AffineElement& v : WK) {
        AffineElement uwv = compose(uw, v);
        if (seen.insert(uwv).second) out.push_back(uwv);
      }
    }
  std::sort(out.begin(), out.end(), aff_word_less);
  return out;
}

std::vector<AffineElement> min_in_coset_filter(const std::vector<AffineElement>& S,
                                               const std::set<int>& K, Side side) {
  std::vector<AffineElement> out;
  for (const AffineElement& w : S)
    if (is_min_in_coset(w, K, side)) out.push_back(w);
  return out;
}

std::vector<AffineElement> bruhat_maxima(const std::vector<AffineElement>& S) {
  std::vector<AffineElement> out;
  for (const AffineElement& w : S) {
    bool maximal = true;
    for (const AffineElement& v : S)
      if (!(v == w) && aff_leq(w, v)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), aff_word_less);
  return out;
}

std::vector<AffineElement> max_translations_K(const AdmissibleSet& A, const std::set<int>& K) {
  validate_spherical(*A.rd, K);
  std::vector<AffineElement> out;
  for (const AffineElement& t : A.maxima) {
    bool ok = true;
    for (int i : K) {
      IVec a = i == 0 ? vneg(A.rd->theta().alpha) : A.rd->simple_root(i).alpha;
      if (A.rd->pair(t.lambda, a) > 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(t);
  }
  return out;
}

std::vector<AffineElement> stratum(const AdmissibleSet& A, const IVec& lam) {
  if (!A.rd->is_dominant(lam)) fail(Err::NotDominant, "stratum: lam must be dominant");
  std::vector<AffineElement> out;
  for (const AffineElement& w : A.elements)
    if (dominant_representative(*A.rd, w.lambda) == lam) out.push_back(w);
  return out;
}

}  // namespace alcove
