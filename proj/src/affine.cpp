#include "alcove/affine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace alcove {

namespace {

// delta_alpha: the value of the affine function (alpha, 0) has to beat on
// the base alcove. 0 for positive alpha, 1 for negative.
i64 delta(const IVec& alpha) { return vnonneg(alpha) ? 0 : 1; }

struct Parts {
  IVec lambda;
  WeylElement y;
};

// Left descent test on raw parts: s_i w < w iff w^{-1}(a_i) is negative,
// and w^{-1}(alpha, k) = (y^{-1} alpha, k + <lambda, alpha>).
bool left_descent_parts(const RootDatum& rd, const Parts& p, const AffineRoot& a) {
  IVec img = p.y.rinv.apply(a.alpha);
  i64 k = checked_add(a.k, rd.pair(p.lambda, a.alpha));
  return k < delta(img);
}

// s_{(alpha,k)} w = t^{-k alpha^v + s_alpha(lambda)} (s_alpha y)
Parts left_reflect_parts(const RootDatum& rd, const Parts& p, const AffineRoot& a,
                         const WeylElement& s_alpha) {
  IVec acor = rd.coroot_coords_of(a.alpha);
  IVec lam = vadd(s_alpha.cmat.apply(p.lambda), vscale(-a.k, acor));
  return Parts{std::move(lam), compose(s_alpha, p.y)};
}

i64 parts_length(const RootDatum& rd, const Parts& p) {
  // l(t^lambda y) = sum over positive alpha of |<lambda, y alpha> + delta_{y alpha}|
  i64 total = 0;
  for (const IVec& a : rd.positive_roots()) {
    IVec ya = p.y.rmat.apply(a);
    i64 v = checked_add(rd.pair(p.lambda, ya), delta(ya));
    total = checked_add(total, v < 0 ? -v : v);
  }
  return total;
}

}  // namespace

bool aff_root_positive(const AffineRoot& a) { return a.k >= delta(a.alpha); }

AffineRoot aff_simple_root(const RootDatum& rd, int i) {
  if (i == 0) return AffineRoot{vneg(rd.theta().alpha), 1};
  return AffineRoot{rd.simple_root(i).alpha, 0};
}

AffineElement aff_element(const RootDatum& rd, IVec lambda, WeylElement y) {
  rd.check_same(y.rd, "aff_element");
  if (static_cast<int>(lambda.size()) != rd.dim()) fail(Err::InvalidSpec, "lambda dimension");
  AffineElement w;
  w.rd = &rd;
  w.lambda = lambda;
  w.y = y;
  w.len = parts_length(rd, Parts{lambda, y});

  // Peel the smallest left descent until length zero; the residual is tau.
  std::vector<AffineRoot> simples;
  std::vector<WeylElement> refls;
  for (int i = 0; i <= rd.rank(); ++i) {
    simples.push_back(aff_simple_root(rd, i));
    refls.push_back(i == 0 ? weyl_reflection(rd, rd.theta()) : weyl_simple(rd, i));
  }
  Parts cur{std::move(lambda), std::move(y)};
  for (i64 step = 0; step < w.len; ++step) {
    int pick = -1;
    for (int i = 0; i <= rd.rank(); ++i)
      if (left_descent_parts(rd, cur, simples[i])) {
        pick = i;
        break;
      }
    if (pick < 0) fail(Err::InvalidSpec, "affine descent search failed");
    w.word.push_back(pick);
    cur = left_reflect_parts(rd, cur, simples[pick], refls[pick]);
  }
  w.tau_lambda = cur.lambda;
  w.tau_word = cur.y.word;
  return w;
}

AffineElement aff_identity(const RootDatum& rd) {
  return aff_element(rd, IVec(rd.dim(), 0), weyl_identity(rd));
}

AffineElement aff_translation(const RootDatum& rd, const IVec& lambda) {
  return aff_element(rd, lambda, weyl_identity(rd));
}

AffineElement aff_from_finite(const WeylElement& y) {
  return aff_element(*y.rd, IVec(y.rd->dim(), 0), y);
}

AffineElement aff_simple(const RootDatum& rd, int i) {
  return aff_reflection(rd, aff_simple_root(rd, i));
}

AffineElement aff_reflection(const RootDatum& rd, const AffineRoot& a) {
  IVec acor = rd.coroot_coords_of(a.alpha);
  return aff_element(rd, vscale(-a.k, acor), weyl_reflection(rd, Root{&rd, a.alpha}));
}

AffineElement aff_from_word(const RootDatum& rd, const std::vector<int>& word) {
  AffineElement w = aff_identity(rd);
  for (int i : word) w = compose(w, aff_simple(rd, i));
  return w;
}

AffineElement compose(const AffineElement& u, const AffineElement& v) {
  u.rd->check_same(v.rd, "compose");
  return aff_element(*u.rd, vadd(u.lambda, u.y.cmat.apply(v.lambda)), compose(u.y, v.y));
}

AffineElement inverse(const AffineElement& w) {
  return aff_element(*w.rd, vneg(w.y.cinv.apply(w.lambda)), inverse(w.y));
}

AffineElement tau_part(const AffineElement& w) {
  AffineElement t = aff_element(*w.rd, w.tau_lambda, weyl_from_word(*w.rd, w.tau_word));
  if (t.len != 0) fail(Err::InvalidSpec, "residual has positive length");
  return t;
}

AffineRoot aff_apply(const AffineElement& w, const AffineRoot& a) {
  IVec img = w.y.rmat.apply(a.alpha);
  i64 k = checked_sub(a.k, w.rd->pair(w.lambda, img));
  return AffineRoot{std::move(img), k};
}

AffineRoot aff_apply_inv(const AffineElement& w, const AffineRoot& a) {
  IVec img = w.y.rinv.apply(a.alpha);
  i64 k = checked_add(a.k, w.rd->pair(w.lambda, a.alpha));
  return AffineRoot{std::move(img), k};
}

bool is_aff_descent(const AffineElement& w, int i, Side side) {
  AffineRoot a = aff_simple_root(*w.rd, i);
  AffineRoot img = (side == Side::Right) ? aff_apply(w, a) : aff_apply_inv(w, a);
  return !aff_root_positive(img);
}

std::vector<AffineRoot> aff_inversions(const AffineElement& w) {
  // Per finite root alpha, the inverted (alpha, k) have k from delta_alpha
  // to <lambda, y alpha> + delta_{y alpha} - 1.
  const RootDatum& rd = *w.rd;
  std::vector<AffineRoot> out;
  for (const IVec& p : rd.positive_roots()) {
    for (int sign = 0; sign < 2; ++sign) {
      IVec a = sign ? vneg(p) : p;
      IVec ya = w.y.rmat.apply(a);
      i64 lo = delta(a);
      i64 hi = checked_add(rd.pair(w.lambda, ya), delta(ya)) - 1;
      for (i64 k = lo; k <= hi; ++k) out.push_back(AffineRoot{a, k});
    }
  }
  return out;
}

std::vector<AffineRoot> aff_separating(const AffineElement& w) {
  // {a > 0 : w^{-1}(a) < 0} with w^{-1}(alpha, k) = (y^{-1} alpha, k + <lambda, alpha>)
  const RootDatum& rd = *w.rd;
  std::vector<AffineRoot> out;
  for (const IVec& p : rd.positive_roots()) {
    for (int sign = 0; sign < 2; ++sign) {
      IVec a = sign ? vneg(p) : p;
      IVec ia = w.y.rinv.apply(a);
      i64 lo = delta(a);
      i64 hi = checked_sub(delta(ia), rd.pair(w.lambda, a)) - 1;
      for (i64 k = lo; k <= hi; ++k) out.push_back(AffineRoot{a, k});
    }
  }
  return out;
}

bool aff_leq(const AffineElement& x, const AffineElement& y) {
  x.rd->check_same(y.rd, "aff_leq");
  if (x.len > y.len) return false;
  if (y.len == 0) return x == y;
  int i = y.word.front();
  AffineElement si = aff_simple(*y.rd, i);
  AffineElement sy = compose(si, y);
  if (is_aff_descent(x, i, Side::Left)) return aff_leq(compose(si, x), sy);
  return aff_leq(x, sy);
}

std::vector<AffineElement> aff_cocovers(const AffineElement& w) {
  std::vector<AffineElement> out;
  for (const AffineRoot& a : aff_inversions(w)) {
    AffineElement c = compose(w, aff_reflection(*w.rd, a));
    if (c.len == w.len - 1) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), aff_word_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool aff_word_less(const AffineElement& a, const AffineElement& b) {
  if (a.len != b.len) return a.len < b.len;
  if (a.word != b.word) return a.word < b.word;
  return a.tau_lambda < b.tau_lambda;
}

std::string aff_to_string(const AffineElement& w) {
  std::string s = word_string(w.word);
  if (!vzero(w.tau_lambda)) {
    s += "@[";
    for (size_t i = 0; i < w.tau_lambda.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w.tau_lambda[i]);
    }
    s += "]";
  }
  return s;
}

void validate_spherical(const RootDatum& rd, const std::set<int>& K) {
  for (int i : K)
    if (i < 0 || i > rd.rank()) fail(Err::InvalidSpec, "affine letter out of range");
  if (static_cast<int>(K.size()) == rd.rank() + 1)
    fail(Err::NotSpherical, "subset must omit at least one affine letter");
}

std::vector<AffineElement> aff_subgroup(const RootDatum& rd, const std::set<int>& K) {
  validate_spherical(rd, K);
  // Any finite subgroup fixing a face of the base alcove injects into W0
  // via its linear part, so |W0| bounds the closure.
  size_t cap = static_cast<size_t>(weyl_order(CartanSpec{rd.family(), rd.rank()}));
  std::vector<AffineElement> gens;
  for (int i : K) gens.push_back(aff_simple(rd, i));
  std::unordered_set<AffineElement, AffineElementHash> seen;
  std::deque<AffineElement> queue;
  AffineElement e = aff_identity(rd);
  seen.insert(e);
  queue.push_back(e);
  std::vector<AffineElement> out{e};
  while (!queue.empty()) {
    AffineElement w = queue.front();
    queue.pop_front();
    for (const AffineElement& g : gens) {
      AffineElement x = compose(w, g);
      if (seen.count(x)) continue;
      if (out.size() >= cap) fail(Err::NotSpherical, "affine subgroup closure exceeded cap");
      seen.insert(x);
      out.push_back(x);
      queue.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), aff_word_less);
  return out;
}

AffineElement aff_longest(const RootDatum& rd, const std::set<int>& K) {
  validate_spherical(rd, K);
  return aff_coset_max(aff_identity(rd), K, Side::Right);
}

AffineElement aff_coset_min(const AffineElement& w, const std::set<int>& K, Side side) {
  validate_spherical(*w.rd, K);
  AffineElement v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : K) {
      if (is_aff_descent(v, i, side)) {
        AffineElement s = aff_simple(*v.rd, i);
        v = (side == Side::Left) ? compose(s, v) : compose(v, s);
        moved = true;
      }
    }
  }
  return v;
}

AffineElement aff_coset_max(const AffineElement& w, const std::set<int>& K, Side side) {
  validate_spherical(*w.rd, K);
  i64 guard = 4 * weyl_order(CartanSpec{w.rd->family(), w.rd->rank()}) + 8;
  AffineElement v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : K) {
      if (!is_aff_descent(v, i, side)) {
        AffineElement s = aff_simple(*v.rd, i);
        v = (side == Side::Left) ? compose(s, v) : compose(v, s);
        moved = true;
        if (--guard < 0) fail(Err::NotSpherical, "coset has no maximum");
      }
    }
  }
  return v;
}

bool is_min_in_coset(const AffineElement& w, const std::set<int>& K, Side side) {
  for (int i : K)
    if (is_aff_descent(w, i, side)) return false;
  return true;
}

AffineElement aff_demazure(const AffineElement& u, const AffineElement& v) {
  u.rd->check_same(v.rd, "aff_demazure");
  AffineElement acc = u;
  for (int i : v.word) {
    AffineElement cand = compose(acc, aff_simple(*u.rd, i));
    if (cand.len > acc.len) acc = std::move(cand);
  }
  if (!vzero(v.tau_lambda)) acc = compose(acc, tau_part(v));
  return acc;
}

bool in_acute_cone(const AffineElement& w, const WeylElement& z) {
  w.rd->check_same(z.rd, "in_acute_cone");
  const RootDatum& rd = *w.rd;
  i64 h = rd.coxeter_number();
  for (AffineRoot a : aff_separating(w)) {
    if (vnonpos(z.rinv.apply(a.alpha))) {  // orient the wall so z^{-1}(alpha) > 0
      a.alpha = vneg(a.alpha);
      a.k = -a.k;
    }
    // Sign of the wall's function at an interior point of w's alcove,
    // cleared of denominators. Never zero: the height term is a nonzero
    // residue mod the Coxeter number.
    i64 s = checked_add(root_height(w.y.rinv.apply(a.alpha)),
                        checked_mul(h, checked_add(rd.pair(w.lambda, a.alpha), a.k)));
    if (s == 0) fail(Err::PreconditionViolated, "degenerate wall sign");
    if (s < 0) return false;
  }
  return true;
}

std::vector<WeylElement> acute_directions(const AffineElement& w, const WeylGroup& W) {
  std::vector<WeylElement> out;
  for (int i = 0; i < W.size(); ++i)
    if (in_acute_cone(w, W.at(i))) out.push_back(W.at(i));
  return out;
}

}  // namespace alcove
