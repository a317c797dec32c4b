#include "alcove/weyl.hpp"

#include <algorithm>
#include <deque>

namespace alcove {

namespace {

// Column i of m is the image of alpha_i; a root image is negative exactly
// when every coordinate is <= 0.
bool column_negative(const IMat& m, int i) {
  for (int r = 0; r < m.rows; ++r)
    if (m.at(r, i) > 0) return false;
  return true;
}

i64 inversion_count(const RootDatum& rd, const IMat& rmat) {
  i64 c = 0;
  for (const IVec& a : rd.positive_roots())
    if (vnonpos(rmat.apply(a))) ++c;
  return c;
}

std::vector<int> canonical_word(const RootDatum& rd, const IMat& rinv_in, i64 len) {
  std::vector<int> word;
  IMat u = rinv_in;  // w^{-1} on the root side; left descents of w are its negative columns
  for (i64 step = 0; step < len; ++step) {
    int pick = -1;
    for (int i = 1; i <= rd.rank(); ++i)
      if (column_negative(u, i - 1)) {
        pick = i;
        break;
      }
    if (pick < 0) fail(Err::InvalidSpec, "descent search failed");
    word.push_back(pick);
    u = u.mul(rd.simple_refl_root(pick));  // w := s_i w, so w^{-1} := w^{-1} s_i
  }
  return word;
}

}  // namespace

WeylElement weyl_from_mats(const RootDatum& rd, IMat rmat, IMat rinv, IMat cmat, IMat cinv) {
  WeylElement w;
  w.rd = &rd;
  w.rmat = std::move(rmat);
  w.rinv = std::move(rinv);
  w.cmat = std::move(cmat);
  w.cinv = std::move(cinv);
  w.len = inversion_count(rd, w.rmat);
  w.word = canonical_word(rd, w.rinv, w.len);
  return w;
}

WeylElement weyl_identity(const RootDatum& rd) {
  int n = rd.rank(), m = rd.dim();
  return weyl_from_mats(rd, IMat::identity(n), IMat::identity(n), IMat::identity(m),
                        IMat::identity(m));
}

WeylElement weyl_simple(const RootDatum& rd, int i) {
  const IMat& r = rd.simple_refl_root(i);
  const IMat& c = rd.simple_refl_cow(i);
  return weyl_from_mats(rd, r, r, c, c);
}

WeylElement weyl_reflection(const RootDatum& rd, const Root& beta) {
  rd.check_same(beta.rd, "reflection");
  int n = rd.rank(), m = rd.dim();
  IVec bcor = rd.coroot_coords_of(beta.alpha);
  IMat r = IMat::identity(n);
  for (int j = 0; j < n; ++j) {
    IVec ej(n, 0);
    ej[j] = 1;
    i64 p = rd.pair(bcor, ej);
    for (int i = 0; i < n; ++i) r.at(i, j) = checked_sub(r.at(i, j), checked_mul(p, beta.alpha[i]));
  }
  IMat c = IMat::identity(m);
  for (int k = 0; k < m; ++k) {
    IVec ek(m, 0);
    ek[k] = 1;
    i64 p = rd.pair(ek, beta.alpha);
    for (int i = 0; i < m; ++i) c.at(i, k) = checked_sub(c.at(i, k), checked_mul(p, bcor[i]));
  }
  return weyl_from_mats(rd, r, r, c, c);
}

WeylElement weyl_from_word(const RootDatum& rd, const std::vector<int>& word) {
  WeylElement w = weyl_identity(rd);
  for (int i : word) w = compose(w, weyl_simple(rd, i));
  return w;
}

WeylElement compose(const WeylElement& u, const WeylElement& v) {
  u.rd->check_same(v.rd, "compose");
  return weyl_from_mats(*u.rd, u.rmat.mul(v.rmat), v.rinv.mul(u.rinv), u.cmat.mul(v.cmat),
                        v.cinv.mul(u.cinv));
}

WeylElement inverse(const WeylElement& w) {
  return weyl_from_mats(*w.rd, w.rinv, w.rmat, w.cinv, w.cmat);
}

Root apply(const WeylElement& w, const Root& r) {
  w.rd->check_same(r.rd, "apply root");
  return Root{w.rd, w.rmat.apply(r.alpha)};
}

Coweight apply(const WeylElement& w, const Coweight& c) {
  w.rd->check_same(c.rd, "apply coweight");
  return Coweight{w.rd, w.cmat.apply(c.x)};
}

bool is_descent(const WeylElement& w, int i, Side side) {
  const IMat& m = (side == Side::Right) ? w.rmat : w.rinv;
  return column_negative(m, i - 1);
}

std::vector<int> descents(const WeylElement& w, Side side) {
  std::vector<int> out;
  for (int i = 1; i <= w.rd->rank(); ++i)
    if (is_descent(w, i, side)) out.push_back(i);
  return out;
}

bool bruhat_leq(const WeylElement& x, const WeylElement& y) {
  x.rd->check_same(y.rd, "bruhat_leq");
  if (x.len > y.len) return false;
  if (y.len == 0) return x == y;
  int i = y.word.front();  // smallest left descent of y
  WeylElement sy = compose(weyl_simple(*y.rd, i), y);
  if (is_descent(x, i, Side::Left)) return bruhat_leq(compose(weyl_simple(*x.rd, i), x), sy);
  return bruhat_leq(x, sy);
}

WeylElement coset_min(const WeylElement& w, const std::set<int>& J, Side side) {
  WeylElement v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J) {
      if (is_descent(v, i, side)) {
        v = (side == Side::Left) ? compose(weyl_simple(*v.rd, i), v)
                                 : compose(v, weyl_simple(*v.rd, i));
        moved = true;
      }
    }
  }
  return v;
}

WeylElement coset_max(const WeylElement& w, const std::set<int>& J, Side side) {
  WeylElement v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J) {
      if (!is_descent(v, i, side)) {
        v = (side == Side::Left) ? compose(weyl_simple(*v.rd, i), v)
                                 : compose(v, weyl_simple(*v.rd, i));
        moved = true;
      }
    }
  }
  return v;
}

WeylElement longest_element(const RootDatum& rd, const std::set<int>& J) {
  return coset_max(weyl_identity(rd), J, Side::Right);
}

std::set<int> support(const WeylElement& w) {
  return std::set<int>(w.word.begin(), w.word.end());
}

bool word_less(const WeylElement& a, const WeylElement& b) {
  if (a.len != b.len) return a.len < b.len;
  return a.word < b.word;
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += std::to_string(i);
  return s;
}

std::vector<WeylElement> subgroup_closure(const std::vector<WeylElement>& gens, size_t cap) {
  if (gens.empty()) fail(Err::InvalidSpec, "subgroup_closure: no generators");
  const RootDatum& rd = *gens.front().rd;
  std::unordered_map<WeylElement, int, WeylElementHash> seen;
  std::deque<WeylElement> queue;
  WeylElement e = weyl_identity(rd);
  seen.emplace(e, 0);
  queue.push_back(e);
  std::vector<WeylElement> out{e};
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (const WeylElement& g : gens) {
      WeylElement x = compose(w, g);
      if (seen.count(x)) continue;
      if (out.size() >= cap) fail(Err::NotSpherical, "subgroup closure exceeded cap");
      seen.emplace(x, static_cast<int>(out.size()));
      out.push_back(x);
      queue.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

WeylGroup::WeylGroup(const RootDatum& rd) : rd_(&rd) {
  std::vector<WeylElement> gens;
  for (int i = 1; i <= rd.rank(); ++i) gens.push_back(weyl_simple(rd, i));
  elems_ = subgroup_closure(gens, static_cast<size_t>(1) << 40);
  build_tables();
}

WeylGroup::WeylGroup(const RootDatum& rd, std::vector<WeylElement> elems) : rd_(&rd) {
  if (static_cast<i64>(elems.size()) != weyl_order(rd.cartan_spec()))
    fail(Err::InvalidSpec, "element list does not cover the group");
  for (size_t i = 0; i + 1 < elems.size(); ++i)
    if (!word_less(elems[i], elems[i + 1])) fail(Err::InvalidSpec, "element list out of order");
  elems_ = std::move(elems);
  build_tables();
}

void WeylGroup::build_tables() {
  for (int i = 0; i < static_cast<int>(elems_.size()); ++i) index_.emplace(elems_[i], i);
  if (index_.size() != elems_.size()) fail(Err::InvalidSpec, "duplicate elements in group list");
  int n = rd_->rank();
  std::vector<WeylElement> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(weyl_simple(*rd_, i));
  right_.assign(elems_.size(), std::vector<int>(n));
  left_.assign(elems_.size(), std::vector<int>(n));
  inv_.assign(elems_.size(), 0);
  for (int x = 0; x < size(); ++x) {
    for (int i = 1; i <= n; ++i) {
      right_[x][i - 1] = index_.at(compose(elems_[x], gens[i - 1]));
      left_[x][i - 1] = index_.at(compose(gens[i - 1], elems_[x]));
    }
    inv_[x] = index_.at(alcove::inverse(elems_[x]));
    if (elems_[x].len > elems_[longest_].len) longest_ = x;
  }
}

int WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) fail(Err::DatumMismatch, "element not in enumerated group");
  return it->second;
}

int WeylGroup::mult(int a, int b) const {
  return index_.at(compose(elems_[a], elems_[b]));
}

bool WeylGroup::leq(int x, int y) const {
  if (elems_[x].len > elems_[y].len) return false;
  if (elems_[y].len == 0) return x == y;
  std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint64_t>(y);
  auto it = leq_memo_.find(key);
  if (it != leq_memo_.end()) return it->second;
  int i = elems_[y].word.front();
  int sy = mult_left(y, i);
  int sx = mult_left(x, i);
  bool r = (elems_[sx].len < elems_[x].len) ? leq(sx, sy) : leq(x, sy);
  leq_memo_.emplace(key, r);
  return r;
}

std::vector<WeylElement> double_coset_reps(const WeylGroup& W, const std::vector<WeylElement>& left_gens,
                                           const std::set<int>& right_J) {
  int nelem = W.size();
  std::vector<int> comp(nelem, -1);
  std::vector<int> lg;
  for (const WeylElement& g : left_gens) lg.push_back(W.index_of(g));
  std::vector<WeylElement> reps;
  for (int s = 0; s < nelem; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(reps.size());
    std::deque<int> queue{s};
    comp[s] = id;
    int best = s;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (word_less(W.at(x), W.at(best))) best = x;
      for (int g : lg) {
        int y = W.mult(g, x);
        if (comp[y] < 0) {
          comp[y] = id;
          queue.push_back(y);
        }
      }
      for (int j : right_J) {
        int y = W.mult_right(x, j);
        if (comp[y] < 0) {
          comp[y] = id;
          queue.push_back(y);
        }
      }
    }
    reps.push_back(W.at(best));
  }
  std::sort(reps.begin(), reps.end(), word_less);
  return reps;
}

}  // namespace alcove
