#include "alcove/root_datum.hpp"

#include <algorithm>
#include <deque>

namespace alcove {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

i64 weyl_order(const CartanSpec& cs) {
  i64 n = cs.rank;
  auto fact = [](i64 k) {
    i64 r = 1;
    for (i64 i = 2; i <= k; ++i) r = checked_mul(r, i);
    return r;
  };
  switch (cs.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return checked_mul(fact(n), i64(1) << n);
    case Family::D: return checked_mul(fact(n), i64(1) << (n - 1));
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  fail(Err::InvalidSpec, "family");
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  return std::nullopt;
}

std::string RootDatum::name() const {
  std::string s = family_name(cspec_.family) + std::to_string(cspec_.rank);
  switch (lkind_) {
    case LatticeKind::Adjoint: s += "/adjoint"; break;
    case LatticeKind::Coweight: s += "/coweight"; break;
    case LatticeKind::GL: s += "/gl"; break;
    case LatticeKind::Custom: s += "/custom"; break;
  }
  return s;
}

RootDatum::RootDatum(const CartanSpec& cs, const LatticeSpec& ls) : cspec_(cs), lkind_(ls.kind) {
  n_ = cspec_.rank;
  build_cartan();
  build_lattice(ls);
  build_roots();
  build_residue_basis();
  winv_.assign(n_, FracVec(n_, Frac(0)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) winv_[i][j] = Frac(cartan_.at(j, i));
  winv_ = frac_inverse(winv_);
}

void RootDatum::build_cartan() {
  const int n = n_;
  auto bad = [&](const char* why) { fail(Err::InvalidSpec, why); };
  auto chain = [&](IMat& c) {
    for (int i = 0; i + 1 < n; ++i) {
      c.at(i, i + 1) = -1;
      c.at(i + 1, i) = -1;
    }
  };
  IMat c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  sqlen_.assign(n, 2);
  switch (cspec_.family) {
    case Family::A:
      if (n < 1) bad("type A needs rank >= 1");
      chain(c);
      break;
    case Family::B:
      if (n < 2) bad("type B needs rank >= 2");
      chain(c);
      c.at(n - 1, n - 2) = -2;  // short alpha_n against long alpha_{n-1}
      sqlen_[n - 1] = 1;
      break;
    case Family::C:
      if (n < 2) bad("type C needs rank >= 2");
      chain(c);
      c.at(n - 2, n - 1) = -2;  // long alpha_n
      sqlen_[n - 1] = 4;
      break;
    case Family::D:
      if (n < 3) bad("type D needs rank >= 3");
      for (int i = 0; i + 1 < n - 1; ++i) {
        c.at(i, i + 1) = -1;
        c.at(i + 1, i) = -1;
      }
      c.at(n - 3, n - 1) = -1;
      c.at(n - 1, n - 3) = -1;
      break;
    case Family::E: {
      if (n < 6 || n > 8) bad("type E needs rank 6..8");
      auto link = [&](int i, int j) {  // 1-based
        c.at(i - 1, j - 1) = -1;
        c.at(j - 1, i - 1) = -1;
      };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      link(4, 5);
      link(5, 6);
      if (n >= 7) link(6, 7);
      if (n >= 8) link(7, 8);
      break;
    }
    case Family::F:
      if (n != 4) bad("type F needs rank 4");
      chain(c);
      c.at(2, 1) = -2;  // short alpha_3 against long alpha_2
      sqlen_[2] = 1;
      sqlen_[3] = 1;
      break;
    case Family::G:
      if (n != 2) bad("type G needs rank 2");
      c.at(0, 1) = -3;
      c.at(1, 0) = -1;
      sqlen_[1] = 6;
      break;
  }
  cartan_ = c;
}

void RootDatum::build_lattice(const LatticeSpec& ls) {
  const int n = n_;
  switch (lkind_) {
    case LatticeKind::Adjoint: {
      m_ = n;
      pairing_ = cartan_;  // <alpha_k^v, alpha_j> = C[k][j]
      simple_coroot_.assign(n, IVec(n, 0));
      for (int i = 0; i < n; ++i) simple_coroot_[i][i] = 1;
      break;
    }
    case LatticeKind::Coweight: {
      m_ = n;
      pairing_ = IMat::identity(n);
      simple_coroot_.assign(n, IVec(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) simple_coroot_[i][j] = cartan_.at(i, j);
      break;
    }
    case LatticeKind::GL: {
      if (cspec_.family != Family::A)
        fail(Err::InvalidSpec, "gl lattice is defined for type A only");
      m_ = n + 1;
      pairing_ = IMat(m_, n);
      for (int j = 0; j < n; ++j) {
        pairing_.at(j, j) = 1;
        pairing_.at(j + 1, j) = -1;
      }
      simple_coroot_.assign(n, IVec(m_, 0));
      for (int j = 0; j < n; ++j) {
        simple_coroot_[j][j] = 1;
        simple_coroot_[j][j + 1] = -1;
      }
      break;
    }
    case LatticeKind::Custom: {
      if (static_cast<int>(ls.basis.size()) != n)
        fail(Err::InvalidSpec, "custom basis must have rank-many vectors");
      for (const IVec& b : ls.basis)
        if (static_cast<int>(b.size()) != n)
          fail(Err::InvalidSpec, "custom basis vector has wrong dimension");
      custom_basis_ = ls.basis;
      m_ = n;
      // Basis vectors live in fundamental-coweight coordinates, so the
      // pairing with alpha_j is just the j-th coordinate.
      pairing_ = IMat(n, n);
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) pairing_.at(k, j) = ls.basis[k][j];
      // Express each simple coroot (= row i of the Cartan matrix in
      // fundamental-coweight coordinates) in the custom basis.
      FracMat bt(n, FracVec(n, Frac(0)));
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) bt[j][k] = Frac(ls.basis[k][j]);
      FracMat bt_inv = frac_inverse(bt);  // InvalidSpec when singular
      simple_coroot_.assign(n, IVec(n, 0));
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
          Frac x(0);
          for (int j = 0; j < n; ++j) x = x + bt_inv[k][j] * Frac(cartan_.at(i, j));
          if (!x.is_integer())
            fail(Err::NonIntegralLattice, "custom basis does not contain the coroot lattice");
          simple_coroot_[i][k] = x.num;
        }
      }
      break;
    }
  }
  // Simple reflections on both sides.
  refl_root_.clear();
  refl_cow_.clear();
  for (int i = 0; i < n; ++i) {
    IMat r = IMat::identity(n);
    for (int j = 0; j < n; ++j) r.at(i, j) = checked_sub(r.at(i, j), cartan_.at(i, j));
    refl_root_.push_back(r);
    IMat s = IMat::identity(m_);
    for (int k = 0; k < m_; ++k) {
      i64 p = pairing_.at(k, i);
      if (p == 0) continue;
      for (int rr = 0; rr < m_; ++rr)
        s.at(rr, k) = checked_sub(s.at(rr, k), checked_mul(p, simple_coroot_[i][rr]));
    }
    refl_cow_.push_back(s);
  }
}

void RootDatum::build_roots() {
  const int n = n_;
  std::map<IVec, IVec> seen;  // root -> coroot (X-coords)
  std::deque<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec a(n, 0);
    a[i] = 1;
    seen[a] = simple_coroot_[i];
    queue.push_back(a);
  }
  while (!queue.empty()) {
    IVec a = queue.front();
    queue.pop_front();
    IVec acor = seen[a];
    for (int i = 1; i <= n; ++i) {
      IVec b = reflect_root(i, a);
      if (seen.count(b)) continue;
      seen[b] = refl_cow_[i - 1].apply(acor);
      queue.push_back(b);
    }
  }
  std::vector<std::pair<IVec, IVec>> pos;
  for (auto& [a, cor] : seen)
    if (vnonneg(a)) pos.push_back({a, cor});
  std::sort(pos.begin(), pos.end(), [](const auto& x, const auto& y) {
    i64 hx = root_height(x.first), hy = root_height(y.first);
    if (hx != hy) return hx < hy;
    return x.first < y.first;
  });
  pos_roots_.clear();
  pos_coroots_.clear();
  for (size_t i = 0; i < pos.size(); ++i) {
    pos_roots_.push_back(pos[i].first);
    pos_coroots_.push_back(pos[i].second);
    pos_index_[pos[i].first] = static_cast<int>(i);
  }
  // Highest root: the unique dominance-maximum of the positive roots.
  theta_index_ = static_cast<int>(pos_roots_.size()) - 1;
  for (const IVec& a : pos_roots_)
    if (!vnonneg(vsub(pos_roots_[theta_index_], a)))
      fail(Err::InvalidSpec, "highest root is not a dominance maximum");
  two_rho_.assign(n, 0);
  for (const IVec& a : pos_roots_) two_rho_ = vadd(two_rho_, a);
  h_ = root_height(pos_roots_[theta_index_]) + 1;
}

// Column-echelon basis of the coroot lattice inside X, used to reduce a
// coweight to a canonical representative modulo the coroot lattice.
void RootDatum::build_residue_basis() {
  std::vector<IVec> cols = simple_coroot_;  // n columns, each of dim m
  residue_hnf_.clear();
  residue_pivot_row_.clear();
  size_t c = 0;
  for (int r = 0; r < m_ && c < cols.size(); ++r) {
    // Euclidean elimination at row r among columns c..end.
    while (true) {
      size_t nz = cols.size();
      for (size_t j = c; j < cols.size(); ++j)
        if (cols[j][r] != 0 && (nz == cols.size() || std::llabs(cols[j][r]) < std::llabs(cols[nz][r])))
          nz = j;
      if (nz == cols.size()) break;
      bool reduced = true;
      for (size_t j = c; j < cols.size(); ++j) {
        if (j == nz || cols[j][r] == 0) continue;
        i64 q = cols[j][r] / cols[nz][r];
        if (q != 0) cols[j] = vsub(cols[j], vscale(q, cols[nz]));
        if (cols[j][r] != 0) reduced = false;
      }
      if (reduced) {
        std::swap(cols[c], cols[nz]);
        break;
      }
    }
    if (cols[c][r] != 0 && c < cols.size()) {
      if (cols[c][r] < 0) cols[c] = vneg(cols[c]);
      residue_hnf_.push_back(cols[c]);
      residue_pivot_row_.push_back(r);
      ++c;
    }
  }
}

Root RootDatum::simple_root(int i) const {
  if (i < 1 || i > n_) fail(Err::InvalidSpec, "simple root index out of range");
  IVec a(n_, 0);
  a[i - 1] = 1;
  return Root{this, a};
}

Coweight RootDatum::simple_coroot(int i) const {
  if (i < 1 || i > n_) fail(Err::InvalidSpec, "simple coroot index out of range");
  return Coweight{this, simple_coroot_[i - 1]};
}

bool RootDatum::is_root(const IVec& alpha) const {
  if (vnonneg(alpha)) return pos_index_.count(alpha) > 0;
  return pos_index_.count(vneg(alpha)) > 0;
}

Root RootDatum::root(const IVec& alpha) const {
  if (!is_root(alpha)) fail(Err::InvalidSpec, "not a root");
  return Root{this, alpha};
}

Root RootDatum::theta() const { return Root{this, pos_roots_[theta_index_]}; }

i64 RootDatum::sq_length(const IVec& alpha) const {
  // 2*(beta,beta) via the doubled Gram matrix 2(alpha_i,alpha_j) = C[j][i]*sqlen[j].
  i64 twice = 0;
  for (int i = 0; i < n_; ++i) {
    if (alpha[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (alpha[j] == 0) continue;
      i64 g2 = checked_mul(cartan_.at(j, i), sqlen_[j]);
      twice = checked_add(twice, checked_mul(checked_mul(alpha[i], alpha[j]), g2));
    }
  }
  return twice / 2;
}

std::set<int> RootDatum::short_simple_set() const {
  i64 mn = sqlen_[0], mx = sqlen_[0];
  for (i64 v : sqlen_) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  std::set<int> out;
  if (mn == mx) return out;  // simply laced: empty by convention
  for (int i = 0; i < n_; ++i)
    if (sqlen_[i] == mn) out.insert(i + 1);
  return out;
}

i64 RootDatum::pair(const IVec& cw, const IVec& alpha) const {
  i64 s = 0;
  for (int k = 0; k < m_; ++k) {
    if (cw[k] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (alpha[j] == 0) continue;
      s = checked_add(s, checked_mul(cw[k], checked_mul(pairing_.at(k, j), alpha[j])));
    }
  }
  return s;
}

i64 RootDatum::pairing(const Coweight& cw, const Root& r) const {
  check_same(cw.rd, "pairing: coweight from another datum");
  check_same(r.rd, "pairing: root from another datum");
  return pair(cw.x, r.alpha);
}

Coweight RootDatum::coroot(const Root& r) const {
  check_same(r.rd, "coroot");
  return Coweight{this, coroot_coords_of(r.alpha)};
}

IVec RootDatum::coroot_coords_of(const IVec& alpha) const {
  if (vnonneg(alpha)) {
    auto it = pos_index_.find(alpha);
    if (it == pos_index_.end()) fail(Err::InvalidSpec, "not a root");
    return pos_coroots_[it->second];
  }
  auto it = pos_index_.find(vneg(alpha));
  if (it == pos_index_.end()) fail(Err::InvalidSpec, "not a root");
  return vneg(pos_coroots_[it->second]);
}

bool RootDatum::is_dominant(const IVec& cw) const {
  for (int i = 0; i < n_; ++i) {
    IVec a(n_, 0);
    a[i] = 1;
    if (pair(cw, a) < 0) return false;
  }
  return true;
}

std::optional<FracVec> RootDatum::coroot_coords(const IVec& cw) const {
  // Solve cw = sum x_i alpha_i^v through the pairings with the simple roots.
  FracVec x(n_, Frac(0));
  IVec p(n_, 0);
  for (int j = 0; j < n_; ++j) {
    IVec a(n_, 0);
    a[j] = 1;
    p[j] = pair(cw, a);
  }
  for (int i = 0; i < n_; ++i) {
    Frac s(0);
    for (int j = 0; j < n_; ++j) s = s + winv_[i][j] * Frac(p[j]);
    x[i] = s;
  }
  // Confirm cw really lies in the span (a central gl component does not).
  for (int k = 0; k < m_; ++k) {
    Frac s(0);
    for (int i = 0; i < n_; ++i) s = s + x[i] * Frac(simple_coroot_[i][k]);
    if (s != Frac(cw[k])) return std::nullopt;
  }
  return x;
}

bool RootDatum::dominance_leq(const IVec& cw1, const IVec& cw2) const {
  auto cc = coroot_coords(vsub(cw2, cw1));
  if (!cc) return false;
  for (const Frac& f : *cc)
    if (!f.is_integer() || f.num < 0) return false;
  return true;
}

bool RootDatum::in_coroot_lattice(const IVec& cw) const {
  auto cc = coroot_coords(cw);
  if (!cc) return false;
  for (const Frac& f : *cc)
    if (!f.is_integer()) return false;
  return true;
}

IVec RootDatum::coroot_lattice_residue(const IVec& cw) const {
  IVec v = cw;
  for (size_t j = 0; j < residue_hnf_.size(); ++j) {
    int r = residue_pivot_row_[j];
    i64 d = residue_hnf_[j][r];
    i64 a = v[r];
    i64 q = (a >= 0) ? a / d : -((-a + d - 1) / d);
    if (q != 0) v = vsub(v, vscale(q, residue_hnf_[j]));
  }
  return v;
}

}  // namespace alcove
