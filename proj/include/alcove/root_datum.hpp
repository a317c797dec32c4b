#pragma once

// Root data for the irreducible finite root systems, over a chosen coweight
// lattice. Roots are kept in simple-root coordinates; coweights in the
// coordinates of the lattice basis fixed by the datum. The pairing matrix
// between the two sides is the only bridge, so every computation stays in
// exact integer arithmetic regardless of family.
//
// Lattice menu:
//   adjoint  - X = coroot lattice, basis = simple coroots
//   coweight - X = coweight lattice, basis = fundamental coweights
//   gl       - type A only: X = Z^n with the permutation action (rank n
//              datum has an n+1 dimensional lattice with a central line)
//   custom   - basis vectors given as integer vectors in fundamental-coweight
//              coordinates; must span a full-rank lattice containing every
//              simple coroot integrally

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcove/types.hpp"

namespace alcove {

enum class Family { A, B, C, D, E, F, G };

struct CartanSpec {
  Family family = Family::A;
  int rank = 1;
};

enum class LatticeKind { Adjoint, Coweight, GL, Custom };

struct LatticeSpec {
  LatticeKind kind = LatticeKind::Adjoint;
  std::vector<IVec> basis;  // Custom only
};

class RootDatum;

// A root, stored in simple-root coordinates. Coefficients of a root are all
// nonnegative or all nonpositive.
struct Root {
  const RootDatum* rd = nullptr;
  IVec alpha;

  bool positive() const { return vnonneg(alpha) && !vzero(alpha); }
  bool operator==(const Root& o) const { return alpha == o.alpha; }
};

// A coweight in lattice-basis coordinates.
struct Coweight {
  const RootDatum* rd = nullptr;
  IVec x;

  bool operator==(const Coweight& o) const { return x == o.x; }
  bool operator!=(const Coweight& o) const { return !(*this == o); }
};

class RootDatum {
 public:
  RootDatum(const CartanSpec& cs, const LatticeSpec& ls);

  const CartanSpec& cartan_spec() const { return cspec_; }
  Family family() const { return cspec_.family; }
  LatticeKind lattice_kind() const { return lkind_; }
  const std::vector<IVec>& custom_basis() const { return custom_basis_; }
  int rank() const { return n_; }
  int dim() const { return m_; }
  const IMat& cartan() const { return cartan_; }
  std::string name() const;

  // --- roots, 1-based simple indices ---
  Root simple_root(int i) const;
  Coweight simple_coroot(int i) const;
  const std::vector<IVec>& positive_roots() const { return pos_roots_; }
  bool is_root(const IVec& alpha) const;
  Root root(const IVec& alpha) const;
  Root theta() const;           // highest root
  IVec two_rho() const { return two_rho_; }  // sum of positive roots
  i64 coxeter_number() const { return h_; }
  i64 sq_length(const IVec& alpha) const;  // Gram norm of a root
  std::set<int> short_simple_set() const;

  // --- pairing and coroots ---
  i64 pair(const IVec& cw, const IVec& alpha) const;
  i64 pairing(const Coweight& cw, const Root& r) const;
  Coweight coroot(const Root& r) const;
  IVec coroot_coords_of(const IVec& alpha) const;  // X-coords of alpha^v

  // --- simple reflections ---
  const IMat& simple_refl_root(int i) const { return refl_root_[i - 1]; }
  const IMat& simple_refl_cow(int i) const { return refl_cow_[i - 1]; }
  IVec reflect_root(int i, const IVec& alpha) const { return refl_root_[i - 1].apply(alpha); }
  IVec reflect_cow(int i, const IVec& x) const { return refl_cow_[i - 1].apply(x); }

  // --- coweight-side order and lattice tests ---
  bool is_dominant(const IVec& cw) const;
  // Coordinates of cw in the simple-coroot basis, if cw lies in the span.
  std::optional<FracVec> coroot_coords(const IVec& cw) const;
  // cw2 - cw1 is a nonnegative integer combination of simple coroots.
  bool dominance_leq(const IVec& cw1, const IVec& cw2) const;
  bool in_coroot_lattice(const IVec& cw) const;
  // Canonical representative of cw modulo the coroot lattice.
  IVec coroot_lattice_residue(const IVec& cw) const;

  void check_same(const RootDatum* other, const char* op) const {
    if (other != this) fail(Err::DatumMismatch, op);
  }

 private:
  void build_cartan();
  void build_lattice(const LatticeSpec& ls);
  void build_roots();
  void build_residue_basis();

  CartanSpec cspec_;
  LatticeKind lkind_;
  std::vector<IVec> custom_basis_;
  int n_ = 0;  // rank
  int m_ = 0;  // lattice dimension
  IMat cartan_;
  IVec sqlen_;                       // Gram diagonal of the simple roots
  IMat pairing_;                     // m x n, <b_k, alpha_j>
  std::vector<IVec> simple_coroot_;  // X-coords, n entries
  std::vector<IMat> refl_root_;      // n x n each
  std::vector<IMat> refl_cow_;       // m x m each
  std::vector<IVec> pos_roots_;      // simple-root coords, deterministic order
  std::vector<IVec> pos_coroots_;    // X-coords, parallel to pos_roots_
  std::map<IVec, int> pos_index_;
  int theta_index_ = -1;
  IVec two_rho_;
  i64 h_ = 0;
  FracMat winv_;                  // (cartan^T)^{-1}
  std::vector<IVec> residue_hnf_; // column echelon basis of the coroot lattice
  std::vector<int> residue_pivot_row_;
};

inline i64 root_height(const IVec& alpha) { return vsum(alpha); }

i64 weyl_order(const CartanSpec& cs);  // order of the finite Weyl group

std::string family_name(Family f);
std::optional<Family> family_from_string(const std::string& s);

}  // namespace alcove
