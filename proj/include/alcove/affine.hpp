// Extended affine Weyl group W~ = X x| W0 acting on alcoves.
//
// Affine roots are pairs (alpha, k) standing for the affine function
// v -> <v, alpha> + k. The root (alpha, k) is positive exactly when the
// function is positive on the base alcove, which for this normalization
// means k >= 0 for alpha positive and k >= 1 for alpha negative. The base
// alcove is the one cut out by the simple affine roots (alpha_i, 0) and
// (-theta, 1). Other normalizations exist in the literature; everything
// here is internally consistent with this one.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "alcove/root_datum.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

struct AffineRoot {
  IVec alpha;  // finite part, simple-root coords
  i64 k = 0;
  bool operator==(const AffineRoot& o) const { return alpha == o.alpha && k == o.k; }
  bool operator!=(const AffineRoot& o) const { return !(*this == o); }
};

bool aff_root_positive(const AffineRoot& a);
AffineRoot aff_simple_root(const RootDatum& rd, int i);  // i in 0..rank, 0 is (-theta, 1)

// t^lambda y with lambda in X (X-coords) and y in W0. Length, the lex
// minimal reduced word over the affine letters 0..n, and the length-zero
// residual tau (so that w = s_word * tau) are computed eagerly.
struct AffineElement {
  const RootDatum* rd = nullptr;
  IVec lambda;
  WeylElement y;
  i64 len = 0;
  std::vector<int> word;
  IVec tau_lambda;            // translation part of tau; zero iff tau is trivial
  std::vector<int> tau_word;  // finite word of tau's linear part

  bool operator==(const AffineElement& o) const { return lambda == o.lambda && y == o.y; }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }
  bool is_identity() const { return len == 0 && vzero(tau_lambda); }
  bool is_translation() const { return y.is_identity(); }
};

struct AffineElementHash {
  size_t operator()(const AffineElement& w) const {
    return fnv1a(w.y.rmat.a, fnv1a(w.lambda));
  }
};

AffineElement aff_element(const RootDatum& rd, IVec lambda, WeylElement y);
AffineElement aff_identity(const RootDatum& rd);
AffineElement aff_translation(const RootDatum& rd, const IVec& lambda);
AffineElement aff_from_finite(const WeylElement& y);
AffineElement aff_simple(const RootDatum& rd, int i);
AffineElement aff_reflection(const RootDatum& rd, const AffineRoot& a);  // t^{-k alpha^v} s_alpha
AffineElement aff_from_word(const RootDatum& rd, const std::vector<int>& word);

AffineElement compose(const AffineElement& u, const AffineElement& v);
AffineElement inverse(const AffineElement& w);
AffineElement tau_part(const AffineElement& w);

AffineRoot aff_apply(const AffineElement& w, const AffineRoot& a);      // w(a)
AffineRoot aff_apply_inv(const AffineElement& w, const AffineRoot& a);  // w^{-1}(a)

bool is_aff_descent(const AffineElement& w, int i, Side side);
std::vector<AffineRoot> aff_inversions(const AffineElement& w);  // {a > 0 : w(a) < 0}
std::vector<AffineRoot> aff_separating(const AffineElement& w);  // {a > 0 : w^{-1}(a) < 0}

// Bruhat order. Elements in different cosets of the affine subgroup are
// incomparable unless equal in length zero; the descent recursion handles
// that uniformly.
bool aff_leq(const AffineElement& x, const AffineElement& y);
std::vector<AffineElement> aff_cocovers(const AffineElement& w);

bool aff_word_less(const AffineElement& a, const AffineElement& b);
std::string aff_to_string(const AffineElement& w);

// Subsets K of the affine letters {0..n} generating a finite subgroup,
// i.e. proper subsets. The full set is rejected.
void validate_spherical(const RootDatum& rd, const std::set<int>& K);
std::vector<AffineElement> aff_subgroup(const RootDatum& rd, const std::set<int>& K);
AffineElement aff_longest(const RootDatum& rd, const std::set<int>& K);
AffineElement aff_coset_min(const AffineElement& w, const std::set<int>& K, Side side);
AffineElement aff_coset_max(const AffineElement& w, const std::set<int>& K, Side side);
bool is_min_in_coset(const AffineElement& w, const std::set<int>& K, Side side);

// Monoid product: u * v is the unique maximum of {u'v' : u' <= u, v' <= v}.
AffineElement aff_demazure(const AffineElement& u, const AffineElement& v);

// Acute cone test: every wall separating the base alcove from w's alcove,
// oriented so its finite part lies in z(Sigma+), must have w's alcove on
// the positive side.
bool in_acute_cone(const AffineElement& w, const WeylElement& z);
std::vector<WeylElement> acute_directions(const AffineElement& w, const WeylGroup& W);

}  // namespace alcove
