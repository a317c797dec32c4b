// The admissible set attached to a dominant coweight mu: the downward
// Bruhat closure of the translations t^{x(mu)} over the orbit of mu.
#pragma once

#include <unordered_set>

#include "alcove/affine.hpp"

namespace alcove {

struct AdmissibleSet {
  const RootDatum* rd = nullptr;
  IVec mu;
  std::vector<AffineElement> elements;  // sorted by aff_word_less
  std::vector<AffineElement> maxima;    // the distinct t^{x(mu)}, sorted
  std::unordered_set<AffineElement, AffineElementHash> index;

  bool contains(const AffineElement& w) const { return index.count(w) > 0; }
};

AdmissibleSet admissible_set(const RootDatum& rd, const IVec& mu);
AdmissibleSet admissible_set(RootDatum&&, const IVec&) = delete;  // result keeps a pointer to rd

// W_K Adm(mu) W_K, sorted.
std::vector<AffineElement> admissible_K(const AdmissibleSet& A, const std::set<int>& K);

// Elements of S minimal in their K-coset on the given side.
std::vector<AffineElement> min_in_coset_filter(const std::vector<AffineElement>& S,
                                               const std::set<int>& K, Side side);

// Bruhat-maximal elements of a finite set.
std::vector<AffineElement> bruhat_maxima(const std::vector<AffineElement>& S);

// The translations t^{x(mu)} pairing nonpositively with the root of every
// letter in K, where letter 0 carries -theta. These are exactly the
// K-minimal translation maxima.
std::vector<AffineElement> max_translations_K(const AdmissibleSet& A, const std::set<int>& K);

// Elements of Adm(mu) whose translation part lies in the orbit of lam.
std::vector<AffineElement> stratum(const AdmissibleSet& A, const IVec& lam);

// Orbit combinatorics on the coweight side.
IVec dominant_representative(const RootDatum& rd, const IVec& cw);
IVec dual_dominant(const RootDatum& rd, const IVec& mu);  // -w0(mu)
std::vector<IVec> weyl_orbit(const RootDatum& rd, const IVec& cw);
std::vector<IVec> dominant_below(const RootDatum& rd, const IVec& mu);

}  // namespace alcove
