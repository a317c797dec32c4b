// Fibers of the level-changing maps between admissible loci: for nested
// spherical K1 within K2, the fiber over a K2-minimal stratum element is a
// union of Schubert cells described by a single maximal element.
#pragma once

#include "alcove/admissible.hpp"
#include "alcove/qbg.hpp"

namespace alcove {

// Stratum representatives of the target level: the K2-minimal elements of
// the admissible set. K1 must sit inside K2.
std::vector<AffineElement> strata(const AdmissibleSet& A, const std::set<int>& K1,
                                  const std::set<int>& K2);

// { x in the K2 subgroup : w x stays admissible }, sorted. A Bruhat lower
// set whenever w is K2-minimal.
std::vector<AffineElement> member_set(const AdmissibleSet& A, const AffineElement& w,
                                      const std::set<int>& K2);

struct FiberDescriptor {
  AffineElement base;                  // the stratum element
  std::vector<AffineElement> members;  // member_set(base, K2), K1-saturated
  AffineElement top;                   // unique Bruhat maximum of the members
  AffineElement min_rep;               // K1-minimal representative of top
  i64 dimension = 0;                   // len(top) - len(longest element of K1)
};

FiberDescriptor fiber(const AdmissibleSet& A, const AffineElement& w, const std::set<int>& K1,
                      const std::set<int>& K2);

// max { x in W : x w is admissible for mu } at hyperspecial level, computed
// inside the finite group without touching the admissible set. Requires the
// translation part of w dominant and below mu, and its finite part shortest
// in its left stabilizer coset.
WeylElement hyperspecial_max_fast(const WeylGroup& W, const IVec& mu, const AffineElement& w);

struct SweepRow {
  IVec lambda;    // dominant translation part
  WeylElement y;  // finite part, shortest in W_{I(lambda)} y
  WeylElement top;
  bool regular = false;  // lambda pairs nonzero with every simple root
};

// One row per pair (lambda, y) with lambda dominant below mu.
std::vector<SweepRow> schubert_sweep(const WeylGroup& W, const IVec& mu);

}  // namespace alcove
