// Irreducible components of the mu-admissible locus at parahoric level K,
// counted through the action of the finite reflection group attached to K
// on the extreme translations.
#pragma once

#include "alcove/admissible.hpp"
#include "alcove/qbg.hpp"

namespace alcove {

// Linear parts of the K-generated affine reflections: the s_i for finite
// letters i in K, plus s_theta when 0 lies in K. Conjugating t^lam by an
// affine element moves lam by exactly this group.
std::vector<WeylElement> pr_gens(const RootDatum& rd, const std::set<int>& K);
std::vector<WeylElement> pr_subgroup(const RootDatum& rd, const std::set<int>& K);

// K is special when the linear parts already fill the finite Weyl group.
bool is_special(const RootDatum& rd, const std::set<int>& K);

struct Component {
  IVec translation;  // normalized orbit representative, X-coords
  i64 dimension = 0;
};

struct ComponentReport {
  std::set<int> K;
  IVec mu;
  bool central = false;  // mu pairs to zero with every root
  std::vector<Component> components;

  i64 count() const { return static_cast<i64>(components.size()); }
};

// One component per orbit of the K-group on the extreme translations of
// Adm(mu). Each orbit is represented by its unique member pairing
// nonpositively with the roots of the letters of K, and the dimension is
// read off an affine Demazure product over the K-coset of its translation.
ComponentReport component_report(const RootDatum& rd, const IVec& mu, const std::set<int>& K);

// Simple letters of the short roots, and whether W is generated by the
// K-group together with the reflections of the short root system.
std::string short_type_name(const RootDatum& rd);  // "A_k" chain label
bool short_complement_fills(const RootDatum& rd, const std::set<int>& K);

// Two independent routes: the orbit count above, and the special/short
// criterion. Disagreement throws RouteDisagreement.
bool is_irreducible(const RootDatum& rd, const IVec& mu, const std::set<int>& K);

struct ClassifyRow {
  std::set<int> K;
  std::set<int> support;  // letters appearing in the minimal double coset reps
};

// Non-special proper K whose double coset minima W_prK \ W / W_I all avoid
// some simple letter; sorted by K.
std::vector<ClassifyRow> classify(const RootDatum& rd);

}  // namespace alcove
