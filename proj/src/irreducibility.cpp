#include "alcove/irreducibility.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace alcove {

std::vector<WeylElement> pr_gens(const RootDatum& rd, const std::set<int>& K) {
  validate_spherical(rd, K);
  std::vector<WeylElement> gens;
  for (int i : K)
    gens.push_back(i == 0 ? weyl_reflection(rd, rd.theta()) : weyl_simple(rd, i));
  return gens;
}

std::vector<WeylElement> pr_subgroup(const RootDatum& rd, const std::set<int>& K) {
  if (K.empty()) return {weyl_identity(rd)};
  return subgroup_closure(pr_gens(rd, K), weyl_order(rd.cartan_spec()));
}

bool is_special(const RootDatum& rd, const std::set<int>& K) {
  return static_cast<i64>(pr_subgroup(rd, K).size()) == weyl_order(rd.cartan_spec());
}

namespace {

bool normalized_for_K(const RootDatum& rd, const std::set<int>& K, const IVec& lam) {
  for (int i : K) {
    if (i == 0) {
      if (rd.pair(lam, rd.theta().alpha) < 0) return false;
    } else if (rd.pair(lam, rd.simple_root(i).alpha) > 0) {
      return false;
    }
  }
  return true;
}

bool is_central(const RootDatum& rd, const IVec& mu) {
  for (int i = 1; i <= rd.rank(); ++i)
    if (rd.pair(mu, rd.simple_root(i).alpha) != 0) return false;
  return true;
}

}  // namespace

ComponentReport component_report(const RootDatum& rd, const IVec& mu, const std::set<int>& K) {
  validate_spherical(rd, K);
  if (!rd.is_dominant(mu)) fail(Err::NotDominant, "component_report: mu must be dominant");
  ComponentReport rep;
  rep.K = K;
  rep.mu = mu;
  rep.central = is_central(rd, mu);

  std::vector<WeylElement> P = pr_subgroup(rd, K);
  std::set<IVec> pending;
  for (const IVec& v : weyl_orbit(rd, mu)) pending.insert(v);
  AffineElement wK = aff_longest(rd, K);

  while (!pending.empty()) {
    // flood one orbit of the K-group
    std::set<IVec> orbit;
    std::deque<IVec> queue{*pending.begin()};
    orbit.insert(*pending.begin());
    while (!queue.empty()) {
      IVec v = queue.front();
      queue.pop_front();
      for (const WeylElement& u : P) {
        IVec w = u.cmat.apply(v);
        if (orbit.insert(w).second) queue.push_back(w);
      }
    }
    IVec normalized;
    int hits = 0;
    for (const IVec& v : orbit) {
      pending.erase(v);
      if (normalized_for_K(rd, K, v)) {
        normalized = v;
        ++hits;
      }
    }
    if (hits != 1) fail(Err::NotUnique, "orbit normalization is not unique");
    AffineElement top = aff_demazure(aff_demazure(wK, aff_translation(rd, normalized)), wK);
    rep.components.push_back(Component{normalized, top.len - wK.len});
  }
  std::sort(rep.components.begin(), rep.components.end(),
            [](const Component& a, const Component& b) { return a.translation < b.translation; });
  return rep;
}

std::string short_type_name(const RootDatum& rd) {
  std::set<int> S = rd.short_simple_set();
  int k = static_cast<int>(S.size());
  if (k > 0) {
    // must form a connected chain: a type A diagram
    std::vector<int> v(S.begin(), S.end());
    const IMat& c = rd.cartan();
    int links = 0;
    for (size_t a = 0; a < v.size(); ++a)
      for (size_t b = a + 1; b < v.size(); ++b) {
        i64 cab = c.at(v[a] - 1, v[b] - 1), cba = c.at(v[b] - 1, v[a] - 1);
        if (cab == 0 && cba == 0) continue;
        if (cab != -1 || cba != -1) fail(Err::InvalidSpec, "short letters carry a multiple bond");
        ++links;
      }
    if (links != k - 1) fail(Err::InvalidSpec, "short letters do not form a chain");
    std::vector<WeylElement> gens;
    for (int i : S) gens.push_back(weyl_simple(rd, i));
    i64 order = static_cast<i64>(subgroup_closure(gens, weyl_order(rd.cartan_spec())).size());
    i64 expect = 1;
    for (int j = 2; j <= k + 1; ++j) expect = checked_mul(expect, j);
    if (order != expect) fail(Err::InvalidSpec, "short letter group has the wrong order");
  }
  return "A_" + std::to_string(k);
}

bool short_complement_fills(const RootDatum& rd, const std::set<int>& K) {
  std::vector<WeylElement> P = pr_subgroup(rd, K);
  std::vector<WeylElement> gens;
  for (int i : rd.short_simple_set()) gens.push_back(weyl_simple(rd, i));
  std::vector<WeylElement> S = gens.empty()
                                   ? std::vector<WeylElement>{weyl_identity(rd)}
                                   : subgroup_closure(gens, weyl_order(rd.cartan_spec()));
  std::unordered_set<WeylElement, WeylElementHash> prod;
  for (const WeylElement& u : P)
    for (const WeylElement& v : S) prod.insert(compose(u, v));
  return static_cast<i64>(prod.size()) == weyl_order(rd.cartan_spec());
}

bool is_irreducible(const RootDatum& rd, const IVec& mu, const std::set<int>& K) {
  ComponentReport rep = component_report(rd, mu, K);
  bool by_count = rep.count() == 1;
  if (rep.central) {
    if (!by_count) fail(Err::RouteDisagreement, "central coweight with several components");
    return true;
  }
  bool zero_on_short = true;
  for (int i : rd.short_simple_set())
    if (rd.pair(mu, rd.simple_root(i).alpha) != 0) zero_on_short = false;
  bool by_criterion =
      is_special(rd, K) || (short_complement_fills(rd, K) && zero_on_short);
  if (by_count != by_criterion)
    fail(Err::RouteDisagreement, "component count disagrees with the closed criterion");
  return by_count;
}

std::vector<ClassifyRow> classify(const RootDatum& rd) {
  int n = rd.rank();
  std::vector<ClassifyRow> rows;
  // all proper subsets of the n + 1 affine letters
  for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
    if (mask == (1 << (n + 1)) - 1) continue;
    std::set<int> K;
    for (int i = 0; i <= n; ++i)
      if (mask & (1 << i)) K.insert(i);
    std::vector<WeylElement> P = pr_subgroup(rd, K);
    if (static_cast<i64>(P.size()) == weyl_order(rd.cartan_spec())) continue;  // special
    std::vector<WeylElement> reps = double_coset_reps(WeylGroup(rd), P, {});
    std::set<int> supp;
    for (const WeylElement& w : reps)
      for (int i : w.word) supp.insert(i);
    if (static_cast<int>(supp.size()) == n) continue;  // support fills everything
    rows.push_back(ClassifyRow{K, supp});
  }
  std::sort(rows.begin(), rows.end(),
            [](const ClassifyRow& a, const ClassifyRow& b) { return a.K < b.K; });
  return rows;
}

}  // namespace alcove
