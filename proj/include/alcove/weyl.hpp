#pragma once

// Finite Weyl group elements and group-level machinery. An element stores its
// action matrices on both sides (roots in simple-root coordinates, coweights
// in lattice coordinates) together with the matrices of the inverse, its
// length, and its canonical reduced word. The canonical word is the
// lexicographically smallest reduced word; it is found by repeatedly taking
// the smallest left descent.

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "alcove/root_datum.hpp"
#include "alcove/types.hpp"

namespace alcove {

struct WeylElement {
  const RootDatum* rd = nullptr;
  IMat rmat, rinv;  // action and inverse action on root coordinates
  IMat cmat, cinv;  // action and inverse action on coweight coordinates
  i64 len = 0;
  std::vector<int> word;  // canonical reduced word, letters 1..rank

  bool operator==(const WeylElement& o) const { return rmat == o.rmat; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool is_identity() const { return len == 0; }
};

WeylElement weyl_identity(const RootDatum& rd);
WeylElement weyl_simple(const RootDatum& rd, int i);
WeylElement weyl_reflection(const RootDatum& rd, const Root& beta);
WeylElement weyl_from_word(const RootDatum& rd, const std::vector<int>& word);
// Rebuild an element from its action matrices (computes length and word).
WeylElement weyl_from_mats(const RootDatum& rd, IMat rmat, IMat rinv, IMat cmat, IMat cinv);

WeylElement compose(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& w);

Root apply(const WeylElement& w, const Root& r);
Coweight apply(const WeylElement& w, const Coweight& c);

// Right descents: w(alpha_i) < 0. Left descents: w^{-1}(alpha_i) < 0.
enum class Side { Left, Right };
std::vector<int> descents(const WeylElement& w, Side side);
bool is_descent(const WeylElement& w, int i, Side side);

bool bruhat_leq(const WeylElement& x, const WeylElement& y);

// Minimal representative of W_J * w (Side::Left) or w * W_J (Side::Right).
WeylElement coset_min(const WeylElement& w, const std::set<int>& J, Side side);
WeylElement coset_max(const WeylElement& w, const std::set<int>& J, Side side);
WeylElement longest_element(const RootDatum& rd, const std::set<int>& J);

std::set<int> support(const WeylElement& w);

// Order elements by (length, canonical word); a deterministic total order.
bool word_less(const WeylElement& a, const WeylElement& b);

std::string word_string(const std::vector<int>& word);

// Closure of a generating set, with a size cap (exceeding it is an error).
std::vector<WeylElement> subgroup_closure(const std::vector<WeylElement>& gens, size_t cap);

struct WeylElementHash {
  size_t operator()(const WeylElement& w) const { return fnv1a(w.rmat.a); }
};

// Fully enumerated Weyl group with index-based multiplication tables and a
// memoized Bruhat order; elements are sorted by (length, word).
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& rd);
  // Construct from a previously enumerated element list (a warm cache). The
  // list must be the full group sorted by (length, word); this is validated.
  WeylGroup(const RootDatum& rd, std::vector<WeylElement> elems);

  const RootDatum& datum() const { return *rd_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const WeylElement& at(int idx) const { return elems_[idx]; }
  int index_of(const WeylElement& w) const;
  int mult_right(int idx, int i) const { return right_[idx][i - 1]; }  // w * s_i
  int mult_left(int idx, int i) const { return left_[idx][i - 1]; }    // s_i * w
  int mult(int a, int b) const;  // general product by element lookup
  int inverse(int idx) const { return inv_[idx]; }
  i64 length(int idx) const { return elems_[idx].len; }
  int longest_index() const { return longest_; }
  bool leq(int x, int y) const;  // Bruhat order

 private:
  void build_tables();

  const RootDatum* rd_;
  std::vector<WeylElement> elems_;
  std::unordered_map<WeylElement, int, WeylElementHash> index_;
  std::vector<std::vector<int>> right_, left_;
  std::vector<int> inv_;
  int longest_ = 0;
  mutable std::unordered_map<std::uint64_t, bool> leq_memo_;
};

// Double cosets H \ W / W_J where H is given by generators (not necessarily
// parabolic) and J is a set of simple indices. Returns the minimal
// representative of each double coset, ordered by (length, word).
std::vector<WeylElement> double_coset_reps(const WeylGroup& W, const std::vector<WeylElement>& left_gens,
                                           const std::set<int>& right_J);

}  // namespace alcove
