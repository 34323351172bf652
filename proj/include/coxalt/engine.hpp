// Exact element arithmetic for a finite Coxeter group, realized through the
// signed permutation action on the set of positive roots of the geometric
// representation.

#ifndef COXALT_ENGINE_HPP
#define COXALT_ENGINE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "coxalt/algnum.hpp"
#include "coxalt/coxsys.hpp"

namespace coxalt {

constexpr int kNegated = -1;

// Positive-root closure of the geometric representation, with the generator
// action table and the partition of roots into reflection conjugacy orbits.
struct RootSystem {
  CoxeterSystem sys;
  std::shared_ptr<AlgebraicContext> ctx;
  // coordinates of each positive root in the simple-root basis
  std::vector<std::vector<AlgNum>> roots;
  // action[i][k]: index of s_i(beta_k), or kNegated (only when k == simple[i])
  std::vector<std::vector<int>> action;
  std::vector<int> simple;  // simple[i] == i by construction
  std::vector<int> orbit;   // conjugacy orbit id per positive root
  int orbit_count = 0;
  // closure forest: roots[k] == s_{via_gen[k]}(roots[via_parent[k]]) for
  // non-simple roots; used to express the reflection in roots[k]
  std::vector<int> via_gen, via_parent;

  int rank() const { return sys.rank(); }
  int num_roots() const { return static_cast<int>(roots.size()); }
  // true when the orbit of this root contains a simple root alpha_j, j >= 1
  bool in_t_hat(int root) const { return t_hat_orbit[orbit[root]]; }
  std::vector<bool> t_hat_orbit;
};

RootSystem build_roots(const CoxeterSystem& sys, int root_cap = 10000);

// A group element as a signed permutation of positive roots.  img[k] holds
// (index+1) when beta_k maps to a positive root and -(index+1) when it maps
// to the negative of that root.
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement identity(int num_roots);

  int size() const { return static_cast<int>(img_.size()); }
  int image(int k) const { int v = img_[k]; return (v > 0 ? v : -v) - 1; }
  bool negates(int k) const { return img_[k] < 0; }

  int length() const;  // number of positive roots sent negative

  bool operator==(const GroupElement& o) const { return img_ == o.img_; }
  bool operator<(const GroupElement& o) const { return img_ < o.img_; }

  friend GroupElement compose(const GroupElement& a, const GroupElement& b);
  GroupElement inverse() const;

 private:
  std::vector<int32_t> img_;
  friend GroupElement generator_element(const RootSystem& rs, int i);
};

// (a * b)(beta) = a(b(beta)): the group product under the left action.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement generator_element(const RootSystem& rs, int i);

using Word = std::vector<int>;  // generator indices

// The fully enumerated group with the derived combinatorial tables.
class GroupTable {
 public:
  GroupTable(std::shared_ptr<const RootSystem> rs, int element_cap = 100000);

  const RootSystem& roots() const { return *rs_; }
  const CoxeterSystem& sys() const { return rs_->sys; }
  int rank() const { return rs_->rank(); }
  int size() const { return static_cast<int>(elems_.size()); }

  const GroupElement& element(int w) const { return elems_[w]; }
  int index_of(const GroupElement& g) const;
  int identity() const { return 0; }

  int length(int w) const { return length_[w]; }
  int nu(int w) const { return nu_[w]; }
  // number of occurrences of s0 in a reduced word; requires s0 evenly-laced
  int ell0(int w) const;

  int right(int w, int i) const { return right_[w][i]; }
  int left(int w, int i) const { return left_[w][i]; }
  int inverse(int w) const { return inverse_[w]; }
  int multiply(int a, int b) const;
  int apply_word(const Word& word) const;

  Word canonical_word(int w) const;
  std::string display(int w) const;  // canonical word with labels, "e" for identity
  const std::vector<Word>& all_reduced_words(int w) const;

  std::vector<int> right_descents(int w) const;
  std::vector<int> left_descents(int w) const;

  // left-shortening reflections as root indices: {beta > 0 : w^{-1}(beta) < 0}
  std::vector<int> t_left(int w) const;
  std::vector<int> t_hat_left(int w) const;
  int reflection(int root) const { return reflection_of_root_[root]; }
  int root_of_reflection(int w) const;  // -1 when w is not a reflection

  bool bruhat_leq(int u, int w) const;
  const std::vector<std::vector<int>>& bruhat_covers() const;  // covers[u] = elements covering u

  // w = w^J * w_J with w^J free of right descents in J; returns indices
  std::pair<int, int> parabolic_decompose(int w, const std::set<int>& J) const;
  // minimum-length coset representatives W^J in BFS order
  std::vector<int> min_coset_reps(const std::set<int>& J) const;

  bool evenly_laced() const;
  int longest_element() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<GroupElement> elems_;
  std::map<GroupElement, int> index_;
  std::vector<int> length_;
  std::vector<std::vector<int>> right_, left_;
  std::vector<int> inverse_;
  std::vector<int> nu_;
  std::vector<int> reflection_of_root_;
  // lazily built caches, guarded so concurrent readers stay safe
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::vector<int>> bruhat_covers_;
  mutable std::vector<std::vector<uint64_t>> bruhat_leq_;
  mutable std::map<int, std::vector<Word>> reduced_words_;
  void build_bruhat() const;
  const std::vector<Word>& reduced_words_locked(int w) const;
};

// Unit-weight BFS distance from the identity over right multiplication by the
// generators listed in gens (as element indices); the independent route to
// word lengths over alternative generating sets.
std::vector<int> word_length_bfs(const GroupTable& g, const std::vector<int>& gens);

}  // namespace coxalt

#endif
