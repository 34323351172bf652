// Weak and strong partial orders on W+ and their structural analyzers.

#ifndef COXALT_POSET_HPP
#define COXALT_POSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coxalt/altgrp.hpp"

namespace coxalt {

enum class OrderFlavor { LeftWeak, RightWeak, LeftStrong, RightStrong };

std::string flavor_name(OrderFlavor f);
OrderFlavor flavor_from_name(const std::string& name);

class Poset {
 public:
  Poset(int n, OrderFlavor flavor) : flavor_(flavor), n_(n) {}

  int size() const { return n_; }
  OrderFlavor flavor() const { return flavor_; }

  void add_relation(int lo, int hi);  // before finalize
  void finalize();                    // transitive closure + cover reduction

  bool leq(int a, int b) const;
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<int> maximal_elements() const;

 private:
  OrderFlavor flavor_;
  int n_;
  std::vector<std::pair<int, int>> edges_;  // raw relations
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<uint64_t>> leq_;
  bool finalized_ = false;
};

Poset build_order(const AltGroup& alt, OrderFlavor flavor);

struct OrderReport {
  bool graded = true;
  int chain_length = 0;             // common maximal-chain length when graded
  bool weak_covers_step_one = true; // every cover raises ell_R by exactly 1
  bool meet_semilattice = true;
  bool thin = true;                 // rank-2 intervals and principal filters/ideals have 4 elements
  bool unique_max = false;
  int max_element = -1;             // when unique
  std::string detail;
};

OrderReport order_properties(const Poset& poset, const AltGroup& alt);

// Does u <= w hold in the relation "subword with inversion-toggling deletions"
// that characterizes the strong orders when s0 is evenly-laced?  The left
// strong order toggles on deletions to the right, the right one on deletions
// to the left.
bool strong_subword_leq(const AltGroup& alt, int u, int w, bool left_sided = true);

// DOT rendering following the convention of the ordering figures: covers of
// the requested order, dotted when the cover is strong-only.
std::string poset_dot(const AltGroup& alt, OrderFlavor flavor);

}  // namespace coxalt

#endif
