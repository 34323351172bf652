#include "coxalt/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace coxalt {

std::string flavor_name(OrderFlavor f) {
  switch (f) {
    case OrderFlavor::LeftWeak: return "left-weak";
    case OrderFlavor::RightWeak: return "right-weak";
    case OrderFlavor::LeftStrong: return "left-strong";
    case OrderFlavor::RightStrong: return "right-strong";
  }
  return "?";
}

OrderFlavor flavor_from_name(const std::string& name) {
  if (name == "left-weak") return OrderFlavor::LeftWeak;
  if (name == "right-weak") return OrderFlavor::RightWeak;
  if (name == "left-strong") return OrderFlavor::LeftStrong;
  if (name == "right-strong") return OrderFlavor::RightStrong;
  throw Error("unknown order flavor '" + name + "'");
}

void Poset::add_relation(int lo, int hi) {
  if (finalized_) throw Error("poset already finalized");
  edges_.emplace_back(lo, hi);
}

void Poset::finalize() {
  size_t words = (n_ + 63) / 64;
  leq_.assign(n_, std::vector<uint64_t>(words, 0));
  std::vector<std::vector<int>> up(n_);
  std::vector<int> indeg(n_, 0);
  for (auto [a, b] : edges_) {
    up[a].push_back(b);
    ++indeg[b];
  }
  // reach sets in reverse topological order (relations always increase
  // ell_R, so the edge graph is acyclic)
  std::vector<int> topo;
  std::queue<int> q;
  for (int v = 0; v < n_; ++v)
    if (indeg[v] == 0) q.push(v);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    topo.push_back(v);
    for (int w : up[v])
      if (--indeg[w] == 0) q.push(w);
  }
  if (static_cast<int>(topo.size()) != n_) throw Error("order relation has a cycle");
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    leq_[v][v / 64] |= 1ull << (v % 64);
    for (int w : up[v])
      for (size_t k = 0; k < words; ++k) leq_[v][k] |= leq_[w][k];
  }

  covers_.clear();
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n_ && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) covers_.emplace_back(a, b);
    }
  }
  finalized_ = true;
}

bool Poset::leq(int a, int b) const {
  return (leq_[a][b / 64] >> (b % 64)) & 1;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    bool maximal = true;
    for (int w = 0; w < n_ && maximal; ++w)
      if (w != v && leq(v, w)) maximal = false;
    if (maximal) out.push_back(v);
  }
  return out;
}

Poset build_order(const AltGroup& alt, OrderFlavor flavor) {
  Poset poset(alt.size(), flavor);
  bool left = flavor == OrderFlavor::LeftWeak || flavor == OrderFlavor::LeftStrong;
  bool weak = flavor == OrderFlavor::LeftWeak || flavor == OrderFlavor::RightWeak;
  if (weak) {
    for (int p = 0; p < alt.size(); ++p)
      for (const AltLetter& l : alt.letters()) {
        int q = left ? alt.left_letter(p, l) : alt.right_letter(p, l);
        if (alt.ell_r(q) == alt.ell_r(p) + 1) poset.add_relation(p, q);
      }
  } else {
    std::vector<int> pals = alt.palindromes();
    for (int p = 0; p < alt.size(); ++p)
      for (int pal : pals) {
        int q = left ? alt.multiply(pal, p) : alt.multiply(p, pal);
        if (alt.ell_r(q) > alt.ell_r(p)) poset.add_relation(p, q);
      }
  }
  poset.finalize();
  return poset;
}

OrderReport order_properties(const Poset& poset, const AltGroup& alt) {
  OrderReport rep;
  std::ostringstream detail;
  int n = poset.size();

  std::vector<std::vector<int>> cover_up(n), cover_down(n);
  for (auto [a, b] : poset.covers()) {
    cover_up[a].push_back(b);
    cover_down[b].push_back(a);
    if (alt.ell_r(b) != alt.ell_r(a) + 1) rep.weak_covers_step_one = false;
  }

  // gradedness: all maximal chains (minimal element to maximal element along
  // covers) have the same length
  std::vector<int> down_min(n, -1), down_max(n, -1);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return alt.ell_r(a) < alt.ell_r(b); });
  for (int v : order) {
    if (cover_down[v].empty()) {
      down_min[v] = down_max[v] = 0;
      continue;
    }
    for (int u : cover_down[v]) {
      if (down_min[v] < 0 || down_min[u] + 1 < down_min[v]) down_min[v] = down_min[u] + 1;
      if (down_max[u] + 1 > down_max[v]) down_max[v] = down_max[u] + 1;
    }
  }
  std::vector<int> maxima = poset.maximal_elements();
  int chain = down_max[maxima.front()];
  for (int v = 0; v < n; ++v)
    if (down_min[v] != down_max[v]) {
      rep.graded = false;
      detail << "chains to " << alt.display(v) << " have lengths " << down_min[v]
             << ".." << down_max[v] << "; ";
      break;
    }
  for (int m : maxima)
    if (down_max[m] != chain) rep.graded = false;
  rep.chain_length = chain;

  // meet-semilattice: distinct elements of equal ell_R are incomparable, so a
  // greatest lower bound exists iff the set of common lower bounds has a
  // single element of maximal ell_R dominating all others
  for (int a = 0; a < n && rep.meet_semilattice; ++a) {
    for (int b = a + 1; b < n && rep.meet_semilattice; ++b) {
      std::vector<int> lower;
      int top = -1;
      bool tie = false;
      for (int z = 0; z < n; ++z) {
        if (!poset.leq(z, a) || !poset.leq(z, b)) continue;
        lower.push_back(z);
        if (top < 0 || alt.ell_r(z) > alt.ell_r(top)) {
          top = z;
          tie = false;
        } else if (alt.ell_r(z) == alt.ell_r(top)) {
          tie = true;
        }
      }
      bool has_meet = !tie;
      if (has_meet)
        for (int z : lower)
          if (!poset.leq(z, top)) has_meet = false;
      if (!has_meet) {
        rep.meet_semilattice = false;
        detail << "no meet for " << alt.display(a) << ", " << alt.display(b) << "; ";
      }
    }
  }

  // heights in the cover graph, for locating rank-2 filters and ideals
  std::vector<int> height_up(n, 0), height_down(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int w : cover_up[*it])
      height_up[*it] = std::max(height_up[*it], height_up[w] + 1);
  for (int v : order)
    for (int u : cover_down[v])
      height_down[v] = std::max(height_down[v], height_down[u] + 1);

  // thinness: closed intervals of rank 2 must have exactly 4 elements, and so
  // must principal filters and ideals of rank 2.  An interval [x,y] has
  // longest chain 2 exactly when its interior is a nonempty antichain.
  for (int x = 0; x < n && rep.thin; ++x) {
    for (int y = 0; y < n && rep.thin; ++y) {
      if (x == y || !poset.leq(x, y)) continue;
      std::vector<int> inside;
      for (int z = 0; z < n; ++z)
        if (z != x && z != y && poset.leq(x, z) && poset.leq(z, y)) inside.push_back(z);
      if (inside.empty()) continue;
      bool antichain = true;
      for (size_t i = 0; i < inside.size() && antichain; ++i)
        for (size_t j = i + 1; j < inside.size() && antichain; ++j)
          if (poset.leq(inside[i], inside[j]) || poset.leq(inside[j], inside[i]))
            antichain = false;
      if (antichain && inside.size() != 2) {
        rep.thin = false;
        detail << "interval [" << alt.display(x) << ", " << alt.display(y) << "] has "
               << inside.size() + 2 << " elements; ";
      }
    }
  }
  for (int x = 0; x < n && rep.thin; ++x) {
    int filter = 0, ideal = 0;
    for (int z = 0; z < n; ++z) {
      if (poset.leq(x, z)) ++filter;
      if (poset.leq(z, x)) ++ideal;
    }
    if (height_up[x] == 2 && filter != 4) {
      rep.thin = false;
      detail << "rank-2 upper set at " << alt.display(x) << " has " << filter
             << " elements; ";
    }
    if (height_down[x] == 2 && ideal != 4) {
      rep.thin = false;
      detail << "rank-2 lower set at " << alt.display(x) << " has " << ideal
             << " elements; ";
    }
  }

  rep.unique_max = maxima.size() == 1;
  if (rep.unique_max) rep.max_element = maxima.front();
  rep.detail = detail.str();
  return rep;
}

bool strong_subword_leq(const AltGroup& alt, int u, int w, bool left_sided) {
  // left strong order: letters with an odd number of deletions to their
  // right get inverted; right strong order counts deletions to the left
  AltWord word = alt.canonical_r_word(w);
  size_t len = word.size();
  int target_len = alt.ell_r(u);
  for (uint64_t mask = 0; mask < (1ull << len); ++mask) {
    if (__builtin_popcountll(mask) != static_cast<int>(len) - target_len) continue;
    AltWord sub;
    std::vector<int> deleted_right(len + 1, 0), deleted_left(len + 1, 0);
    for (int a = static_cast<int>(len) - 1; a >= 0; --a)
      deleted_right[a] = deleted_right[a + 1] + ((mask >> a) & 1);
    for (size_t a = 1; a <= len; ++a)
      deleted_left[a] = deleted_left[a - 1] + ((mask >> (a - 1)) & 1);
    for (size_t a = 0; a < len; ++a) {
      if ((mask >> a) & 1) continue;
      AltLetter l = word[a];
      int toggles = left_sided ? deleted_right[a + 1] : deleted_left[a];
      if (toggles % 2 == 1) l = alt.letter_inverse(l);
      sub.push_back(l);
    }
    if (static_cast<int>(sub.size()) == target_len && alt.eval(sub) == u) return true;
  }
  return false;
}

std::string poset_dot(const AltGroup& alt, OrderFlavor flavor) {
  Poset poset = build_order(alt, flavor);
  bool strong = flavor == OrderFlavor::LeftStrong || flavor == OrderFlavor::RightStrong;
  std::set<std::pair<int, int>> weak_covers;
  if (strong) {
    OrderFlavor wf = flavor == OrderFlavor::LeftStrong ? OrderFlavor::LeftWeak
                                                       : OrderFlavor::RightWeak;
    Poset weak = build_order(alt, wf);
    weak_covers.insert(weak.covers().begin(), weak.covers().end());
  }
  std::ostringstream out;
  out << "digraph \"" << flavor_name(flavor) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (int p = 0; p < alt.size(); ++p)
    out << "  n" << p << " [label=\"" << alt.display(p) << "\"];\n";
  std::vector<std::pair<int, int>> covers = poset.covers();
  std::sort(covers.begin(), covers.end());
  for (auto [a, b] : covers) {
    out << "  n" << a << " -> n" << b;
    if (strong && weak_covers.count({a, b}) == 0) out << " [style=dotted]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace coxalt
