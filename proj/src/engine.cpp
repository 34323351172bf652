#include "coxalt/engine.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>

namespace coxalt {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

RootSystem build_roots(const CoxeterSystem& sys, int root_cap) {
  for (const auto& [ij, m] : sys.bonds())
    if (!bond_finite(m))
      throw Error("INFINITE_BOND: root closure requires all bonds finite");
  if (root_cap < 1) throw Error("root cap must be positive");

  RootSystem rs;
  rs.sys = sys;
  rs.ctx = std::make_shared<AlgebraicContext>(sys.finite_bond_orders());
  const AlgebraicContext* ctx = rs.ctx.get();
  int n = sys.rank();

  // 2B(alpha_i, alpha_j) = -2cos(pi/m_ij) off the diagonal, 2 on it.
  std::vector<std::vector<AlgNum>> gram2(n, std::vector<AlgNum>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram2[i][j] = (i == j) ? AlgNum::integer(ctx, 2)
                             : -AlgNum::two_cos(ctx, sys.bond(i, j));

  std::map<std::vector<AlgNum>, int> index;
  for (int i = 0; i < n; ++i) {
    std::vector<AlgNum> alpha(n, AlgNum::integer(ctx, 0));
    alpha[i] = AlgNum::integer(ctx, 1);
    index[alpha] = i;
    rs.roots.push_back(std::move(alpha));
    rs.simple.push_back(i);
    rs.via_gen.push_back(-1);
    rs.via_parent.push_back(-1);
  }

  rs.action.assign(n, {});
  size_t done = 0;
  while (done < rs.roots.size()) {
    int k = static_cast<int>(done++);
    for (int i = 0; i < n; ++i) {
      if (rs.action[i].size() <= static_cast<size_t>(k))
        rs.action[i].resize(rs.roots.size(), -2);
      // s_i(beta) = beta - 2B(alpha_i, beta) alpha_i
      std::vector<AlgNum> image = rs.roots[k];
      AlgNum coeff(ctx);
      for (int j = 0; j < n; ++j) coeff += gram2[i][j] * rs.roots[k][j];
      image[i] -= coeff;

      if (k == i) {  // s_i(alpha_i) = -alpha_i, the only sign change
        rs.action[i][k] = kNegated;
        continue;
      }
      auto it = index.find(image);
      int target;
      if (it != index.end()) {
        target = it->second;
      } else {
        target = static_cast<int>(rs.roots.size());
        if (target >= root_cap)
          throw Error("CAP_EXCEEDED: positive-root closure exceeds cap (group infinite or too large)");
        index[image] = target;
        rs.roots.push_back(image);
        rs.via_gen.push_back(i);
        rs.via_parent.push_back(k);
      }
      rs.action[i][k] = target;
    }
  }
  for (int i = 0; i < n; ++i) rs.action[i].resize(rs.roots.size(), -2);

  // orbits of the W-action on roots modulo sign = reflection conjugacy classes
  UnionFind uf(rs.num_roots());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < rs.num_roots(); ++k)
      if (rs.action[i][k] != kNegated) uf.unite(k, rs.action[i][k]);
  rs.orbit.assign(rs.num_roots(), -1);
  for (int k = 0; k < rs.num_roots(); ++k) {
    int r = uf.find(k);
    if (rs.orbit[r] < 0) rs.orbit[r] = rs.orbit_count++;
    rs.orbit[k] = rs.orbit[r];
  }
  rs.t_hat_orbit.assign(rs.orbit_count, false);
  for (int j = 1; j < n; ++j) rs.t_hat_orbit[rs.orbit[j]] = true;
  return rs;
}

GroupElement GroupElement::identity(int num_roots) {
  GroupElement e;
  e.img_.resize(num_roots);
  for (int k = 0; k < num_roots; ++k) e.img_[k] = k + 1;
  return e;
}

int GroupElement::length() const {
  int len = 0;
  for (int32_t v : img_)
    if (v < 0) ++len;
  return len;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.size() != b.size())
    throw Error("elements live over mismatched root systems");
  GroupElement r;
  r.img_.resize(b.img_.size());
  for (size_t k = 0; k < b.img_.size(); ++k) {
    int32_t bv = b.img_[k];
    int32_t av = a.img_[(bv > 0 ? bv : -bv) - 1];
    r.img_[k] = bv > 0 ? av : -av;
  }
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r;
  r.img_.resize(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) {
    int32_t v = img_[k];
    int target = (v > 0 ? v : -v) - 1;
    r.img_[target] = v > 0 ? static_cast<int32_t>(k + 1) : -static_cast<int32_t>(k + 1);
  }
  return r;
}

GroupElement generator_element(const RootSystem& rs, int i) {
  GroupElement g;
  g.img_.resize(rs.num_roots());
  for (int k = 0; k < rs.num_roots(); ++k) {
    int t = rs.action[i][k];
    g.img_[k] = (t == kNegated) ? -(k + 1) : t + 1;
  }
  return g;
}

GroupTable::GroupTable(std::shared_ptr<const RootSystem> rs, int element_cap)
    : rs_(std::move(rs)) {
  int n = rank();
  std::vector<GroupElement> gens;
  for (int i = 0; i < n; ++i) gens.push_back(generator_element(*rs_, i));

  elems_.push_back(GroupElement::identity(rs_->num_roots()));
  index_[elems_[0]] = 0;
  length_.push_back(0);
  for (size_t w = 0; w < elems_.size(); ++w) {
    right_.emplace_back(n, -1);
    for (int i = 0; i < n; ++i) {
      GroupElement ws = compose(elems_[w], gens[i]);
      auto it = index_.find(ws);
      int target;
      if (it != index_.end()) {
        target = it->second;
      } else {
        target = static_cast<int>(elems_.size());
        if (target >= element_cap)
          throw Error("CAP_EXCEEDED: group enumeration exceeds cap");
        index_[ws] = target;
        elems_.push_back(std::move(ws));
        length_.push_back(elems_[target].length());
      }
      right_[w][i] = target;
    }
  }

  left_.assign(size(), std::vector<int>(n, -1));
  inverse_.assign(size(), -1);
  for (int w = 0; w < size(); ++w) {
    inverse_[w] = index_.at(elems_[w].inverse());
    for (int i = 0; i < n; ++i)
      left_[w][i] = index_.at(compose(gens[i], elems_[w]));
  }

  // nu by 0/1-weight shortest path: appending s_i on the right costs 0 for
  // s_0 and 1 otherwise
  nu_.assign(size(), -1);
  std::deque<int> dq{0};
  nu_[0] = 0;
  while (!dq.empty()) {
    int w = dq.front();
    dq.pop_front();
    for (int i = 0; i < n; ++i) {
      int v = right_[w][i];
      int cost = i == 0 ? 0 : 1;
      if (nu_[v] < 0 || nu_[w] + cost < nu_[v]) {
        nu_[v] = nu_[w] + cost;
        if (cost == 0)
          dq.push_front(v);
        else
          dq.push_back(v);
      }
    }
  }

  // reflection elements, walked along the closure forest
  reflection_of_root_.assign(rs_->num_roots(), -1);
  for (int k = 0; k < rs_->num_roots(); ++k) {
    if (rs_->via_gen[k] < 0) {
      reflection_of_root_[k] = right_[0][k];  // simple reflection s_k
    } else {
      int i = rs_->via_gen[k];
      int t = reflection_of_root_[rs_->via_parent[k]];
      reflection_of_root_[k] = left_[right_[t][i]][i];
    }
  }
}

int GroupTable::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw Error("element not in this group table");
  return it->second;
}

int GroupTable::multiply(int a, int b) const {
  return index_.at(compose(elems_[a], elems_[b]));
}

int GroupTable::apply_word(const Word& word) const {
  int w = 0;
  for (int i : word) {
    if (i < 0 || i >= rank()) throw Error("word letter out of range");
    w = right_[w][i];
  }
  return w;
}

int GroupTable::ell0(int w) const {
  if (!evenly_laced())
    throw Error("EVENLY_LACED_REQUIRED: ell0 needs every m_{0i} even or inf");
  // count of s_0 in a reduced word; the identity ell0 == ell_S - nu is left
  // to the verification suite as a cross-check of this independent route
  int count = 0;
  for (int i : canonical_word(w))
    if (i == 0) ++count;
  return count;
}

std::vector<int> GroupTable::right_descents(int w) const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    if (elems_[w].negates(i)) out.push_back(i);
  return out;
}

std::vector<int> GroupTable::left_descents(int w) const {
  std::vector<int> out;
  const GroupElement inv = elems_[w].inverse();
  for (int i = 0; i < rank(); ++i)
    if (inv.negates(i)) out.push_back(i);
  return out;
}

Word GroupTable::canonical_word(int w) const {
  // lexicographically smallest reduced word: greedily take the smallest
  // left descent
  Word word;
  while (w != 0) {
    int i = left_descents(w).front();
    word.push_back(i);
    w = left_[w][i];
  }
  return word;
}

std::string GroupTable::display(int w) const {
  if (w == 0) return "e";
  std::ostringstream out;
  bool first = true;
  for (int i : canonical_word(w)) {
    if (!first) out << ".";
    out << sys().label(i);
    first = false;
  }
  return out.str();
}

const std::vector<Word>& GroupTable::all_reduced_words(int w) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return reduced_words_locked(w);
}

const std::vector<Word>& GroupTable::reduced_words_locked(int w) const {
  auto it = reduced_words_.find(w);
  if (it != reduced_words_.end()) return it->second;
  std::vector<Word> words;
  if (w == 0) {
    words.push_back({});
  } else {
    for (int i : left_descents(w)) {
      for (const Word& tail : reduced_words_locked(left_[w][i])) {
        Word word;
        word.reserve(tail.size() + 1);
        word.push_back(i);
        word.insert(word.end(), tail.begin(), tail.end());
        words.push_back(std::move(word));
      }
    }
  }
  return reduced_words_.emplace(w, std::move(words)).first->second;
}

std::vector<int> GroupTable::t_left(int w) const {
  std::vector<int> out;
  const GroupElement inv = elems_[w].inverse();
  for (int k = 0; k < rs_->num_roots(); ++k)
    if (inv.negates(k)) out.push_back(k);
  return out;
}

std::vector<int> GroupTable::t_hat_left(int w) const {
  std::vector<int> out;
  for (int k : t_left(w))
    if (rs_->in_t_hat(k)) out.push_back(k);
  return out;
}

int GroupTable::root_of_reflection(int w) const {
  for (int k = 0; k < rs_->num_roots(); ++k)
    if (reflection_of_root_[k] == w) return k;
  return -1;
}

void GroupTable::build_bruhat() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!bruhat_covers_.empty()) return;
  int N = size();
  bruhat_covers_.assign(N, {});
  size_t words = (N + 63) / 64;
  bruhat_leq_.assign(N, std::vector<uint64_t>(words, 0));

  std::vector<int> by_length(N);
  for (int w = 0; w < N; ++w) by_length[w] = w;
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](int a, int b) { return length_[a] < length_[b]; });

  for (int u = 0; u < N; ++u) bruhat_leq_[u][u / 64] |= 1ull << (u % 64);
  for (int u : by_length) {
    for (int k = 0; k < rs_->num_roots(); ++k) {
      int w = multiply(reflection_of_root_[k], u);
      if (length_[w] == length_[u] + 1) {
        bruhat_covers_[u].push_back(w);
        for (size_t q = 0; q < words; ++q) bruhat_leq_[w][q] |= bruhat_leq_[u][q];
      }
    }
  }
}

bool GroupTable::bruhat_leq(int u, int w) const {
  build_bruhat();
  return (bruhat_leq_[w][u / 64] >> (u % 64)) & 1;
}

const std::vector<std::vector<int>>& GroupTable::bruhat_covers() const {
  build_bruhat();
  return bruhat_covers_;
}

std::pair<int, int> GroupTable::parabolic_decompose(int w, const std::set<int>& J) const {
  int rep = w, part = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J) {
      if (elems_[rep].negates(i)) {  // right descent at i
        rep = right_[rep][i];
        part = left_[part][i];
        moved = true;
        break;
      }
    }
  }
  return {rep, part};
}

std::vector<int> GroupTable::min_coset_reps(const std::set<int>& J) const {
  std::vector<int> reps;
  for (int w = 0; w < size(); ++w) {
    bool min_rep = true;
    for (int i : J)
      if (elems_[w].negates(i)) min_rep = false;
    if (min_rep) reps.push_back(w);
  }
  return reps;
}

bool GroupTable::evenly_laced() const {
  return classify_node(sys()).evenly_laced;
}

int GroupTable::longest_element() const {
  int best = 0;
  for (int w = 0; w < size(); ++w)
    if (length_[w] > length_[best]) best = w;
  return best;
}

std::vector<int> word_length_bfs(const GroupTable& g, const std::vector<int>& gens) {
  std::vector<int> dist(g.size(), -1);
  std::queue<int> q;
  dist[g.identity()] = 0;
  q.push(g.identity());
  while (!q.empty()) {
    int w = q.front();
    q.pop();
    for (int s : gens) {
      int v = g.multiply(w, s);
      if (dist[v] < 0) {
        dist[v] = dist[w] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

}  // namespace coxalt
