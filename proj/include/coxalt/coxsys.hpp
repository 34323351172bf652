// Coxeter systems: parsing, validation, node classification, and the derived
// system (W',S') attached to an even leaf.

#ifndef COXALT_COXSYS_HPP
#define COXALT_COXSYS_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxalt {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bond order m_ij; infinity is representable but rejected by any operation
// that needs a finite group.
constexpr int kInfiniteBond = -1;
inline bool bond_finite(int m) { return m != kInfiniteBond; }

class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  explicit CoxeterSystem(int rank);

  int rank() const { return rank_; }
  int bond(int i, int j) const;
  void set_bond(int i, int j, int m);
  const std::map<std::pair<int, int>, int>& bonds() const { return bonds_; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  const std::string& label(int i) const { return labels_[i]; }

  std::set<int> finite_bond_orders() const;
  bool all_bonds_finite() const;

  bool operator==(const CoxeterSystem& o) const {
    return rank_ == o.rank_ && bonds_ == o.bonds_;
  }

 private:
  int rank_ = 0;
  std::map<std::pair<int, int>, int> bonds_;  // only pairs with m != 2, i < j
  std::vector<std::string> labels_;
};

struct NodeClass {
  bool evenly_laced = false;
  bool leaf = false;
  bool even_leaf = false;
  // index of the unique non-commuting neighbor of s0, when leaf
  std::optional<int> neighbor;
};

// Result of derive_prime: the system on S' = {t1', t1, ..., tn} with t1' in
// slot 0 and t_j in slot j, so that slot 0 is the fresh generator.
struct DerivedSystem {
  CoxeterSystem sys;
  int t1_prime_index = 0;
};

CoxeterSystem parse_system(const std::string& text);
std::string serialize_system(const CoxeterSystem& sys);

NodeClass classify_node(const CoxeterSystem& sys);
DerivedSystem derive_prime(const CoxeterSystem& sys);

}  // namespace coxalt

#endif
