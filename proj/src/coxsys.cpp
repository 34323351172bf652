#include "coxalt/coxsys.hpp"

#include <algorithm>
#include <sstream>

namespace coxalt {

CoxeterSystem::CoxeterSystem(int rank) : rank_(rank) {
  if (rank < 1) throw Error("rank must be at least 1");
  labels_.resize(rank);
  for (int i = 0; i < rank; ++i) labels_[i] = "s" + std::to_string(i);
}

int CoxeterSystem::bond(int i, int j) const {
  if (i == j) throw Error("bond requires distinct indices");
  if (i > j) std::swap(i, j);
  auto it = bonds_.find({i, j});
  return it == bonds_.end() ? 2 : it->second;
}

void CoxeterSystem::set_bond(int i, int j, int m) {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw Error("generator index out of range");
  if (i == j) throw Error("bond requires distinct indices");
  if (bond_finite(m) && m < 2) throw Error("bond order must be >= 2 or inf");
  if (i > j) std::swap(i, j);
  if (m == 2)
    bonds_.erase({i, j});
  else
    bonds_[{i, j}] = m;
}

void CoxeterSystem::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != rank_)
    throw Error("label count must equal rank");
  labels_ = std::move(labels);
}

std::set<int> CoxeterSystem::finite_bond_orders() const {
  std::set<int> orders;
  for (const auto& [ij, m] : bonds_)
    if (bond_finite(m)) orders.insert(m);
  return orders;
}

bool CoxeterSystem::all_bonds_finite() const {
  for (const auto& [ij, m] : bonds_)
    if (!bond_finite(m)) return false;
  return true;
}

CoxeterSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<CoxeterSystem> sys;
  std::map<std::pair<int, int>, int> seen;

  auto fail = [&](const std::string& msg) {
    throw Error("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;

    if (word.rfind("n=", 0) == 0) {
      if (sys) fail("duplicate n= declaration");
      int n = 0;
      try {
        n = std::stoi(word.substr(2));
      } catch (...) {
        fail("malformed n= declaration");
      }
      if (n < 1) fail("rank must be at least 1");
      std::string rest;
      if (ls >> rest) fail("trailing text after n=");
      sys.emplace(n);
    } else if (word == "labels") {
      if (!sys) fail("labels before n=");
      std::vector<std::string> labels;
      std::string lab;
      while (ls >> lab) labels.push_back(lab);
      if (static_cast<int>(labels.size()) != sys->rank())
        fail("expected " + std::to_string(sys->rank()) + " labels");
      sys->set_labels(std::move(labels));
    } else if (word == "m") {
      if (!sys) fail("bond before n=");
      int i, j;
      std::string ord;
      if (!(ls >> i >> j >> ord)) fail("malformed bond line");
      std::string rest;
      if (ls >> rest) fail("trailing text on bond line");
      if (i < 0 || j < 0 || i >= sys->rank() || j >= sys->rank())
        fail("generator index out of range");
      if (i == j) fail("bond requires distinct indices");
      int m;
      if (ord == "inf") {
        m = kInfiniteBond;
      } else {
        try {
          m = std::stoi(ord);
        } catch (...) {
          fail("malformed bond order");
          m = 0;
        }
        if (m < 2) fail("bond order must be >= 2 or inf");
      }
      auto key = std::minmax(i, j);
      auto it = seen.find(key);
      if (it != seen.end() && it->second != m)
        fail("asymmetric bond: conflicting orders for the same pair");
      seen[key] = m;
      sys->set_bond(i, j, m);
    } else {
      fail("unrecognized directive '" + word + "'");
    }
  }
  if (!sys) throw Error("missing n= declaration");
  return *sys;
}

std::string serialize_system(const CoxeterSystem& sys) {
  std::ostringstream out;
  out << "n=" << sys.rank() << "\n";
  bool default_labels = true;
  for (int i = 0; i < sys.rank(); ++i)
    if (sys.label(i) != "s" + std::to_string(i)) default_labels = false;
  if (!default_labels) {
    out << "labels";
    for (int i = 0; i < sys.rank(); ++i) out << " " << sys.label(i);
    out << "\n";
  }
  for (const auto& [ij, m] : sys.bonds()) {
    out << "m " << ij.first << " " << ij.second << " ";
    if (bond_finite(m))
      out << m;
    else
      out << "inf";
    out << "\n";
  }
  return out.str();
}

NodeClass classify_node(const CoxeterSystem& sys) {
  NodeClass nc;
  nc.evenly_laced = true;
  std::vector<int> noncommuting;
  for (int i = 1; i < sys.rank(); ++i) {
    int m = sys.bond(0, i);
    if (bond_finite(m) && m % 2 != 0) nc.evenly_laced = false;
    if (m != 2) noncommuting.push_back(i);
  }
  nc.leaf = noncommuting.size() == 1;
  if (nc.leaf) nc.neighbor = noncommuting.front();
  nc.even_leaf = nc.evenly_laced && nc.leaf;
  return nc;
}

DerivedSystem derive_prime(const CoxeterSystem& sys) {
  NodeClass nc = classify_node(sys);
  if (!nc.even_leaf) throw Error("derive_prime requires s0 to be an even leaf");
  int nb = *nc.neighbor;
  int m01 = sys.bond(0, nb);
  if (!bond_finite(m01)) throw Error("derive_prime requires a finite bond m01");

  // Internally renumber the neighbor to position 1: prime index p(j) of the
  // original generator s_j for j >= 1, with t1' occupying slot 0.
  std::vector<int> prime_of(sys.rank(), -1);
  prime_of[nb] = 1;
  int next = 2;
  for (int j = 1; j < sys.rank(); ++j)
    if (j != nb) prime_of[j] = next++;

  DerivedSystem d;
  d.sys = CoxeterSystem(sys.rank());
  d.t1_prime_index = 0;
  d.sys.set_bond(0, 1, m01 / 2);
  for (int j = 1; j < sys.rank(); ++j) {
    if (j == nb) continue;
    // m(t1', t_j) = m(t1, t_j) = m_{nb, j}
    d.sys.set_bond(0, prime_of[j], sys.bond(nb, j));
  }
  for (int i = 1; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j)
      d.sys.set_bond(prime_of[i], prime_of[j], sys.bond(i, j));

  std::vector<std::string> labels(sys.rank());
  labels[0] = "t1'";
  for (int j = 1; j < sys.rank(); ++j)
    labels[prime_of[j]] = "t" + std::to_string(prime_of[j]);
  d.sys.set_labels(std::move(labels));
  return d;
}

}  // namespace coxalt
