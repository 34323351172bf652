#include "coxalt/altgrp.hpp"

#include <algorithm>
#include <sstream>

namespace coxalt {

std::string render_letter(const AltLetter& l) {
  return std::to_string(l.idx) + (l.inverted ? "-" : "");
}

std::string render_word(const AltWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const AltLetter& l : w) out += render_letter(l);
  return out;
}

AltGroup::AltGroup(std::shared_ptr<const GroupTable> table) : table_(std::move(table)) {
  const GroupTable& g = *table_;
  plus_of_.assign(g.size(), -1);
  for (int w = 0; w < g.size(); ++w) {
    if (g.length(w) % 2 == 0) {
      plus_of_[w] = static_cast<int>(plus_.size());
      plus_.push_back(w);
    }
  }
  s0_ = g.right(g.identity(), 0);

  for (int i = 1; i < g.rank(); ++i) {
    letters_.push_back({i, false});
    if (g.sys().bond(0, i) != 2) letters_.push_back({i, true});
  }
  for (const AltLetter& l : letters_) {
    int r = g.apply_word({0, l.idx});
    letter_elems_.push_back(l.inverted ? g.inverse(r) : r);
  }

  // P(W+) = T-hat * s0
  palindrome_.assign(size(), false);
  const RootSystem& rs = g.roots();
  for (int k = 0; k < rs.num_roots(); ++k) {
    if (!rs.in_t_hat(k)) continue;
    int p = g.multiply(g.reflection(k), s0_);
    palindrome_[plus_of_[p]] = true;
  }
}

int AltGroup::plus_index(int w) const {
  if (w < 0 || w >= table_->size() || plus_of_[w] < 0)
    throw Error("element is not in the alternating subgroup");
  return plus_of_[w];
}

int AltGroup::tau(int w) const {
  int v = plus_of_[w] >= 0 ? w : table_->right(w, 0);
  return plus_of_[v];
}

int AltGroup::tau_inverse(int p) const {
  // the minimum-length representative of the coset {w, w s0}
  int w = plus_[p];
  int ws0 = table_->right(w, 0);
  return table_->length(ws0) < table_->length(w) ? ws0 : w;
}

int AltGroup::multiply(int p, int q) const {
  return plus_of_[table_->multiply(plus_[p], plus_[q])];
}

int AltGroup::inverse(int p) const { return plus_of_[table_->inverse(plus_[p])]; }

int AltGroup::letter_element(const AltLetter& l) const {
  for (size_t k = 0; k < letters_.size(); ++k)
    if (letters_[k].idx == l.idx && letters_[k].inverted == l.inverted)
      return letter_elems_[k];
  // an inverted letter for an involution evaluates like the plain letter
  if (l.inverted) return letter_element({l.idx, false});
  throw Error("letter index out of range");
}

int AltGroup::left_letter(int p, const AltLetter& l) const {
  return plus_of_[table_->multiply(letter_element(l), plus_[p])];
}

int AltGroup::right_letter(int p, const AltLetter& l) const {
  return plus_of_[table_->multiply(plus_[p], letter_element(l))];
}

int AltGroup::eval(const AltWord& w) const {
  int e = table_->identity();
  for (const AltLetter& l : w) e = table_->multiply(e, letter_element(l));
  int p = plus_of_[e];
  if (p < 0) throw Error("alternating word left W+ (engine bug)");
  return p;
}

AltLetter AltGroup::letter_inverse(const AltLetter& l) const {
  if (table_->sys().bond(0, l.idx) == 2) return l;  // involution
  return {l.idx, !l.inverted};
}

AltWord AltGroup::canonical_r_word(int p) const {
  // lexicographically smallest reduced R-word: greedily take the smallest
  // letter that can start one
  AltWord word;
  while (ell_r(p) > 0) {
    bool found = false;
    for (const AltLetter& l : letters_) {
      int rest = left_letter(p, letter_inverse(l));
      if (ell_r(rest) == ell_r(p) - 1) {
        word.push_back(l);
        p = rest;
        found = true;
        break;
      }
    }
    if (!found) throw Error("no shortening letter (engine bug)");
  }
  return word;
}

std::string AltGroup::display(int p) const { return render_word(canonical_r_word(p)); }

const std::vector<AltWord>& AltGroup::reduced_r_words(int p) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return r_words_locked(p);
}

const std::vector<AltWord>& AltGroup::r_words_locked(int p) const {
  auto it = r_words_.find(p);
  if (it != r_words_.end()) return it->second;
  std::vector<AltWord> words;
  if (ell_r(p) == 0) {
    words.push_back({});
  } else {
    for (const AltLetter& l : letters_) {
      int rest = left_letter(p, letter_inverse(l));
      if (ell_r(rest) != ell_r(p) - 1) continue;
      for (const AltWord& tail : r_words_locked(rest)) {
        AltWord word;
        word.reserve(tail.size() + 1);
        word.push_back(l);
        word.insert(word.end(), tail.begin(), tail.end());
        words.push_back(std::move(word));
      }
    }
  }
  return r_words_.emplace(p, std::move(words)).first->second;
}

AltWord AltGroup::rho_letters(const Word& word) const {
  // letter s_i at (1-based) position k maps to r_i when k is even and to
  // r_i^{-1} when k is odd; all s_0 are removed
  AltWord out;
  for (size_t k = 1; k <= word.size(); ++k) {
    int i = word[k - 1];
    if (i == 0) continue;
    out.push_back({i, k % 2 == 1});
  }
  return out;
}

AltWord AltGroup::rho_lift(const Word& word) const {
  if (word.size() % 2 != 0)
    throw Error("ODD_LENGTH_WORD: rho_lift requires a word of even length");
  return rho_letters(word);
}

Word AltGroup::sigma_expand(const AltWord& word) const {
  Word out;
  for (const AltLetter& l : word) {
    if (l.inverted) {
      out.push_back(l.idx);
      out.push_back(0);
    } else {
      out.push_back(0);
      out.push_back(l.idx);
    }
  }
  return out;
}

std::vector<int> AltGroup::palindromes() const {
  std::vector<int> out;
  for (int p = 0; p < size(); ++p)
    if (palindrome_[p]) out.push_back(p);
  return out;
}

std::set<int> AltGroup::p_left(int p) const {
  std::set<int> out;
  for (int q = 0; q < size(); ++q)
    if (palindrome_[q] && ell_r(multiply(q, p)) < ell_r(p)) out.insert(q);
  return out;
}

std::set<int> AltGroup::p_right(int p) const {
  std::set<int> out;
  for (int q = 0; q < size(); ++q)
    if (palindrome_[q] && ell_r(multiply(p, q)) < ell_r(p)) out.insert(q);
  return out;
}

std::vector<int> AltGroup::pk_sequence(const AltWord& reduced) const {
  // p_k = (r1)^-1 (r2)^-1 ... (rk)^-1 ... (r2)^-1 (r1)^-1
  std::vector<int> out;
  for (size_t k = 1; k <= reduced.size(); ++k) {
    AltWord w;
    for (size_t a = 1; a <= 2 * k - 1; ++a) {
      size_t idx = a <= k ? a : 2 * k - a;
      w.push_back(letter_inverse(reduced[idx - 1]));
    }
    out.push_back(eval(w));
  }
  return out;
}

std::set<int> AltGroup::t_hat_left_coset(int p) const {
  std::set<int> out;
  int u = table_->multiply(s0_, plus_[p]);
  for (int k : table_->t_hat_left(u))
    out.insert(plus_of_[table_->multiply(table_->reflection(k), s0_)]);
  return out;
}

AltGroup::DescentStats AltGroup::descent_stats(int p) const {
  DescentStats st;
  for (const AltLetter& l : letters_) {
    int q = right_letter(p, l);
    if (ell_r(q) < ell_r(p)) st.des.insert(l);
    if (ell_r(q) <= ell_r(p)) st.nasc.insert(l);
  }
  for (const AltLetter& l : st.des) st.hat_des.insert(l.idx);
  for (const AltLetter& l : st.nasc) st.hat_nasc.insert(l.idx);
  return st;
}

AltGroup::ExchangeReport AltGroup::strong_exchange_check(int p) const {
  ExchangeReport rep;
  if (!table_->evenly_laced())
    throw Error("EVENLY_LACED_REQUIRED: strong exchange needs s0 evenly-laced");
  std::set<int> pl = p_left(p);
  if (static_cast<int>(pl.size()) != ell_r(p)) {
    rep.holds = false;
    rep.detail = "|P_L| != ell_R at " + display(p);
    return rep;
  }
  for (const AltWord& word : reduced_r_words(p)) {
    std::vector<int> pk = pk_sequence(word);
    std::set<int> pk_set(pk.begin(), pk.end());
    if (pk_set != pl) {
      rep.holds = false;
      rep.detail = "{p_k} != P_L at " + display(p) + " word " + render_word(word);
      return rep;
    }
    // deletion form: p_k w is the word with letter k removed and the first
    // k-1 letters inverted
    for (size_t k = 1; k <= word.size(); ++k) {
      AltWord deleted;
      for (size_t a = 1; a <= word.size(); ++a) {
        if (a == k) continue;
        deleted.push_back(a < k ? letter_inverse(word[a - 1]) : word[a - 1]);
      }
      if (eval(deleted) != multiply(pk[k - 1], p)) {
        rep.holds = false;
        rep.detail = "deletion identity fails at " + display(p);
        return rep;
      }
    }
  }
  return rep;
}

bool AltGroup::p_left_injective(std::pair<int, int>* witness) const {
  std::map<std::set<int>, int> seen;
  for (int p = 0; p < size(); ++p) {
    auto [it, fresh] = seen.emplace(p_left(p), p);
    if (!fresh) {
      if (witness) *witness = {it->second, p};
      return false;
    }
  }
  return true;
}

std::vector<int> AltGroup::alt_parabolic(const std::set<int>& J) const {
  std::vector<bool> in(size(), false);
  std::vector<int> members{plus_of_[table_->identity()]};
  in[members[0]] = true;
  for (size_t head = 0; head < members.size(); ++head) {
    for (const AltLetter& l : letters_) {
      if (J.count(l.idx) == 0) continue;
      int q = right_letter(members[head], l);
      if (!in[q]) {
        in[q] = true;
        members.push_back(q);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> AltGroup::alt_coset_reps(const std::set<int>& J) const {
  std::set<int> sj{0};
  for (int i : J) sj.insert(i);
  std::vector<int> reps;
  for (int w : table_->min_coset_reps(sj)) reps.push_back(tau(w));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

AltGroup::ParabolicReport AltGroup::check_parabolic(const std::set<int>& J) const {
  ParabolicReport rep;
  std::ostringstream detail;

  // W_{J + s0} cap W+ = W+_{tau(J)}
  std::set<int> sj{0};
  for (int i : J) sj.insert(i);
  std::set<int> lhs;
  for (int w = 0; w < table_->size(); ++w) {
    auto [r, part] = table_->parabolic_decompose(w, sj);
    if (r == table_->identity() && plus_of_[w] >= 0) lhs.insert(plus_of_[w]);
  }
  std::vector<int> sub = alt_parabolic(J);
  if (lhs != std::set<int>(sub.begin(), sub.end())) {
    rep.intersection_ok = false;
    detail << "W_J cap W+ differs from <tau(J)>; ";
  }

  // cosets of the subgroup
  std::vector<int> coset_of(size(), -1);
  std::vector<std::vector<int>> cosets;
  for (int p = 0; p < size(); ++p) {
    if (coset_of[p] >= 0) continue;
    int id = static_cast<int>(cosets.size());
    cosets.push_back({});
    for (int y : sub) {
      int q = multiply(p, y);
      if (coset_of[q] < 0) {
        coset_of[q] = id;
        cosets[id].push_back(q);
      }
    }
  }

  std::vector<int> reps = alt_coset_reps(J);
  std::vector<AltLetter> dirs;
  for (const AltLetter& l : letters_)
    if (J.count(l.idx)) dirs.push_back(l);

  for (int rep_p : reps) {
    const std::vector<int>& coset = cosets[coset_of[rep_p]];
    int mn = ell_r(rep_p);
    int count_min = 0;
    for (int q : coset) {
      if (ell_r(q) < mn) {
        rep.reps_are_minima = false;
        detail << "rep " << display(rep_p) << " not minimal; ";
      }
      if (ell_r(q) == mn) ++count_min;
    }
    if (count_min != 1) {
      rep.minima_unique = false;
      detail << "coset of " << display(rep_p) << " has " << count_min << " minima; ";
    }
    for (int y : sub) {
      if (ell_r(multiply(rep_p, y)) != ell_r(rep_p) + ell_r(y)) {
        rep.additive = false;
        detail << "additivity fails on coset of " << display(multiply(rep_p, y)) << "; ";
        break;
      }
    }
  }

  // intrinsic characterizations of the representatives
  std::set<int> by_min(reps.begin(), reps.end());
  std::set<int> by_subgroup, by_letters;
  for (int x = 0; x < size(); ++x) {
    bool all_longer = true;
    for (int y : sub)
      if (y != plus_of_[table_->identity()] && ell_r(multiply(x, y)) <= ell_r(x))
        all_longer = false;
    if (all_longer) by_subgroup.insert(x);
    bool letters_longer = true;
    for (const AltLetter& l : dirs)
      if (ell_r(right_letter(x, l)) <= ell_r(x)) letters_longer = false;
    if (letters_longer) by_letters.insert(x);
  }
  if (by_subgroup != by_min || by_letters != by_min) {
    rep.characterizations_agree = false;
    detail << "intrinsic characterizations disagree; ";
  }

  // the sign-character argument: right multiplication by a parabolic letter
  // never preserves ell_R
  for (int p = 0; p < size(); ++p) {
    for (const AltLetter& l : dirs) {
      if (ell_r(right_letter(p, l)) == ell_r(p)) {
        rep.alternation = false;
        detail << "ell_R stalls at " << display(p) << " * " << render_letter(l) << "; ";
        break;
      }
    }
    if (!rep.alternation) break;
  }

  rep.detail = detail.str();
  return rep;
}

AltGroup::PresentationReport AltGroup::check_presentation() const {
  PresentationReport rep;
  std::ostringstream detail;
  const GroupTable& g = *table_;
  int n = g.rank();

  auto power = [&](int x, int e) {
    int acc = g.identity();
    for (int k = 0; k < e; ++k) acc = g.multiply(acc, x);
    return acc;
  };

  std::vector<int> r(n, -1);
  for (int i = 1; i < n; ++i) r[i] = g.apply_word({0, i});

  for (int i = 1; i < n; ++i) {
    int m0i = g.sys().bond(0, i);
    if (bond_finite(m0i) && power(r[i], m0i) != g.identity()) {
      rep.relations_hold = false;
      detail << "r_" << i << "^" << m0i << " != e; ";
    }
    for (int j = i + 1; j < n; ++j) {
      int mij = g.sys().bond(i, j);
      if (!bond_finite(mij)) continue;
      int x = g.multiply(g.inverse(r[i]), r[j]);
      if (power(x, mij) != g.identity()) {
        rep.relations_hold = false;
        detail << "(r_" << i << "^-1 r_" << j << ")^" << mij << " != e; ";
      }
    }
  }

  // <R> = W+ and index two
  std::set<int> gens;
  for (int i = 1; i < n; ++i) {
    gens.insert(r[i]);
    gens.insert(g.inverse(r[i]));
  }
  std::vector<int> closure{g.identity()};
  std::set<int> seen{g.identity()};
  for (size_t head = 0; head < closure.size(); ++head)
    for (int x : gens) {
      int q = g.multiply(closure[head], x);
      if (seen.insert(q).second) closure.push_back(q);
    }
  if (static_cast<int>(closure.size()) != size()) rep.generates = false;
  if (2 * size() != g.size()) rep.index_two = false;

  // nearly Coxeter presentation when s0 is a leaf
  NodeClass nc = classify_node(g.sys());
  if (nc.leaf) {
    int nb = *nc.neighbor;
    for (int i = 1; i < n; ++i) {
      if (i == nb) continue;
      if (g.multiply(r[i], r[i]) != g.identity()) {
        rep.nearly_coxeter = false;
        detail << "r_" << i << "^2 != e; ";
      }
      for (int j = 1; j < n; ++j) {
        if (j == i) continue;
        int mij = g.sys().bond(i, j);
        if (!bond_finite(mij)) continue;
        if (power(g.multiply(r[i], r[j]), mij) != g.identity()) {
          rep.nearly_coxeter = false;
          detail << "(r_" << i << " r_" << j << ")^" << mij << " != e; ";
        }
      }
    }
  }

  rep.detail = detail.str();
  return rep;
}

}  // namespace coxalt
