// The alternating subgroup W+ with its generating set R = {r_i = s0 s_i}:
// lifts between S-words and R-words, lengths, palindromes, descent statistics
// and parabolic structure.

#ifndef COXALT_ALTGRP_HPP
#define COXALT_ALTGRP_HPP

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "coxalt/engine.hpp"

namespace coxalt {

// A letter r_i or r_i^{-1}; inverted is normalized away wherever the letter
// set is enumerated for an involution r_i, but kept verbatim in outputs of
// the word maps.
struct AltLetter {
  int idx;        // 1..n
  bool inverted;  // r_i^{-1}
  auto operator<=>(const AltLetter&) const = default;
};

using AltWord = std::vector<AltLetter>;

std::string render_letter(const AltLetter& l);   // "1", "1-", "2", ...
std::string render_word(const AltWord& w);       // concatenated letters, "e" if empty

class AltGroup {
 public:
  explicit AltGroup(std::shared_ptr<const GroupTable> table);

  const GroupTable& group() const { return *table_; }
  int rank() const { return table_->rank(); }  // n + 1 generators of W
  int size() const { return static_cast<int>(plus_.size()); }

  // translation between W+ (dense indices 0..size-1) and the ambient table
  int ambient(int p) const { return plus_[p]; }
  int plus_index(int w) const;             // requires w in W+
  bool in_plus(int w) const { return table_->length(w) % 2 == 0; }
  int tau(int w) const;                    // plus index of tau(w)
  int tau_inverse(int p) const;            // the W^{s0} representative of p

  int ell_r(int p) const { return table_->nu(plus_[p]); }
  int multiply(int p, int q) const;
  int inverse(int p) const;
  int s0() const { return s0_; }

  // the distinct letters of R cup R^{-1} in display order
  const std::vector<AltLetter>& letters() const { return letters_; }
  int letter_element(const AltLetter& l) const;     // ambient element index
  int left_letter(int p, const AltLetter& l) const;   // plus index of l * p
  int right_letter(int p, const AltLetter& l) const;  // plus index of p * l

  int eval(const AltWord& w) const;  // plus index of the product
  AltLetter letter_inverse(const AltLetter& l) const;
  AltWord canonical_r_word(int p) const;
  std::string display(int p) const;  // canonical R-word, "e" for identity
  const std::vector<AltWord>& reduced_r_words(int p) const;

  // word maps: rho deletes s0's and inverts by position parity, sigma expands
  // each letter back to a two-letter S-word
  AltWord rho_letters(const Word& word) const;   // total on any S-word
  AltWord rho_lift(const Word& word) const;      // requires even length
  Word sigma_expand(const AltWord& word) const;

  // palindromes P(W+) = T-hat s0, with both products verified equal
  bool is_palindrome(int p) const { return palindrome_[p]; }
  std::vector<int> palindromes() const;
  std::set<int> p_left(int p) const;
  std::set<int> p_right(int p) const;
  std::vector<int> pk_sequence(const AltWord& reduced) const;
  // {t s0 : t in T-hat, ell_S(t u) < ell_S(u)} for u = s0 w, as plus indices
  std::set<int> t_hat_left_coset(int p) const;

  struct DescentStats {
    std::set<AltLetter> des, nasc;
    std::set<int> hat_des, hat_nasc;
  };
  DescentStats descent_stats(int p) const;

  struct ExchangeReport {
    bool holds = true;
    std::string detail;  // first failure, empty when holds
  };
  // strong exchange for one element (every reduced R-word against every
  // palindrome) plus the cardinality identity |P_L(w)| = ell_R(w)
  ExchangeReport strong_exchange_check(int p) const;
  // injectivity of w -> P_L(w) across all of W+
  bool p_left_injective(std::pair<int, int>* witness = nullptr) const;

  // parabolic structure: J is a set of r-indices in 1..n
  std::vector<int> alt_parabolic(const std::set<int>& J) const;   // subgroup, plus indices
  std::vector<int> alt_coset_reps(const std::set<int>& J) const;  // tau(W^{J+s0})
  struct ParabolicReport {
    bool intersection_ok = true;      // W_{J+s0} cap W+ == <J>
    bool reps_are_minima = true;      // tau(W^J) achieve coset minima
    bool minima_unique = true;
    bool additive = true;             // ell_R(rep * y) = ell_R(rep) + ell_R(y)
    bool characterizations_agree = true;  // the three intrinsic descriptions
    bool alternation = true;          // ell_R changes at every parabolic step
    std::string detail;
  };
  ParabolicReport check_parabolic(const std::set<int>& J) const;

  struct PresentationReport {
    bool relations_hold = true;
    bool generates = true;
    bool index_two = true;
    bool nearly_coxeter = true;  // leaf-only relations, true when not a leaf
    std::string detail;
  };
  PresentationReport check_presentation() const;

 private:
  std::shared_ptr<const GroupTable> table_;
  std::vector<int> plus_;          // ambient indices, BFS order
  std::vector<int> plus_of_;       // ambient -> plus or -1
  std::vector<AltLetter> letters_;
  std::vector<int> letter_elems_;  // ambient index per letter
  std::vector<bool> palindrome_;
  int s0_;                         // ambient index of s_0
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::vector<AltWord>> r_words_;
  const std::vector<AltWord>& r_words_locked(int p) const;
};

}  // namespace coxalt

#endif
