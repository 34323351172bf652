// When s0 is an even leaf: the reflection subgroup W' = ker(chi_0) with its
// own Coxeter system (W',S'), the bijections theta / Theta between (W+,R) and
// (W',S'), and the table/report machinery built on them.

#ifndef COXALT_EVENLEAF_HPP
#define COXALT_EVENLEAF_HPP

#include <set>
#include <string>
#include <vector>

#include "coxalt/altgrp.hpp"
#include "coxalt/poset.hpp"

namespace coxalt {

class EvenLeafCorrespondence {
 public:
  explicit EvenLeafCorrespondence(std::shared_ptr<const AltGroup> alt);

  const AltGroup& alt() const { return *alt_; }
  const GroupTable& prime_group() const { return *prime_; }
  const CoxeterSystem& prime_system() const { return prime_->sys(); }

  // theta: W+ -> W' elementwise (plus index -> prime-engine element index)
  int theta(int p) const { return theta_[p]; }
  int theta_inverse(int wprime) const;
  // the ambient W element realizing a W'-engine element (t_j -> s_j,
  // t1' -> s0 s1 s0)
  int ambient_of_prime(int wprime) const { return ambient_[wprime]; }

  // Theta on words: letters map positionally, r_1 / r_1^{-1} split between
  // t_1 and t_1' by the parity of their position
  Word theta_word(const AltWord& w) const;
  AltWord theta_word_inverse(const Word& w) const;

  std::string render_prime_letter(int i) const;        // "1", "1'", "2", ...
  std::string render_prime_word(const Word& w) const;  // "e" when empty

  struct Report {
    bool bijective = true;
    bool length_preserving = true;       // ell_R = ell_{S'} after theta
    bool words_biject = true;            // Theta on reduced word sets
    bool descents_biject = true;         // the letterwise descent bijection
    bool right_weak_isomorphic = true;   // (W+, RW) = (W', RW)
    bool strong_bruhat_isomorphic = true;  // (W+, RS) = (W', Bruhat)
    bool poincare_equal = true;          // W+(q) = W'(S'; q)
    std::string detail;
  };
  Report check() const;

  struct TableRow {
    int ell;
    std::vector<std::string> sprime_words;
    std::vector<std::string> des_sprime;
    std::vector<std::string> r_words;
    std::vector<std::string> nasc;
    std::vector<std::string> hat_nasc;
  };
  std::vector<TableRow> table_rows() const;
  std::string table_tsv() const;

 private:
  std::shared_ptr<const AltGroup> alt_;
  std::shared_ptr<const GroupTable> prime_;
  int neighbor_;                 // the unique noncommuting neighbor of s0
  std::vector<int> gen_map_;     // prime generator -> original index of t_j (j >= 1); slot 0 is t1'
  std::vector<int> ambient_;     // prime element -> ambient element
  std::vector<int> prime_of_;    // ambient element -> prime element or -1
  std::vector<int> theta_;       // plus index -> prime element
  // the letterwise descent bijection for an element of given ell_R parity
  int prime_letter_of(const AltLetter& l, int ell_parity) const;
};

}  // namespace coxalt

#endif
