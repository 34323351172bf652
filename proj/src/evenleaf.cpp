#include "coxalt/evenleaf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "coxalt/genfun.hpp"

namespace coxalt {

namespace {

// sort key that orders t1 < t1' < t2 < t3 < ...
std::pair<int, int> prime_letter_key(int gen) {
  return gen == 0 ? std::pair<int, int>{1, 1} : std::pair<int, int>{gen, 0};
}

std::vector<std::pair<int, int>> prime_word_key(const Word& w) {
  std::vector<std::pair<int, int>> key;
  for (int g : w) key.push_back(prime_letter_key(g));
  return key;
}

std::pair<int, int> alt_letter_key(const AltLetter& l) {
  return {l.idx, l.inverted ? 1 : 0};
}

std::vector<std::pair<int, int>> alt_word_key(const AltWord& w) {
  std::vector<std::pair<int, int>> key;
  for (const AltLetter& l : w) key.push_back(alt_letter_key(l));
  return key;
}

}  // namespace

EvenLeafCorrespondence::EvenLeafCorrespondence(std::shared_ptr<const AltGroup> alt)
    : alt_(std::move(alt)) {
  const GroupTable& g = alt_->group();
  NodeClass nc = classify_node(g.sys());
  if (!nc.even_leaf)
    throw Error("EVEN_LEAF_REQUIRED: the correspondence needs s0 an even leaf");
  neighbor_ = *nc.neighbor;

  DerivedSystem derived = derive_prime(g.sys());
  prime_ = std::make_shared<GroupTable>(std::make_shared<RootSystem>(build_roots(derived.sys)));

  // prime generator -> original generator (slot 0 is t1', realized ambiently
  // as s0 s1 s0); this mirrors the renumbering done by derive_prime
  gen_map_.assign(g.rank(), -1);
  gen_map_[1] = neighbor_;
  int next = 2;
  for (int j = 1; j < g.rank(); ++j)
    if (j != neighbor_) gen_map_[next++] = j;

  std::vector<int> gen_ambient(g.rank());
  gen_ambient[0] = g.apply_word({0, neighbor_, 0});
  for (int p = 1; p < g.rank(); ++p) gen_ambient[p] = g.apply_word({gen_map_[p]});

  ambient_.assign(prime_->size(), -1);
  prime_of_.assign(g.size(), -1);
  for (int w = 0; w < prime_->size(); ++w) {
    int x = g.identity();
    for (int i : prime_->canonical_word(w)) x = g.multiply(x, gen_ambient[i]);
    ambient_[w] = x;
    if (prime_of_[x] >= 0) throw Error("W' embedding is not injective (engine bug)");
    prime_of_[x] = w;
  }

  theta_.assign(alt_->size(), -1);
  for (int p = 0; p < alt_->size(); ++p) {
    int w = alt_->ambient(p);
    int image = alt_->ell_r(p) % 2 == 0 ? w : g.right(w, 0);
    theta_[p] = prime_of_[image];
    if (theta_[p] < 0)
      throw Error("theta image is not in W' (engine bug)");
  }
}

int EvenLeafCorrespondence::theta_inverse(int wprime) const {
  return alt_->tau(ambient_[wprime]);
}

int EvenLeafCorrespondence::prime_letter_of(const AltLetter& l, int ell_parity) const {
  if (l.idx != neighbor_) {
    for (int p = 2; p < static_cast<int>(gen_map_.size()); ++p)
      if (gen_map_[p] == l.idx) return p;
    throw Error("letter outside R");
  }
  bool even = ell_parity % 2 == 0;
  if (!l.inverted) return even ? 0 : 1;  // r_1 -> t1' on even length, t1 on odd
  return even ? 1 : 0;
}

Word EvenLeafCorrespondence::theta_word(const AltWord& w) const {
  Word out;
  for (size_t k = 1; k <= w.size(); ++k) {
    const AltLetter& l = w[k - 1];
    if (l.idx != neighbor_) {
      out.push_back(prime_letter_of(l, 0));
    } else if (!l.inverted) {
      out.push_back(k % 2 == 0 ? 1 : 0);  // r_1: even position -> t1
    } else {
      out.push_back(k % 2 == 0 ? 0 : 1);  // r_1^{-1}: even position -> t1'
    }
  }
  return out;
}

AltWord EvenLeafCorrespondence::theta_word_inverse(const Word& w) const {
  AltWord out;
  for (size_t k = 1; k <= w.size(); ++k) {
    int gen = w[k - 1];
    if (gen >= 2) {
      out.push_back({gen_map_[gen], false});
    } else if (gen == 1) {  // t1
      out.push_back({neighbor_, k % 2 != 0});
    } else {  // t1'
      out.push_back({neighbor_, k % 2 == 0});
    }
  }
  return out;
}

std::string EvenLeafCorrespondence::render_prime_letter(int i) const {
  return i == 0 ? "1'" : std::to_string(i);
}

std::string EvenLeafCorrespondence::render_prime_word(const Word& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (int g : w) out += render_prime_letter(g);
  return out;
}

EvenLeafCorrespondence::Report EvenLeafCorrespondence::check() const {
  Report rep;
  std::ostringstream detail;
  const GroupTable& prime = *prime_;

  // bijectivity
  std::vector<bool> hit(prime.size(), false);
  for (int p = 0; p < alt_->size(); ++p) {
    if (hit[theta_[p]]) {
      rep.bijective = false;
      detail << "theta collides at " << alt_->display(p) << "; ";
    }
    hit[theta_[p]] = true;
  }
  if (alt_->size() != prime.size()) rep.bijective = false;

  for (int p = 0; p < alt_->size(); ++p) {
    int tp = theta_[p];
    if (alt_->ell_r(p) != prime.length(tp)) {
      rep.length_preserving = false;
      detail << "length differs at " << alt_->display(p) << "; ";
    }

    // Theta bijects the reduced word sets
    std::set<Word> mapped;
    for (const AltWord& rw : alt_->reduced_r_words(p)) mapped.insert(theta_word(rw));
    const auto& prime_words = prime.all_reduced_words(tp);
    std::set<Word> expected(prime_words.begin(), prime_words.end());
    if (mapped != expected || mapped.size() != alt_->reduced_r_words(p).size()) {
      rep.words_biject = false;
      detail << "word sets differ at " << alt_->display(p) << "; ";
    }

    // letterwise descent bijection
    std::set<int> mapped_des;
    for (const AltLetter& l : alt_->descent_stats(p).des)
      mapped_des.insert(prime_letter_of(l, alt_->ell_r(p)));
    std::vector<int> pd = prime.right_descents(tp);
    if (mapped_des != std::set<int>(pd.begin(), pd.end())) {
      rep.descents_biject = false;
      detail << "descents differ at " << alt_->display(p) << "; ";
    }
  }

  // poset isomorphisms
  Poset rw = build_order(*alt_, OrderFlavor::RightWeak);
  Poset rs = build_order(*alt_, OrderFlavor::RightStrong);
  std::vector<std::vector<bool>> prime_rw(prime.size(), std::vector<bool>(prime.size(), false));
  for (int w = 0; w < prime.size(); ++w) prime_rw[w][w] = true;
  std::vector<int> by_len(prime.size());
  for (int w = 0; w < prime.size(); ++w) by_len[w] = w;
  std::stable_sort(by_len.begin(), by_len.end(),
                   [&](int a, int b) { return prime.length(a) < prime.length(b); });
  for (int w : by_len)
    for (int i = 0; i < prime.rank(); ++i) {
      int v = prime.right(w, i);
      if (prime.length(v) == prime.length(w) + 1)
        for (int u = 0; u < prime.size(); ++u)
          if (prime_rw[u][w]) prime_rw[u][v] = true;
    }
  for (int p = 0; p < alt_->size() && (rep.right_weak_isomorphic || rep.strong_bruhat_isomorphic); ++p) {
    for (int q = 0; q < alt_->size(); ++q) {
      if (rw.leq(p, q) != prime_rw[theta_[p]][theta_[q]]) {
        rep.right_weak_isomorphic = false;
        detail << "right-weak mismatch at (" << alt_->display(p) << ", " << alt_->display(q)
               << "); ";
        break;
      }
      if (rs.leq(p, q) != prime.bruhat_leq(theta_[p], theta_[q])) {
        rep.strong_bruhat_isomorphic = false;
        detail << "strong/Bruhat mismatch at (" << alt_->display(p) << ", "
               << alt_->display(q) << "); ";
        break;
      }
    }
  }

  if (compare(gf_ellr_plus(*alt_), gf_length_s(prime)) != "equal") {
    rep.poincare_equal = false;
    detail << "Poincare series differ; ";
  }

  rep.detail = detail.str();
  return rep;
}

std::vector<EvenLeafCorrespondence::TableRow> EvenLeafCorrespondence::table_rows() const {
  const GroupTable& prime = *prime_;
  std::vector<int> order(alt_->size());
  for (int p = 0; p < alt_->size(); ++p) order[p] = p;

  // row key: (ell, lexicographically smallest S'-reduced word)
  std::vector<std::vector<std::pair<int, int>>> min_word(alt_->size());
  for (int p = 0; p < alt_->size(); ++p) {
    const auto& words = prime.all_reduced_words(theta_[p]);
    std::vector<std::pair<int, int>> best;
    for (const Word& w : words) {
      auto key = prime_word_key(w);
      if (best.empty() || key < best) best = key;
    }
    min_word[p] = best;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (alt_->ell_r(a) != alt_->ell_r(b)) return alt_->ell_r(a) < alt_->ell_r(b);
    return min_word[a] < min_word[b];
  });

  std::vector<TableRow> rows;
  for (int p : order) {
    TableRow row;
    row.ell = alt_->ell_r(p);
    int tp = theta_[p];

    std::vector<Word> pw = prime.all_reduced_words(tp);
    std::sort(pw.begin(), pw.end(),
              [](const Word& a, const Word& b) { return prime_word_key(a) < prime_word_key(b); });
    for (const Word& w : pw) row.sprime_words.push_back(render_prime_word(w));

    std::vector<int> des = prime.right_descents(tp);
    std::sort(des.begin(), des.end(),
              [](int a, int b) { return prime_letter_key(a) < prime_letter_key(b); });
    for (int d : des) row.des_sprime.push_back(render_prime_letter(d));

    std::vector<AltWord> rws = alt_->reduced_r_words(p);
    std::sort(rws.begin(), rws.end(),
              [](const AltWord& a, const AltWord& b) { return alt_word_key(a) < alt_word_key(b); });
    for (const AltWord& w : rws) row.r_words.push_back(render_word(w));

    AltGroup::DescentStats st = alt_->descent_stats(p);
    std::vector<AltLetter> nasc(st.nasc.begin(), st.nasc.end());
    std::sort(nasc.begin(), nasc.end(),
              [](const AltLetter& a, const AltLetter& b) { return alt_letter_key(a) < alt_letter_key(b); });
    for (const AltLetter& l : nasc) row.nasc.push_back(render_letter(l));
    for (int i : st.hat_nasc) row.hat_nasc.push_back(std::to_string(i));

    rows.push_back(std::move(row));
  }
  return rows;
}

std::string EvenLeafCorrespondence::table_tsv() const {
  std::ostringstream out;
  out << "ell\tsprime_reduced_words\tdes_sprime\tr_reduced_words\tnasc\that_nasc\n";
  auto join = [](const std::vector<std::string>& items) {
    if (items.empty()) return std::string("-");
    std::string s;
    for (size_t i = 0; i < items.size(); ++i) {
      if (i) s += ",";
      s += items[i];
    }
    return s;
  };
  for (const TableRow& row : table_rows()) {
    out << row.ell << "\t" << join(row.sprime_words) << "\t" << join(row.des_sprime)
        << "\t" << join(row.r_words) << "\t" << join(row.nasc) << "\t"
        << join(row.hat_nasc) << "\n";
  }
  return out.str();
}

}  // namespace coxalt
