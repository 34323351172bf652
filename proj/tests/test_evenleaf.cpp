#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "coxalt/evenleaf.hpp"
#include "coxalt/genfun.hpp"
#include "doctest.h"

using namespace coxalt;

namespace {

std::shared_ptr<AltGroup> alt_of(const std::string& text) {
  CoxeterSystem sys = parse_system(text);
  auto table = std::make_shared<GroupTable>(std::make_shared<RootSystem>(build_roots(sys)));
  return std::make_shared<AltGroup>(table);
}

EvenLeafCorrespondence corr_of(const std::string& text) {
  return EvenLeafCorrespondence(alt_of(text));
}

const char* kB3 = "n=3\nm 0 1 4\nm 1 2 3\n";

// a table row located by its sorted R-word cell
const EvenLeafCorrespondence::TableRow& row_by_rwords(
    const std::vector<EvenLeafCorrespondence::TableRow>& rows,
    const std::set<std::string>& rwords) {
  for (const auto& row : rows)
    if (std::set<std::string>(row.r_words.begin(), row.r_words.end()) == rwords) return row;
  throw std::runtime_error("row not found");
}

}  // namespace

TEST_CASE("the correspondence needs an even leaf") {
  CHECK_THROWS_AS(corr_of("n=3\nm 0 1 3\nm 1 2 3\n"), Error);
  CHECK_THROWS_AS(corr_of("n=2\nm 0 1 7\n"), Error);
}

TEST_CASE("theta is the chi0-coset representative") {
  EvenLeafCorrespondence corr = corr_of(kB3);
  const AltGroup& alt = corr.alt();
  const GroupTable& g = alt.group();
  int e = alt.eval({});
  CHECK(corr.theta(e) == corr.prime_group().identity());
  for (int p = 0; p < alt.size(); ++p) {
    int w = alt.ambient(p);
    int image = corr.ambient_of_prime(corr.theta(p));
    // theta(w) = w s0^{ell_R(w)}
    int expect = alt.ell_r(p) % 2 == 0 ? w : g.right(w, 0);
    CHECK(image == expect);
    CHECK(corr.theta_inverse(corr.theta(p)) == p);
  }
}

TEST_CASE("the full correspondence report for B3, B4 and I2(8)") {
  for (const char* text : {kB3, "n=4\nm 0 1 4\nm 1 2 3\nm 2 3 3\n", "n=2\nm 0 1 8\n"}) {
    CAPTURE(text);
    EvenLeafCorrespondence corr = corr_of(text);
    EvenLeafCorrespondence::Report rep = corr.check();
    CHECK(rep.bijective);
    CHECK(rep.length_preserving);
    CHECK(rep.words_biject);
    CHECK(rep.descents_biject);
    CHECK(rep.right_weak_isomorphic);
    CHECK(rep.strong_bruhat_isomorphic);
    CHECK(rep.poincare_equal);
    if (!rep.detail.empty()) FAIL_CHECK(rep.detail);
  }
}

TEST_CASE("I2(8): both Poincare series equal the I2(4) series") {
  EvenLeafCorrespondence corr = corr_of("n=2\nm 0 1 8\n");
  MultiPoly plus = gf_ellr_plus(corr.alt());
  MultiPoly prime = gf_length_s(corr.prime_group());
  MultiPoly expect = MultiPoly::parse("1 + 2*q + 2*q^2 + 2*q^3 + q^4", {"q"});
  CHECK(compare(plus, expect) == "equal");
  CHECK(compare(prime, expect) == "equal");
}

TEST_CASE("Theta maps words positionally") {
  EvenLeafCorrespondence corr = corr_of(kB3);
  // r1 r1: positions 1 (odd) and 2 (even) -> t1' t1
  AltWord w{{1, false}, {1, false}};
  CHECK(corr.theta_word(w) == Word{0, 1});
  // r1^-1 r1^-1 -> t1 t1'
  AltWord winv{{1, true}, {1, true}};
  CHECK(corr.theta_word(winv) == Word{1, 0});
  // r2 is position-independent
  AltWord mixed{{2, false}, {1, false}, {2, false}};
  CHECK(corr.theta_word(mixed) == Word{2, 1, 2});
  // inverse map undoes it, including the parity bookkeeping
  CHECK(corr.theta_word_inverse(corr.theta_word(w)) == w);
  CHECK(corr.theta_word_inverse(corr.theta_word(winv)) == winv);
  CHECK(corr.theta_word_inverse(corr.theta_word(mixed)) == mixed);
}

TEST_CASE("the correspondence table pins the expected rows") {
  EvenLeafCorrespondence corr = corr_of(kB3);
  std::vector<EvenLeafCorrespondence::TableRow> rows = corr.table_rows();
  REQUIRE(rows.size() == 24);

  // rank sizes 1, 3, 5, 6, 5, 3, 1
  std::map<int, int> by_ell;
  for (const auto& row : rows) ++by_ell[row.ell];
  CHECK(by_ell == std::map<int, int>{{0, 1}, {1, 3}, {2, 5}, {3, 6}, {4, 5}, {5, 3}, {6, 1}});

  // ell = 1 rows, in table order
  CHECK(rows[1].sprime_words == std::vector<std::string>{"1"});
  CHECK(rows[1].des_sprime == std::vector<std::string>{"1"});
  CHECK(rows[1].r_words == std::vector<std::string>{"1-"});
  CHECK(rows[1].nasc == std::vector<std::string>{"1"});
  CHECK(rows[1].hat_nasc == std::vector<std::string>{"1"});
  CHECK(rows[2].sprime_words == std::vector<std::string>{"1'"});
  CHECK(rows[2].r_words == std::vector<std::string>{"1"});
  CHECK(rows[2].nasc == std::vector<std::string>{"1-"});
  CHECK(rows[3].sprime_words == std::vector<std::string>{"2"});
  CHECK(rows[3].r_words == std::vector<std::string>{"2"});

  // the two-word row at ell = 2
  const auto& pair_row = row_by_rwords(rows, {"11", "1-1-"});
  CHECK(std::set<std::string>(pair_row.sprime_words.begin(), pair_row.sprime_words.end()) ==
        std::set<std::string>{"11'", "1'1"});
  CHECK(pair_row.des_sprime == std::vector<std::string>{"1", "1'"});
  CHECK(pair_row.nasc == std::vector<std::string>{"1", "1-"});
  CHECK(pair_row.hat_nasc == std::vector<std::string>{"1"});

  // ell = 3 rows from the table
  const auto& r3 = row_by_rwords(rows, {"1-21-", "212"});
  CHECK(std::set<std::string>(r3.sprime_words.begin(), r3.sprime_words.end()) ==
        std::set<std::string>{"121", "212"});
  CHECK(r3.des_sprime == std::vector<std::string>{"1", "2"});
  CHECK(r3.nasc == std::vector<std::string>{"1", "2"});

  const auto& r3c = row_by_rwords(rows, {"1-1-2", "112"});
  CHECK(std::set<std::string>(r3c.sprime_words.begin(), r3c.sprime_words.end()) ==
        std::set<std::string>{"11'2", "1'12"});
  CHECK(r3c.des_sprime == std::vector<std::string>{"2"});
  CHECK(r3c.nasc == std::vector<std::string>{"2"});

  const auto& r3d = row_by_rwords(rows, {"1-21"});
  CHECK(r3d.sprime_words == std::vector<std::string>{"121'"});
  CHECK(r3d.des_sprime == std::vector<std::string>{"1'"});
  CHECK(r3d.nasc == std::vector<std::string>{"1-"});
  CHECK(r3d.hat_nasc == std::vector<std::string>{"1"});
}

TEST_CASE("more pinned table rows") {
  EvenLeafCorrespondence corr = corr_of(kB3);
  std::vector<EvenLeafCorrespondence::TableRow> rows = corr.table_rows();

  // {1'21', 21'2} <-> {121, 2(1-)2}: Nasc {1-, 2}, hatNasc {1, 2}
  const auto& row = row_by_rwords(rows, {"121", "21-2"});
  CHECK(std::set<std::string>(row.sprime_words.begin(), row.sprime_words.end()) ==
        std::set<std::string>{"1'21'", "21'2"});
  CHECK(row.des_sprime == std::vector<std::string>{"1'", "2"});
  CHECK(row.nasc == std::vector<std::string>{"1-", "2"});
  CHECK(row.hat_nasc == std::vector<std::string>{"1", "2"});

  // the maximum: sixteen words on each side, full descent sets
  const auto& top = rows.back();
  CHECK(top.ell == 6);
  CHECK(top.sprime_words.size() == 16);
  CHECK(top.r_words.size() == 16);
  CHECK(top.des_sprime == std::vector<std::string>{"1", "1'", "2"});
  CHECK(top.nasc == std::vector<std::string>{"1", "1-", "2"});
  CHECK(top.hat_nasc == std::vector<std::string>{"1", "2"});
}

TEST_CASE("the correspondence survives relabeling the neighbor") {
  // same B3 diagram, with the noncommuting neighbor of s0 sitting at index 2
  EvenLeafCorrespondence corr = corr_of("n=3\nm 0 2 4\nm 1 2 3\n");
  EvenLeafCorrespondence::Report rep = corr.check();
  CHECK(rep.bijective);
  CHECK(rep.length_preserving);
  CHECK(rep.words_biject);
  CHECK(rep.descents_biject);
  CHECK(rep.right_weak_isomorphic);
  CHECK(rep.strong_bruhat_isomorphic);
  CHECK(rep.poincare_equal);
  if (!rep.detail.empty()) FAIL_CHECK(rep.detail);
  CHECK(corr.table_rows().size() == 24);
}

TEST_CASE("the emitted TSV matches the golden file") {
  EvenLeafCorrespondence corr = corr_of(kB3);
  std::ifstream in(std::string(COXALT_GOLDEN_DIR) + "/b3_table.tsv");
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(corr.table_tsv() == buf.str());
}
