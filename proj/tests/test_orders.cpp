#include <set>

#include "coxalt/poset.hpp"
#include "doctest.h"

using namespace coxalt;

namespace {

std::shared_ptr<AltGroup> alt_of(const std::string& text) {
  CoxeterSystem sys = parse_system(text);
  auto table = std::make_shared<GroupTable>(std::make_shared<RootSystem>(build_roots(sys)));
  return std::make_shared<AltGroup>(table);
}

std::shared_ptr<AltGroup> b3() { return alt_of("n=3\nm 0 1 4\nm 1 2 3\n"); }
std::shared_ptr<AltGroup> i2(int m) {
  return alt_of("n=2\nm 0 1 " + std::to_string(m) + "\n");
}

constexpr OrderFlavor kFlavors[] = {OrderFlavor::LeftWeak, OrderFlavor::RightWeak,
                                    OrderFlavor::LeftStrong, OrderFlavor::RightStrong};

}  // namespace

TEST_CASE("cover structure: weak steps by one, acyclic, unique minimum") {
  for (auto alt : {b3(), i2(7), i2(8)}) {
    for (OrderFlavor f : kFlavors) {
      Poset poset = build_order(*alt, f);
      int e = alt->eval({});
      for (int p = 0; p < alt->size(); ++p) CHECK(poset.leq(e, p));
      bool weak = f == OrderFlavor::LeftWeak || f == OrderFlavor::RightWeak;
      for (auto [a, b] : poset.covers()) {
        CHECK(alt->ell_r(a) < alt->ell_r(b));
        if (weak) CHECK(alt->ell_r(b) == alt->ell_r(a) + 1);
      }
    }
  }
}

TEST_CASE("left and right orders are isomorphic via inversion but unequal") {
  auto alt = b3();
  Poset lw = build_order(*alt, OrderFlavor::LeftWeak);
  Poset rw = build_order(*alt, OrderFlavor::RightWeak);
  bool same = true;
  for (int a = 0; a < alt->size(); ++a)
    for (int b = 0; b < alt->size(); ++b) {
      CHECK(lw.leq(a, b) == rw.leq(alt->inverse(a), alt->inverse(b)));
      if (lw.leq(a, b) != rw.leq(a, b)) same = false;
    }
  CHECK_FALSE(same);
}

TEST_CASE("the documented left-weak/right-weak asymmetry") {
  auto alt = b3();
  int r1 = alt->eval({{1, false}});
  int r2r1 = alt->eval({{2, false}, {1, false}});
  Poset lw = build_order(*alt, OrderFlavor::LeftWeak);
  Poset rw = build_order(*alt, OrderFlavor::RightWeak);
  Poset ls = build_order(*alt, OrderFlavor::LeftStrong);
  Poset rs = build_order(*alt, OrderFlavor::RightStrong);
  CHECK(lw.leq(r1, r2r1));
  CHECK(ls.leq(r1, r2r1));
  CHECK_FALSE(rw.leq(r1, r2r1));
  CHECK_FALSE(rs.leq(r1, r2r1));
}

TEST_CASE("weak order is contained in strong order") {
  for (auto alt : {b3(), i2(7)}) {
    Poset lw = build_order(*alt, OrderFlavor::LeftWeak);
    Poset ls = build_order(*alt, OrderFlavor::LeftStrong);
    for (int a = 0; a < alt->size(); ++a)
      for (int b = 0; b < alt->size(); ++b)
        if (lw.leq(a, b)) CHECK(ls.leq(a, b));
  }
}

TEST_CASE("evenly-laced orders: graded, semilattice, thin, unique max") {
  for (auto alt : {b3(), i2(8)}) {
    const GroupTable& g = alt->group();
    int top = alt->tau(g.longest_element());
    for (OrderFlavor f : kFlavors) {
      Poset poset = build_order(*alt, f);
      OrderReport rep = order_properties(poset, *alt);
      CAPTURE(flavor_name(f));
      CHECK(rep.graded);
      CHECK(rep.unique_max);
      CHECK(rep.max_element == top);
      bool weak = f == OrderFlavor::LeftWeak || f == OrderFlavor::RightWeak;
      if (weak) {
        CHECK(rep.meet_semilattice);
        CHECK(rep.weak_covers_step_one);
      } else {
        CHECK(rep.thin);
      }
    }
  }
}

TEST_CASE("odd dihedral strong order is not thin") {
  auto alt = i2(7);
  Poset ls = build_order(*alt, OrderFlavor::LeftStrong);
  OrderReport rep = order_properties(ls, *alt);
  // graded with two maximal elements; the rank-2 upper sets have 5 elements
  CHECK(rep.graded);
  CHECK_FALSE(rep.unique_max);
  CHECK_FALSE(rep.thin);
  CHECK(rep.detail.find("5 elements") != std::string::npos);

  // the weak order is a pair of chains: a meet-semilattice
  Poset lw = build_order(*alt, OrderFlavor::LeftWeak);
  OrderReport wrep = order_properties(lw, *alt);
  CHECK(wrep.graded);
  CHECK(wrep.meet_semilattice);
  CHECK(lw.covers().size() == 6);
}

TEST_CASE("right weak order equals palindrome-set inclusion when evenly-laced") {
  auto alt = i2(8);
  Poset rw = build_order(*alt, OrderFlavor::RightWeak);
  for (int u = 0; u < alt->size(); ++u) {
    std::set<int> pu = alt->p_left(u);
    for (int w = 0; w < alt->size(); ++w) {
      std::set<int> pw = alt->p_left(w);
      bool incl = std::includes(pw.begin(), pw.end(), pu.begin(), pu.end());
      CHECK(rw.leq(u, w) == incl);
    }
  }
}

TEST_CASE("strong orders have the toggled-subword characterization") {
  for (auto alt : {b3(), i2(8)}) {
    Poset ls = build_order(*alt, OrderFlavor::LeftStrong);
    Poset rs = build_order(*alt, OrderFlavor::RightStrong);
    for (int u = 0; u < alt->size(); ++u)
      for (int w = 0; w < alt->size(); ++w) {
        CHECK(ls.leq(u, w) == strong_subword_leq(*alt, u, w, true));
        CHECK(rs.leq(u, w) == strong_subword_leq(*alt, u, w, false));
      }
  }
}

TEST_CASE("dot export carries weak covers solid and strong-only covers dotted") {
  auto alt = i2(8);
  std::string dot = poset_dot(*alt, OrderFlavor::LeftStrong);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("style=dotted") != std::string::npos);
  CHECK(dot.find("label=\"e\"") != std::string::npos);
  // weak flavors have no dotted edges
  std::string weak_dot = poset_dot(*alt, OrderFlavor::LeftWeak);
  CHECK(weak_dot.find("style=dotted") == std::string::npos);
  // deterministic output
  CHECK(dot == poset_dot(*alt, OrderFlavor::LeftStrong));
}

TEST_CASE("flavor names round-trip") {
  for (OrderFlavor f : kFlavors) CHECK(flavor_from_name(flavor_name(f)) == f);
  CHECK_THROWS_AS(flavor_from_name("sideways"), Error);
}
