// Command-line front end: classify, enumerate, table, poset, complex, series,
// verify, experiment.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coxalt/complex.hpp"
#include "coxalt/evenleaf.hpp"
#include "coxalt/genfun.hpp"
#include "coxalt/poset.hpp"
#include "coxalt/verify.hpp"

using namespace coxalt;

namespace {

CoxeterSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

VerifyOptions caps_from_env() {
  VerifyOptions opts;
  if (const char* cap = std::getenv("COXALT_CAP")) {
    int v = std::stoi(cap);
    opts.element_cap = v;
    opts.root_cap = v;
  }
  return opts;
}

struct Bundle {
  std::shared_ptr<const GroupTable> table;
  std::shared_ptr<const AltGroup> alt;
};

Bundle build(const CoxeterSystem& sys) {
  VerifyOptions opts = caps_from_env();
  Bundle b;
  b.table = std::make_shared<GroupTable>(
      std::make_shared<RootSystem>(build_roots(sys, opts.root_cap)), opts.element_cap);
  b.alt = std::make_shared<AltGroup>(b.table);
  return b;
}

int cmd_classify(const std::string& file) {
  CoxeterSystem sys = load_system(file);
  NodeClass nc = classify_node(sys);
  std::cout << "rank " << sys.rank() << "\n";
  std::cout << "evenly_laced " << (nc.evenly_laced ? "yes" : "no") << "\n";
  std::cout << "leaf " << (nc.leaf ? "yes" : "no");
  if (nc.neighbor) std::cout << " (neighbor s" << *nc.neighbor << ")";
  std::cout << "\n";
  std::cout << "even_leaf " << (nc.even_leaf ? "yes" : "no") << "\n";
  if (nc.even_leaf && bond_finite(sys.bond(0, *nc.neighbor))) {
    DerivedSystem d = derive_prime(sys);
    std::cout << "derived system:\n" << serialize_system(d.sys);
  }
  return 0;
}

int cmd_enumerate(const std::string& file) {
  CoxeterSystem sys = load_system(file);
  Bundle b = build(sys);
  const GroupTable& g = *b.table;
  const AltGroup& alt = *b.alt;
  std::cout << "|W| " << g.size() << "\n";
  std::cout << "|W+| " << alt.size() << "\n";
  std::cout << "max_ell_S " << g.length(g.longest_element()) << "\n";
  int max_r = 0;
  for (int p = 0; p < alt.size(); ++p) max_r = std::max(max_r, alt.ell_r(p));
  std::cout << "max_ell_R " << max_r << "\n";
  std::vector<int> layers(g.length(g.longest_element()) + 1, 0);
  for (int w = 0; w < g.size(); ++w) ++layers[g.length(w)];
  std::cout << "layers_S";
  for (int count : layers) std::cout << " " << count;
  std::cout << "\n";
  std::vector<int> rlayers(max_r + 1, 0);
  for (int p = 0; p < alt.size(); ++p) ++rlayers[alt.ell_r(p)];
  std::cout << "layers_R";
  for (int count : rlayers) std::cout << " " << count;
  std::cout << "\n";
  return 0;
}

int cmd_table(const std::string& file) {
  CoxeterSystem sys = load_system(file);
  NodeClass nc = classify_node(sys);
  if (!nc.even_leaf) {
    std::cerr << "table requires an even-leaf s0\n";
    return 2;
  }
  Bundle b = build(sys);
  EvenLeafCorrespondence corr(b.alt);
  std::cout << corr.table_tsv();
  return 0;
}

int cmd_poset(const std::string& file, const std::string& flavor, bool dot) {
  CoxeterSystem sys = load_system(file);
  Bundle b = build(sys);
  OrderFlavor f = flavor_from_name(flavor);
  if (dot) {
    std::cout << poset_dot(*b.alt, f);
    return 0;
  }
  Poset poset = build_order(*b.alt, f);
  OrderReport rep = order_properties(poset, *b.alt);
  std::cout << "flavor " << flavor_name(f) << "\n";
  std::cout << "covers " << poset.covers().size() << "\n";
  std::cout << "graded " << (rep.graded ? "yes" : "no") << "\n";
  std::cout << "meet_semilattice " << (rep.meet_semilattice ? "yes" : "no") << "\n";
  std::cout << "thin " << (rep.thin ? "yes" : "no") << "\n";
  std::cout << "unique_max "
            << (rep.unique_max ? b.alt->display(rep.max_element) : std::string("no"))
            << "\n";
  return 0;
}

int cmd_complex(const std::string& file, const std::string& select) {
  CoxeterSystem sys = load_system(file);
  Bundle b = build(sys);
  AltComplex cx = build_complex(*b.alt);
  if (!select.empty()) {
    std::vector<int> colors;
    std::stringstream ss(select);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.size() < 2 || item[0] != 'r') throw Error("--select expects r<i>,r<j>,...");
      colors.push_back(std::stoi(item.substr(1)) - 1);
    }
    cx = type_select(cx, colors);
  }
  std::cout << complex_facets_text(cx);
  Homology h = homology(cx);
  std::cout << "reduced_betti";
  for (long b_d : h.reduced_betti) std::cout << " " << b_d;
  std::cout << "\n";
  std::cout << "torsion_free " << (h.torsion_free ? "yes" : "no") << "\n";
  return 0;
}

int cmd_series(const std::string& file, const std::string& stat, const std::string& closed,
               int n, int trunc) {
  CoxeterSystem sys = load_system(file);

  // affine closed forms need no enumeration
  if (closed == "affine-C" || closed == "affine-B") {
    AffineType type = closed == "affine-C" ? AffineType::CTildePlus : AffineType::BTildePlus;
    TruncSeries main = affine_series(type, n, trunc);
    // second evaluation order: expand the full numerator and divide once
    MultiPoly num = MultiPoly::constant({"q"}, 1);
    MultiPoly den = MultiPoly::constant({"q"}, 1);
    auto one_minus = [&](int k) {
      MultiPoly p = MultiPoly::constant({"q"}, 1);
      p.add_term({k}, -1);
      return p;
    };
    if (type == AffineType::CTildePlus) {
      for (int j = 1; j <= n; ++j) {
        num *= q_bracket(2 * j);
        den *= one_minus(2 * j - 1);
      }
    } else {
      num *= q_bracket(n);
      den *= one_minus(n - 1);
      for (int j = 1; j <= n - 1; ++j) {
        num *= q_bracket(2 * j);
        den *= one_minus(2 * j - 1);
      }
    }
    TruncSeries oracle = TruncSeries(num, trunc) / TruncSeries(den, trunc);
    std::cout << main.to_string() << "\n";
    std::string verdict = compare(main, oracle);
    std::cout << "compare " << verdict << "\n";
    return verdict == "equal" ? 0 : 1;
  }

  Bundle b = build(sys);
  MultiPoly enumerated({"q"});
  if (stat == "lengthS") enumerated = gf_length_s(*b.table);
  else if (stat == "l0nu") enumerated = gf_l0_nu(*b.table);
  else if (stat == "ellR") enumerated = gf_ellr_plus(*b.alt);
  else if (stat == "hatdes-ellR") enumerated = gf_hatdes_ellr_plus(*b.alt);
  else if (stat == "des-ellR") enumerated = gf_descount_ellr_plus(*b.alt);
  else if (stat == "des-sprime") {
    NodeClass nc = classify_node(sys);
    if (!nc.even_leaf) {
      std::cerr << "des-sprime requires an even-leaf s0\n";
      return 2;
    }
    EvenLeafCorrespondence corr(b.alt);
    enumerated = gf_desset_length(corr.prime_group());
  } else {
    std::cerr << "unknown statistic '" << stat << "'\n";
    return 2;
  }
  std::cout << enumerated.to_string() << "\n";

  if (!closed.empty()) {
    MultiPoly formula({"q"});
    if (closed == "typeA") formula = closed_typeA_plus(n);
    else if (closed == "Bn") formula = closed_Bn_bivariate(n);
    else if (closed == "Bn_plus") formula = closed_Bn_plus(n);
    else {
      std::cerr << "unknown closed form '" << closed << "'\n";
      return 2;
    }
    std::cout << formula.to_string() << "\n";
    std::string verdict = compare(enumerated, formula);
    std::cout << "compare " << verdict << "\n";
    return verdict == "equal" ? 0 : 1;
  }
  return 0;
}

int cmd_verify(const std::string& file) {
  CoxeterSystem sys = load_system(file);
  std::vector<CheckResult> results = run_verify(sys, caps_from_env());
  bool ok = true;
  for (const CheckResult& r : results) {
    switch (r.status) {
      case CheckResult::Status::Pass:
        std::cout << "PASS " << r.name << "\n";
        break;
      case CheckResult::Status::Skip:
        std::cout << "SKIP " << r.name << " (" << r.detail << ")\n";
        break;
      case CheckResult::Status::Fail:
        std::cout << "FAIL " << r.name << " (" << r.detail << ")\n";
        ok = false;
        break;
    }
  }
  return ok ? 0 : 1;
}

int cmd_experiment(const std::string& file, const std::string& question) {
  CoxeterSystem sys = load_system(file);
  ExperimentResult res = run_experiment(sys, question, caps_from_env());
  std::cout << "question " << res.question << "\n";
  for (const std::string& f : res.findings) std::cout << f << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for the alternating subgroup of a Coxeter system"};
  app.require_subcommand(1);

  std::string file, flavor = "left-weak", select, stat = "ellR", closed, question = "graded";
  int n = 0, trunc = 8;
  bool dot = false;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "system file")->required();
  };

  CLI::App* classify = app.add_subcommand("classify", "node classification and derived system");
  add_file(classify);
  CLI::App* enumerate = app.add_subcommand("enumerate", "group sizes and length layers");
  add_file(enumerate);
  CLI::App* table = app.add_subcommand("table", "the even-leaf correspondence table (TSV)");
  add_file(table);
  CLI::App* poset = app.add_subcommand("poset", "weak/strong orders");
  add_file(poset);
  poset->add_option("--flavor", flavor, "left-weak|right-weak|left-strong|right-strong");
  poset->add_flag("--dot", dot, "emit DOT");
  CLI::App* complex = app.add_subcommand("complex", "coset complex facets and homology");
  add_file(complex);
  complex->add_option("--select", select, "type selection, e.g. r1,r2");
  CLI::App* series = app.add_subcommand("series", "generating functions");
  add_file(series);
  series->add_option("--stat", stat, "lengthS|l0nu|ellR|hatdes-ellR|des-ellR|des-sprime");
  series->add_option("--closed", closed, "typeA|Bn|Bn_plus|affine-C|affine-B");
  series->add_option("--n", n, "size parameter for the closed form");
  series->add_option("--trunc", trunc, "truncation degree for affine series");
  CLI::App* verify = app.add_subcommand("verify", "run the named invariant suite");
  add_file(verify);
  CLI::App* experiment = app.add_subcommand("experiment", "open-question reports");
  add_file(experiment);
  experiment->add_option("--question", question,
                         "pl-unique|pl-implies-weak|graded|semilattice");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(file);
    if (enumerate->parsed()) return cmd_enumerate(file);
    if (table->parsed()) return cmd_table(file);
    if (poset->parsed()) return cmd_poset(file, flavor, dot);
    if (complex->parsed()) return cmd_complex(file, select);
    if (series->parsed()) return cmd_series(file, stat, closed, n, trunc);
    if (verify->parsed()) return cmd_verify(file);
    if (experiment->parsed()) return cmd_experiment(file, question);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
