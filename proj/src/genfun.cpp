#include "coxalt/genfun.hpp"

#include <algorithm>
#include <sstream>

namespace coxalt {

namespace {

// canonical term order: total degree ascending, then exponent vectors in
// descending lexicographic order
bool term_before(const MultiPoly::Exp& a, const MultiPoly::Exp& b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db;
  return a > b;
}

}  // namespace

MultiPoly MultiPoly::constant(std::vector<std::string> vars, Int c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exp(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  Exp e(p.vars_.size(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

int MultiPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  throw Error("unknown variable '" + name + "'");
}

void MultiPoly::add_term(const Exp& e, const Int& c) {
  if (e.size() != vars_.size()) throw Error("exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Int& MultiPoly::coefficient(const Exp& e) const {
  static const Int zero = 0;
  auto it = terms_.find(e);
  return it == terms_.end() ? zero : it->second;
}

void MultiPoly::check_universe(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw Error("polynomials live in different variable universes");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_universe(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_universe(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_universe(o);
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exp e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  terms_ = std::move(r.terms_);
  return *this;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  check_universe(divisor);
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  MultiPoly rem(*this), quot(vars_);
  // leading term of the divisor in the canonical order, largest last
  auto lead = divisor.terms_.begin();
  for (auto it = divisor.terms_.begin(); it != divisor.terms_.end(); ++it)
    if (term_before(lead->first, it->first)) lead = it;
  while (!rem.terms_.empty()) {
    auto top = rem.terms_.begin();
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
      if (term_before(top->first, it->first)) top = it;
    Exp e(top->first);
    bool divisible = true;
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] -= lead->first[i];
      if (e[i] < 0) divisible = false;
    }
    if (!divisible || top->second % lead->second != 0) return std::nullopt;
    Int c = top->second / lead->second;
    MultiPoly mono(vars_);
    mono.add_term(e, c);
    quot += mono;
    rem -= mono * divisor;
  }
  return quot;
}

MultiPoly MultiPoly::at_one(const std::string& name) const {
  int idx = var_index(name);
  std::vector<std::string> new_vars;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (static_cast<int>(i) != idx) new_vars.push_back(vars_[i]);
  MultiPoly r(new_vars);
  for (const auto& [e, c] : terms_) {
    Exp ne;
    for (size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != idx) ne.push_back(e[i]);
    r.add_term(ne, c);
  }
  return r;
}

Int MultiPoly::eval_all_ones() const {
  Int total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

int MultiPoly::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exp, Int>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return term_before(a->first, b->first); });
  std::ostringstream out;
  bool first = true;
  for (auto* t : order) {
    const Int& c = t->second;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int a = c < 0 ? Int(-c) : c;
    bool printed = false;
    bool unit = a == 1;
    if (!unit) {
      out << a;
      printed = true;
    }
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (printed) out << "*";
      out << vars_[i];
      if (t->first[i] > 1) out << "^" << t->first[i];
      printed = true;
    }
    if (!printed) out << a;
  }
  return out.str();
}

MultiPoly MultiPoly::parse(const std::string& text, std::vector<std::string> vars) {
  MultiPoly p(std::move(vars));
  size_t pos = 0;
  auto skip_ws = [&]() { while (pos < text.size() && text[pos] == ' ') ++pos; };
  skip_ws();
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (!first || text[pos] == '+' || text[pos] == '-') {
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
        throw Error("expected '+' or '-' in polynomial");
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    }
    first = false;
    Int coeff = 1;
    Exp e(p.vars_.size(), 0);
    bool saw_factor = false;
    while (true) {
      if (pos < text.size() && std::isdigit(text[pos])) {
        std::string num;
        while (pos < text.size() && std::isdigit(text[pos])) num += text[pos++];
        coeff *= Int(num);
        saw_factor = true;
      } else if (pos < text.size() && std::isalpha(text[pos])) {
        std::string name;
        while (pos < text.size() && (std::isalnum(text[pos]) || text[pos] == '\''))
          name += text[pos++];
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::string num;
          while (pos < text.size() && std::isdigit(text[pos])) num += text[pos++];
          if (num.empty()) throw Error("missing exponent after '^'");
          exp = std::stoi(num);
        }
        e[p.var_index(name)] += exp;
        saw_factor = true;
      } else {
        throw Error("malformed term in polynomial");
      }
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!saw_factor) throw Error("empty term in polynomial");
    p.add_term(e, sign * coeff);
    skip_ws();
  }
  if (first) throw Error("empty polynomial text");
  return p;
}

std::string compare(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) return "different variable universes";
  MultiPoly diff = a - b;
  if (diff.is_zero()) return "equal";
  // witness: the canonically first term where the two sides differ
  std::string s = diff.to_string();
  size_t cut = s.find(" + ");
  size_t cut2 = s.find(" - ");
  if (cut2 != std::string::npos && (cut == std::string::npos || cut2 < cut)) cut = cut2;
  return "differ at " + (cut == std::string::npos ? s : s.substr(0, cut));
}

TruncSeries::TruncSeries(MultiPoly p, int trunc) : trunc_(trunc), poly_(std::move(p)) {
  if (poly_.vars() != std::vector<std::string>{"q"})
    throw Error("truncated series live in the single variable q");
  truncate();
}

void TruncSeries::truncate() {
  MultiPoly trimmed({"q"});
  for (int k = 0; k <= trunc_; ++k) {
    Int c = poly_.coefficient({k});
    if (c != 0) trimmed.add_term({k}, c);
  }
  poly_ = std::move(trimmed);
}

Int TruncSeries::coefficient(int k) const { return poly_.coefficient({k}); }

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (trunc_ != o.trunc_) throw Error("series truncation degrees differ");
  poly_ += o.poly_;
  truncate();
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) {
  if (trunc_ != o.trunc_) throw Error("series truncation degrees differ");
  poly_ *= o.poly_;
  truncate();
  return *this;
}

TruncSeries& TruncSeries::operator/=(const TruncSeries& o) {
  if (trunc_ != o.trunc_) throw Error("series truncation degrees differ");
  Int c0 = o.coefficient(0);
  if (c0 != 1 && c0 != -1)
    throw Error("series division needs a unit constant term");
  // b_n = (a_n - sum_{k=1}^{n} d_k b_{n-k}) / d_0
  std::vector<Int> out(trunc_ + 1, 0);
  for (int k = 0; k <= trunc_; ++k) {
    Int acc = coefficient(k);
    for (int j = 1; j <= k; ++j) acc -= o.coefficient(j) * out[k - j];
    out[k] = acc / c0;
  }
  MultiPoly p({"q"});
  for (int k = 0; k <= trunc_; ++k) p.add_term({k}, out[k]);
  poly_ = std::move(p);
  return *this;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  return trunc_ == o.trunc_ && poly_ == o.poly_;
}

std::string TruncSeries::to_string() const {
  return poly_.to_string() + " + O(q^" + std::to_string(trunc_ + 1) + ")";
}

std::string compare(const TruncSeries& a, const TruncSeries& b) {
  if (a.trunc() != b.trunc()) return "different truncation degrees";
  return compare(a.poly(), b.poly());
}

MultiPoly q_bracket(int n) {
  if (n < 0) throw Error("q_bracket needs n >= 0");
  MultiPoly p({"q"});
  for (int k = 0; k < n; ++k) p.add_term({k}, 1);
  return p;
}

MultiPoly q_factorial(int n) {
  MultiPoly p = MultiPoly::constant({"q"}, 1);
  for (int k = 1; k <= n; ++k) p *= q_bracket(k);
  return p;
}

MultiPoly pochhammer_q0(const Int& c, int a, int b, int n) {
  std::vector<std::string> vars{"q0", "q"};
  MultiPoly p = MultiPoly::constant(vars, 1);
  for (int k = 0; k < n; ++k) {
    MultiPoly factor = MultiPoly::constant(vars, 1);
    factor.add_term({a, b + k}, -c);  // 1 - x q^k
    p *= factor;
  }
  return p;
}

MultiPoly gf_length_s(const GroupTable& g) {
  MultiPoly p({"q"});
  for (int w = 0; w < g.size(); ++w) p.add_term({g.length(w)}, 1);
  return p;
}

MultiPoly gf_l0_nu(const GroupTable& g) {
  if (!g.evenly_laced())
    throw Error("EVENLY_LACED_REQUIRED: the (ell0, nu) statistic needs s0 evenly-laced");
  MultiPoly p({"q0", "q"});
  for (int w = 0; w < g.size(); ++w) p.add_term({g.ell0(w), g.nu(w)}, 1);
  return p;
}

MultiPoly gf_ellr_plus(const AltGroup& alt) {
  MultiPoly p({"q"});
  for (int w = 0; w < alt.size(); ++w) p.add_term({alt.ell_r(w)}, 1);
  return p;
}

namespace {

std::vector<std::string> t_universe(int n) {
  std::vector<std::string> vars{"q"};
  for (int i = 1; i < n; ++i) vars.push_back("t" + std::to_string(i));
  return vars;
}

}  // namespace

MultiPoly gf_hatdes_ellr_plus(const AltGroup& alt) {
  int n = alt.rank();
  MultiPoly p(t_universe(n));
  for (int w = 0; w < alt.size(); ++w) {
    MultiPoly::Exp e(n, 0);
    e[0] = alt.ell_r(w);
    for (int i : alt.descent_stats(w).hat_nasc) e[i] = 1;
    p.add_term(e, 1);
  }
  return p;
}

MultiPoly gf_descount_ellr_plus(const AltGroup& alt) {
  MultiPoly p({"q", "t"});
  for (int w = 0; w < alt.size(); ++w) {
    int des = static_cast<int>(alt.descent_stats(w).des.size());
    p.add_term({alt.ell_r(w), des}, 1);
  }
  return p;
}

MultiPoly gf_desset_length(const GroupTable& g) {
  int n = g.rank();
  std::vector<std::string> vars{"q"};
  for (int i = 0; i < n; ++i) vars.push_back("t" + std::to_string(i));
  MultiPoly p(vars);
  for (int w = 0; w < g.size(); ++w) {
    MultiPoly::Exp e(n + 1, 0);
    e[0] = g.length(w);
    for (int i : g.right_descents(w)) e[i + 1] = 1;
    p.add_term(e, 1);
  }
  return p;
}

MultiPoly gf_descount_length(const GroupTable& g) {
  MultiPoly p({"q", "t"});
  for (int w = 0; w < g.size(); ++w)
    p.add_term({g.length(w), static_cast<int>(g.right_descents(w).size())}, 1);
  return p;
}

MultiPoly gf_plus_from_quotient(const GroupTable& g) {
  MultiPoly w = gf_l0_nu(g);
  MultiPoly denom = MultiPoly::constant({"q0", "q"}, 1);
  denom.add_term({1, 0}, 1);  // 1 + q0
  auto quot = w.divide_exact(denom);
  if (!quot)
    throw Error("INEXACT_DIVISION: W(S; q0, q) is not divisible by 1 + q0");
  return quot->at_one("q0");
}

MultiPoly closed_typeA_plus(int n) {
  if (n < 2) throw Error("closed_typeA_plus needs n >= 2");
  MultiPoly p = MultiPoly::constant({"q"}, 1);
  for (int j = 2; j < n; ++j) {
    // [j]_q + q^{j-1} = 1 + q + ... + q^{j-2} + 2 q^{j-1}
    MultiPoly factor = q_bracket(j);
    factor.add_term({j - 1}, 1);
    p *= factor;
  }
  return p;
}

MultiPoly closed_Bn_plus(int n) {
  MultiPoly p = q_bracket(n);
  for (int j = 1; j < n; ++j) p *= q_bracket(2 * j);
  return p;
}

MultiPoly closed_Bn_bivariate(int n) {
  MultiPoly p = pochhammer_q0(-1, 1, 0, n);  // (-q0; q)_n
  MultiPoly fact = q_factorial(n);
  // lift [n]!_q into the (q0, q) universe
  MultiPoly lifted({"q0", "q"});
  for (int k = 0; k <= fact.total_degree(); ++k) {
    Int c = fact.coefficient({k});
    if (c != 0) lifted.add_term({0, k}, c);
  }
  return p * lifted;
}

TruncSeries affine_series(AffineType type, int n, int trunc) {
  if (type == AffineType::CTildePlus && n < 2)
    throw Error("the C-tilde series needs n >= 2");
  if (type == AffineType::BTildePlus && n < 3)
    throw Error("the B-tilde series needs n >= 3");
  if (trunc < 0) throw Error("truncation degree must be >= 0");

  auto as_series = [&](const MultiPoly& p) { return TruncSeries(p, trunc); };
  auto one_minus_qk = [&](int k) {
    MultiPoly p = MultiPoly::constant({"q"}, 1);
    p.add_term({k}, -1);
    return as_series(p);
  };

  TruncSeries acc = as_series(MultiPoly::constant({"q"}, 1));
  if (type == AffineType::CTildePlus) {
    for (int j = 1; j <= n; ++j)
      acc = acc * as_series(q_bracket(2 * j)) / one_minus_qk(2 * j - 1);
  } else {
    acc = acc * as_series(q_bracket(n)) / one_minus_qk(n - 1);
    for (int j = 1; j <= n - 1; ++j)
      acc = acc * as_series(q_bracket(2 * j)) / one_minus_qk(2 * j - 1);
  }
  return acc;
}

}  // namespace coxalt
