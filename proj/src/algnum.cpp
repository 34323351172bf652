#include "coxalt/algnum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace coxalt {

namespace {

// Exact division of integer polynomials, quotient must be exact.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size()) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.size() < den.size()) break;
    Int lead = num.back() / den.back();
    size_t shift = num.size() - den.size();
    quot[shift] = lead;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return quot;
}

}  // namespace

std::vector<Int> cyclotomic_poly(int n) {
  // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Int> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = poly_div_exact(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

std::vector<Int> cos2_minimal_poly(int m) {
  if (m < 2) throw std::invalid_argument("cos2_minimal_poly: m >= 2 required");
  // Phi_{2m} is palindromic of even degree D; write Phi_{2m}(z) = z^{D/2} psi(z + 1/z)
  // and recover psi through z^k + z^-k = G_k(x), G_0 = 2, G_1 = x,
  // G_k = x G_{k-1} - G_{k-2}.
  std::vector<Int> phi = cyclotomic_poly(2 * m);
  int degree = static_cast<int>(phi.size()) - 1;
  if (degree % 2 != 0) throw std::logic_error("cyclotomic degree not even");
  int half = degree / 2;
  for (int k = 0; k <= half; ++k)
    if (phi[half - k] != phi[half + k]) throw std::logic_error("cyclotomic not palindromic");

  std::vector<std::vector<Int>> g(half + 1);
  g[0] = {2};
  if (half >= 1) g[1] = {0, 1};
  for (int k = 2; k <= half; ++k) {
    g[k].assign(k + 1, 0);
    for (size_t i = 0; i < g[k - 1].size(); ++i) g[k][i + 1] += g[k - 1][i];
    for (size_t i = 0; i < g[k - 2].size(); ++i) g[k][i] -= g[k - 2][i];
  }

  std::vector<Int> psi(half + 1, 0);
  psi[0] = phi[half];  // the k = 0 term contributes phi[half] * 1, not phi[half] * G_0
  for (int k = 1; k <= half; ++k)
    for (size_t i = 0; i < g[k].size(); ++i) psi[i] += phi[half + k] * g[k][i];
  return psi;
}

AlgebraicContext::AlgebraicContext(const std::set<int>& orders) {
  for (int m : orders) {
    if (m >= 4) {
      orders_.push_back(m);
      polys_.push_back(cos2_minimal_poly(m));
    }
  }
}

int AlgebraicContext::var_of(int order) const {
  for (int v = 0; v < var_count(); ++v)
    if (orders_[v] == order) return v;
  return -1;
}

AlgNum AlgNum::integer(const AlgebraicContext* ctx, long v) {
  AlgNum r(ctx);
  if (v != 0) r.terms_[Exp(ctx->var_count(), 0)] = v;
  return r;
}

AlgNum AlgNum::two_cos(const AlgebraicContext* ctx, int m) {
  if (m == 2) return integer(ctx, 0);
  if (m == 3) return integer(ctx, 1);
  int v = ctx->var_of(m);
  if (v < 0) throw std::invalid_argument("bond order not in algebraic context");
  AlgNum r(ctx);
  Exp e(ctx->var_count(), 0);
  e[v] = 1;
  r.terms_[e] = 1;
  r.reduce();
  return r;
}

void AlgNum::add_term(const Exp& e, const Int& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AlgNum::reduce() {
  // Replace x_v^d (d = degree of the minimal polynomial) by the lower-order
  // tail until all exponents are below their bound.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      const Exp& e = it->first;
      for (int v = 0; v < ctx_->var_count(); ++v) {
        int d = ctx_->degree(v);
        if (e[v] < d) continue;
        Int coeff = it->second;
        Exp base = e;
        base[v] -= d;
        terms_.erase(it);
        const std::vector<Int>& p = ctx_->min_poly(v);
        // x^d = -(p_0 + p_1 x + ... + p_{d-1} x^{d-1})   (p monic)
        for (int k = 0; k < d; ++k) {
          if (p[k] == 0) continue;
          Exp ne = base;
          ne[v] += k;
          add_term(ne, -p[k] * coeff);
        }
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
}

AlgNum AlgNum::operator-() const {
  AlgNum r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  AlgNum r(ctx_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exp e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  r.reduce();
  terms_ = std::move(r.terms_);
  return *this;
}

double AlgNum::approx() const {
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = static_cast<double>(c);
    for (size_t v = 0; v < e.size(); ++v)
      t *= std::pow(2.0 * std::cos(M_PI / ctx_->order_of(static_cast<int>(v))), e[v]);
    total += t;
  }
  return total;
}

std::string AlgNum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    Int a = c < 0 ? Int(-c) : c;
    bool printed = false;
    bool unit = (a == 1);
    if (!unit) {
      out << a;
      printed = true;
    }
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (printed) out << "*";
      out << "x" << ctx_->order_of(static_cast<int>(v));
      if (e[v] > 1) out << "^" << e[v];
      printed = true;
    }
    if (!printed) out << a;
  }
  return out.str();
}

}  // namespace coxalt
