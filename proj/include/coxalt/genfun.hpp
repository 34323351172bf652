// Exact multivariate polynomials over the integers, truncated power series,
// q-analogs, and the length/descent generating functions of the group.

#ifndef COXALT_GENFUN_HPP
#define COXALT_GENFUN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxalt/altgrp.hpp"

namespace coxalt {

class MultiPoly {
 public:
  using Exp = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, Int c);
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  int var_index(const std::string& name) const;

  void add_term(const Exp& e, const Int& c);
  const Int& coefficient(const Exp& e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  // exact division; nullopt when the division leaves a remainder
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
  // substitute 1 for a variable and drop it from the universe
  MultiPoly at_one(const std::string& name) const;
  Int eval_all_ones() const;
  int total_degree() const;

  std::string to_string() const;
  static MultiPoly parse(const std::string& text, std::vector<std::string> vars);

 private:
  std::vector<std::string> vars_;
  std::map<Exp, Int> terms_;
  void check_universe(const MultiPoly& o) const;
};

// equal, or a text witness naming the first differing term
std::string compare(const MultiPoly& a, const MultiPoly& b);

class TruncSeries {
 public:
  TruncSeries(int trunc) : trunc_(trunc), poly_({"q"}) {}
  TruncSeries(MultiPoly p, int trunc);

  int trunc() const { return trunc_; }
  const MultiPoly& poly() const { return poly_; }
  Int coefficient(int k) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator*=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
  // division by a series with constant term +-1
  TruncSeries& operator/=(const TruncSeries& o);
  friend TruncSeries operator/(TruncSeries a, const TruncSeries& b) { return a /= b; }
  bool operator==(const TruncSeries& o) const;

  std::string to_string() const;

 private:
  int trunc_;
  MultiPoly poly_;
  void truncate();
};

std::string compare(const TruncSeries& a, const TruncSeries& b);

// q-analogs in the single variable q
MultiPoly q_bracket(int n);
MultiPoly q_factorial(int n);
// (x; q)_n with x a monomial c * q0^a q^b over the (q0, q) universe
MultiPoly pochhammer_q0(const Int& c, int a, int b, int n);

// statistics over the enumerated group
MultiPoly gf_length_s(const GroupTable& g);                        // q
MultiPoly gf_l0_nu(const GroupTable& g);                           // q0, q
MultiPoly gf_ellr_plus(const AltGroup& alt);                       // q
MultiPoly gf_hatdes_ellr_plus(const AltGroup& alt);                // q, t1..tn
MultiPoly gf_descount_ellr_plus(const AltGroup& alt);              // q, t
MultiPoly gf_desset_length(const GroupTable& g);                   // q, t1..tn over right descents
MultiPoly gf_descount_length(const GroupTable& g);                 // q, t

// [W(S; q0, q) / (1 + q0)]_{q0 = 1}, requires evenly-laced s0 and exact division
MultiPoly gf_plus_from_quotient(const GroupTable& g);

// (1 + 2q)(1 + q + 2q^2) ... (1 + q + ... + q^{n-3} + 2q^{n-2})
MultiPoly closed_typeA_plus(int n);
// [n]_q prod_{j=1}^{n-1} [2j]_q
MultiPoly closed_Bn_plus(int n);
// (-q0; q)_n [n]!_q over (q0, q)
MultiPoly closed_Bn_bivariate(int n);

enum class AffineType { CTildePlus, BTildePlus };
TruncSeries affine_series(AffineType type, int n, int trunc);

}  // namespace coxalt

#endif
