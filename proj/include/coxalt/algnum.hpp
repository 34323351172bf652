// Exact arithmetic in the ring generated by the values 2cos(pi/m) for the
// bond orders m of a Coxeter system.  Each order m >= 4 contributes one
// indeterminate x_m reduced modulo the minimal polynomial of 2cos(pi/m);
// m = 2,3 evaluate to the rationals 0,1 directly.

#ifndef COXALT_ALGNUM_HPP
#define COXALT_ALGNUM_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxalt {

using Int = boost::multiprecision::cpp_int;

// Monic minimal polynomial of 2cos(pi/m) over the integers, ascending
// coefficients.  Obtained by folding the cyclotomic polynomial Phi_{2m}(z)
// through z + 1/z.
std::vector<Int> cos2_minimal_poly(int m);

// Cyclotomic polynomial Phi_n(z), ascending integer coefficients.
std::vector<Int> cyclotomic_poly(int n);

// The set of indeterminates x_m needed for a given collection of bond
// orders, together with their reduction polynomials.
class AlgebraicContext {
 public:
  explicit AlgebraicContext(const std::set<int>& orders);

  int var_count() const { return static_cast<int>(orders_.size()); }
  int order_of(int var) const { return orders_[var]; }
  // -1 when the order is rational (m = 2, 3) or absent.
  int var_of(int order) const;
  const std::vector<Int>& min_poly(int var) const { return polys_[var]; }
  int degree(int var) const { return static_cast<int>(polys_[var].size()) - 1; }

 private:
  std::vector<int> orders_;             // sorted, all >= 4
  std::vector<std::vector<Int>> polys_; // matching minimal polynomials
};

// An element of Z[x_{m_1},...,x_{m_k}] / (minpoly of each x_m), kept in
// canonical reduced form: every exponent of x_m is < deg(minpoly_m) and no
// zero coefficients are stored.  Zero test is therefore exact.
class AlgNum {
 public:
  AlgNum() : ctx_(nullptr) {}
  explicit AlgNum(const AlgebraicContext* ctx) : ctx_(ctx) {}

  static AlgNum integer(const AlgebraicContext* ctx, long v);
  // The value 2cos(pi/m); rational for m = 2, 3, an indeterminate otherwise.
  static AlgNum two_cos(const AlgebraicContext* ctx, int m);

  bool is_zero() const { return terms_.empty(); }
  const AlgebraicContext* ctx() const { return ctx_; }

  AlgNum operator-() const;
  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }

  bool operator==(const AlgNum& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgNum& o) const { return !(*this == o); }
  bool operator<(const AlgNum& o) const { return terms_ < o.terms_; }

  double approx() const;  // numeric evaluation, for diagnostics and oracles
  std::string to_string() const;

 private:
  using Exp = std::vector<int>;  // one exponent per context variable
  const AlgebraicContext* ctx_;
  std::map<Exp, Int> terms_;

  void add_term(const Exp& e, const Int& c);
  void reduce();
};

}  // namespace coxalt

#endif
