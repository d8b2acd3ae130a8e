#pragma once

// Truncated exact power series in q and (q,t), plus every closed-form
// series the verification suites compare against: the bigraded Hilbert
// series of gr Z, W Verma characters, the free-generation vacuum
// character, central charges, and colored-partition counts.

#include <map>

#include "cartan.hpp"
#include "rational.hpp"

namespace wlat {

// Keys are (t-exponent, q-exponent); entries beyond the truncation are
// never stored.  A rational q_offset carries fractional character
// prefactors exactly (the mantissa itself has integer exponents).
class QTSeries {
 public:
  QTSeries(int t_cap, int q_cap) : t_cap_(t_cap), q_cap_(q_cap) {}

  static QTSeries one(int t_cap, int q_cap);

  int t_cap() const { return t_cap_; }
  int q_cap() const { return q_cap_; }

  const Rat& q_offset() const { return q_offset_; }
  void set_q_offset(const Rat& o) { q_offset_ = o; }

  Rat coeff(int t, int q) const;
  void set_coeff(int t, int q, const Rat& c);
  const std::map<std::pair<int, int>, Rat>& terms() const { return c_; }

  QTSeries operator+(const QTSeries& o) const;
  QTSeries operator*(const QTSeries& o) const;
  QTSeries scaled(const Rat& c) const;
  // reciprocal of a series with nonzero constant term
  QTSeries inverse() const;

  // multiply by (1 - t^a q^b)^{-1}
  QTSeries times_inv_one_minus(int a, int b) const;

  std::vector<Rat> q_row(int q) const;  // coefficients of t^0..t^cap at fixed q
  bool operator==(const QTSeries& o) const;

 private:
  int t_cap_, q_cap_;
  Rat q_offset_;
  std::map<std::pair<int, int>, Rat> c_;
};

// Hilbert series of gr Z: prod_{k<=l} prod_{n>=1} (1 - t^{d_k} q^n)^{-1}.
QTSeries hilbert_grz(const RootSystem& rs, int t_cap, int q_cap);

// Central charge c(k) = l - 12 ( (k+h)|rho|^2 - 2(rho|rho) + |rho|^2/(k+h) ),
// with the coroot Weyl vector identified with rho (simply-laced).
Rat central_charge(const RootSystem& rs, const Rat& k);

// q^{ |lambda+rho|^2 / 2(k+h) + (c(k)-l)/24 } / phi(q)^l, offset kept exact.
QTSeries verma_character(const RootSystem& rs, const RatVec& lambda_root_basis,
                         const Rat& k, int q_cap);

// prod_k prod_{n >= d_k} (1 - q^n)^{-1}
QTSeries w_vacuum_character(const RootSystem& rs, int q_cap);

// coefficient of q^n in 1/phi(q)^colors
long colored_partitions(int colors, int n);

// 1/phi(q)^colors as a series (t-cap 0)
QTSeries inv_phi_power(int colors, int q_cap);

}  // namespace wlat
