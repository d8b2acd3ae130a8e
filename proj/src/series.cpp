#include "series.hpp"

namespace wlat {

QTSeries QTSeries::one(int t_cap, int q_cap) {
  QTSeries s(t_cap, q_cap);
  s.c_[{0, 0}] = 1;
  return s;
}

Rat QTSeries::coeff(int t, int q) const {
  auto it = c_.find({t, q});
  return it == c_.end() ? Rat(0) : it->second;
}

void QTSeries::set_coeff(int t, int q, const Rat& c) {
  internal_check(t >= 0 && q >= 0, "negative exponent");
  if (t > t_cap_ || q > q_cap_) return;
  if (c == 0)
    c_.erase({t, q});
  else
    c_[{t, q}] = c;
}

QTSeries QTSeries::operator+(const QTSeries& o) const {
  internal_check(t_cap_ == o.t_cap_ && q_cap_ == o.q_cap_ && q_offset_ == o.q_offset_,
                 "series truncation/offset mismatch in sum");
  QTSeries r = *this;
  for (const auto& [k, v] : o.c_) {
    Rat nv = r.coeff(k.first, k.second) + v;
    r.set_coeff(k.first, k.second, nv);
  }
  return r;
}

QTSeries QTSeries::operator*(const QTSeries& o) const {
  internal_check(t_cap_ == o.t_cap_ && q_cap_ == o.q_cap_, "series truncation mismatch in product");
  QTSeries r(t_cap_, q_cap_);
  r.q_offset_ = q_offset_ + o.q_offset_;
  for (const auto& [ka, va] : c_)
    for (const auto& [kb, vb] : o.c_) {
      int t = ka.first + kb.first, q = ka.second + kb.second;
      if (t > t_cap_ || q > q_cap_) continue;
      r.c_[{t, q}] += va * vb;
    }
  for (auto it = r.c_.begin(); it != r.c_.end();)
    it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
  return r;
}

QTSeries QTSeries::scaled(const Rat& c) const {
  QTSeries r(t_cap_, q_cap_);
  r.q_offset_ = q_offset_;
  if (c != 0)
    for (const auto& [k, v] : c_) r.c_[k] = c * v;
  return r;
}

QTSeries QTSeries::inverse() const {
  Rat c0 = coeff(0, 0);
  if (c0 == 0) throw InvalidArgument("series with zero constant term has no inverse");
  // b_0 = 1/a_0; b_k = -(1/a_0) sum_{0 < j <= k} a_j b_{k-j}, graded by t+q
  QTSeries r(t_cap_, q_cap_);
  r.q_offset_ = -q_offset_;
  r.c_[{0, 0}] = 1 / c0;
  // iterate over target keys in graded order
  for (int total = 1; total <= t_cap_ + q_cap_; ++total)
    for (int t = 0; t <= std::min(total, t_cap_); ++t) {
      int q = total - t;
      if (q > q_cap_) continue;
      Rat acc = 0;
      for (const auto& [k, a] : c_) {
        if (k.first == 0 && k.second == 0) continue;
        if (k.first > t || k.second > q) continue;
        Rat b = r.coeff(t - k.first, q - k.second);
        if (b != 0) acc += a * b;
      }
      if (acc != 0) r.c_[{t, q}] = -acc / c0;
    }
  return r;
}

QTSeries QTSeries::times_inv_one_minus(int a, int b) const {
  internal_check(b > 0 || a > 0, "geometric factor must raise the grading");
  // multiply by sum_j t^{ja} q^{jb}
  QTSeries r(t_cap_, q_cap_);
  r.q_offset_ = q_offset_;
  for (const auto& [k, v] : c_)
    for (int j = 0;; ++j) {
      int t = k.first + j * a, q = k.second + j * b;
      if (t > t_cap_ || q > q_cap_) break;
      r.c_[{t, q}] += v;
    }
  return r;
}

std::vector<Rat> QTSeries::q_row(int q) const {
  std::vector<Rat> row(t_cap_ + 1, Rat(0));
  for (const auto& [k, v] : c_)
    if (k.second == q) row[k.first] = v;
  return row;
}

bool QTSeries::operator==(const QTSeries& o) const {
  return t_cap_ == o.t_cap_ && q_cap_ == o.q_cap_ && q_offset_ == o.q_offset_ && c_ == o.c_;
}

QTSeries hilbert_grz(const RootSystem& rs, int t_cap, int q_cap) {
  if (t_cap < 0 || q_cap < 0) throw InvalidArgument("negative truncation order");
  QTSeries s = QTSeries::one(t_cap, q_cap);
  for (int d : rs.degrees) {
    if (d > t_cap) continue;  // factor is 1 within truncation only when q>=1 terms vanish
    for (int n = 1; n <= q_cap; ++n) s = s.times_inv_one_minus(d, n);
  }
  return s;
}

Rat central_charge(const RootSystem& rs, const Rat& k) {
  Rat shifted = k + Rat(rs.coxeter);
  if (shifted == 0) throw InvalidArgument("critical level k = -h is excluded");
  Rat rho2 = rs.ip(rs.weyl_vector, rs.weyl_vector);
  return Rat(rs.rank) - 12 * rho2 * (shifted - 2 + 1 / shifted);
}

QTSeries verma_character(const RootSystem& rs, const RatVec& lambda_root_basis,
                         const Rat& k, int q_cap) {
  Rat shifted = k + Rat(rs.coxeter);
  if (shifted == 0) throw InvalidArgument("critical level k = -h is excluded");
  RatVec lr = vec_add(lambda_root_basis, rs.weyl_vector);
  Rat offset = rs.ip(lr, lr) / (2 * shifted) + (central_charge(rs, k) - Rat(rs.rank)) / 24;
  QTSeries s = inv_phi_power(rs.rank, q_cap);
  s.set_q_offset(offset);
  return s;
}

QTSeries w_vacuum_character(const RootSystem& rs, int q_cap) {
  QTSeries s = QTSeries::one(0, q_cap);
  for (int d : rs.degrees)
    for (int n = d; n <= q_cap; ++n) s = s.times_inv_one_minus(0, n);
  return s;
}

QTSeries inv_phi_power(int colors, int q_cap) {
  QTSeries s = QTSeries::one(0, q_cap);
  for (int c = 0; c < colors; ++c)
    for (int n = 1; n <= q_cap; ++n) s = s.times_inv_one_minus(0, n);
  return s;
}

long colored_partitions(int colors, int n) {
  QTSeries s = inv_phi_power(colors, n);
  return rat_to_long(s.coeff(0, n));
}

}  // namespace wlat
