#pragma once

// GMP-backed exact rationals and the few scalar helpers everything shares.
// Rationals cross the library boundary as strings "p" or "p/q" in lowest
// terms with q > 0; mpq_class canonicalizes for us.

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wlat {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw InvalidArgument("bad rational literal: '" + s + "'");
  if (r.get_den() == 0) throw InvalidArgument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// mpq_class(n, d) does not canonicalize; this does.
inline Rat ratq(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline long rat_to_long(const Rat& r) {
  internal_check(rat_is_integer(r) && r.get_num().fits_slong_p(),
                 "rational is not a small integer: " + rat_str(r));
  return r.get_num().get_si();
}

// Binomial coefficient with arbitrary (possibly negative) integer top.
inline Rat binom_int(long top, long k) {
  if (k < 0) return 0;
  Rat acc = 1;
  for (long j = 0; j < k; ++j) {
    acc *= Rat(top - j);
    acc /= Rat(j + 1);
  }
  return acc;
}

inline RatVec rat_vec(std::initializer_list<Rat> xs) { return RatVec(xs); }

inline RatVec vec_scale(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  internal_check(a.size() == b.size(), "vector size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool vec_is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace wlat
