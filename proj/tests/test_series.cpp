#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "series.hpp"

using namespace wlat;

namespace {

// Brute-force oracle: number of multisets of colored parts (n >= 1, one of
// `colors` colors) with part sum n.  Independent of the series engine.
long brute_colored_partitions(int colors, int n) {
  std::function<long(int, int, int)> go = [&](int rem, int max_part, int max_color) -> long {
    if (rem == 0) return 1;
    long total = 0;
    for (int p = std::min(rem, max_part); p >= 1; --p)
      for (int c = (p == max_part ? max_color : colors); c >= 1; --c)
        total += go(rem - p, p, c);
    return total;
  };
  return go(n, n, colors);
}

// Brute-force oracle for the gr Z Hilbert series: multisets of factors
// (degree d_k, n >= 1) contributing t^{d_k} q^n each.
std::map<std::pair<int, int>, long> brute_grz_table(const std::vector<int>& degrees, int t_cap, int q_cap) {
  std::map<std::pair<int, int>, long> table;
  int nd = int(degrees.size());
  // factor index f = (k, n) ordered lexicographically; choose multiplicities
  std::function<void(int, int, int, int)> go = [&](int k, int n, int t, int q) {
    if (t <= t_cap && q <= q_cap) {
      table[{t, q}]++;
    } else {
      return;
    }
    for (int kk = k; kk < nd; ++kk)
      for (int nn = (kk == k ? n : 1); q + nn <= q_cap; ++nn) {
        if (t + degrees[kk] > t_cap) break;
        go(kk, nn, t + degrees[kk], q + nn);
      }
  };
  go(0, 1, 0, 0);
  return table;
}

}  // namespace

TEST_CASE("series arithmetic: inverse is a right inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    QTSeries s(4, 5);
    s.set_coeff(0, 0, ratq(long(rng() % 5) + 1, long(rng() % 3) + 1));
    for (int t = 0; t <= 4; ++t)
      for (int q = 0; q <= 5; ++q)
        if (t + q > 0 && rng() % 2) s.set_coeff(t, q, ratq(long(rng() % 11) - 5, long(rng() % 4) + 1));
    QTSeries prod = s * s.inverse();
    CHECK(prod == QTSeries::one(4, 5));
  }
}

TEST_CASE("A1 Hilbert series of gr Z through q^3") {
  RootSystem rs = build_root_system(Family::A, 1);
  QTSeries s = hilbert_grz(rs, 6, 3);
  CHECK(s.coeff(0, 0) == 1);
  CHECK(s.q_row(1) == std::vector<Rat>{0, 0, 1, 0, 0, 0, 0});
  CHECK(s.q_row(2) == std::vector<Rat>{0, 0, 1, 0, 1, 0, 0});
  CHECK(s.q_row(3) == std::vector<Rat>{0, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("A2 Hilbert series row at q^2") {
  RootSystem rs = build_root_system(Family::A, 2);
  QTSeries s = hilbert_grz(rs, 6, 2);
  CHECK(s.q_row(2) == std::vector<Rat>{0, 0, 1, 1, 1, 1, 1});
}

TEST_CASE("Hilbert series against the brute-force monomial count") {
  for (auto [f, l] : std::vector<std::pair<Family, int>>{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::D, 4}}) {
    RootSystem rs = build_root_system(f, l);
    int t_cap = 8, q_cap = 5;
    QTSeries s = hilbert_grz(rs, t_cap, q_cap);
    auto brute = brute_grz_table(rs.degrees, t_cap, q_cap);
    for (int t = 0; t <= t_cap; ++t)
      for (int q = 0; q <= q_cap; ++q) {
        auto it = brute.find({t, q});
        long expect = it == brute.end() ? 0 : it->second;
        CHECK(s.coeff(t, q) == Rat(expect));
      }
  }
}

TEST_CASE("t = 1 specialization counts colored partitions") {
  for (int l : {1, 2, 3}) {
    RootSystem rs = build_root_system(Family::A, l);
    int q_cap = 6;
    QTSeries s = hilbert_grz(rs, rs.degrees.back() * q_cap, q_cap);
    for (int q = 0; q <= q_cap; ++q) {
      Rat total = 0;
      for (int t = 0; t <= s.t_cap(); ++t) total += s.coeff(t, q);
      CHECK(total == Rat(brute_colored_partitions(l, q)));
      CHECK(colored_partitions(l, q) == brute_colored_partitions(l, q));
    }
  }
  CHECK(colored_partitions(1, 4) == 5);
}

TEST_CASE("central charge values") {
  RootSystem a1 = build_root_system(Family::A, 1);
  CHECK(central_charge(a1, Rat(-1)) == Rat(1));
  CHECK(central_charge(a1, Rat(0)) == Rat(-2));
  // Virasoro cross-check for W(sl2): c = 1 - 6 (k+1)^2 / (k+2)
  for (long n = -9; n <= 9; ++n) {
    Rat k = ratq(n, 5);
    if (k == -2) continue;
    Rat vir = 1 - 6 * (k + 1) * (k + 1) / (k + 2);
    CHECK(central_charge(a1, k) == vir);
  }
  // k + h = 1 gives c = rank for every simply-laced type
  for (auto [f, l] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::D, 4}, {Family::E, 6}}) {
    RootSystem rs = build_root_system(f, l);
    CHECK(central_charge(rs, Rat(1 - rs.coxeter)) == Rat(l));
  }
  CHECK_THROWS_AS(central_charge(a1, Rat(-2)), InvalidArgument);
}

TEST_CASE("Verma character offsets and mantissa") {
  RootSystem a1 = build_root_system(Family::A, 1);
  RatVec lam = vec_scale(Rat(-1, 2), a1.weyl_vector);
  QTSeries ch = verma_character(a1, lam, Rat(-1), 6);
  CHECK(ch.q_offset() == Rat(1, 16));
  CHECK(ch.coeff(0, 0) == 1);
  CHECK(ch.coeff(0, 1) == 1);
  CHECK(ch.coeff(0, 2) == 2);
  CHECK(ch.coeff(0, 3) == 3);

  // lambda = -rho gives offset 0
  QTSeries ch0 = verma_character(a1, vec_scale(Rat(-1), a1.weyl_vector), Rat(-1), 6);
  CHECK(ch0.q_offset() == 0);

  // at k + h = 1 the offset is |lambda + rho|^2 / 2, and the mantissa is
  // independent of lambda and k
  std::mt19937_64 rng(17);
  for (auto [f, l] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::D, 4}}) {
    RootSystem rs = build_root_system(f, l);
    QTSeries phi = inv_phi_power(l, 5);
    for (int trial = 0; trial < 5; ++trial) {
      RatVec mu(l);
      for (auto& x : mu) x = ratq(long(rng() % 13) - 6, long(rng() % 5) + 1);
      Rat k = ratq(long(rng() % 7) - 3, long(rng() % 3) + 1);
      if (k == Rat(-rs.coxeter)) continue;
      QTSeries ch2 = verma_character(rs, mu, k, 5);
      for (int q = 0; q <= 5; ++q) CHECK(ch2.coeff(0, q) == phi.coeff(0, q));
      if (k == Rat(1 - rs.coxeter)) {
        RatVec shifted = vec_add(mu, rs.weyl_vector);
        CHECK(ch2.q_offset() == rs.ip(shifted, shifted) / 2);
      }
    }
    // explicit k + h = 1 offset identity
    RatVec mu(l, ratq(1, 3));
    QTSeries ch3 = verma_character(rs, mu, Rat(1 - rs.coxeter), 3);
    RatVec shifted = vec_add(mu, rs.weyl_vector);
    CHECK(ch3.q_offset() == rs.ip(shifted, shifted) / 2);
  }
}

TEST_CASE("W vacuum character") {
  RootSystem a1 = build_root_system(Family::A, 1);
  QTSeries w1 = w_vacuum_character(a1, 8);
  // partitions into parts >= 2
  std::vector<long> expect = {1, 0, 1, 1, 2, 2, 4, 4, 7};
  for (int q = 0; q <= 8; ++q) CHECK(w1.coeff(0, q) == Rat(expect[q]));

  RootSystem a2 = build_root_system(Family::A, 2);
  QTSeries w2 = w_vacuum_character(a2, 4);
  CHECK(w2.coeff(0, 3) == 2);

  for (auto [f, l] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::D, 4}, {Family::E, 6}}) {
    QTSeries w = w_vacuum_character(build_root_system(f, l), 2);
    CHECK(w.coeff(0, 0) == 1);
    CHECK(w.coeff(0, 1) == 0);
  }
}
