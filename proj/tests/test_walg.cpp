#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "walg.hpp"

using namespace wlat;

TEST_CASE("A1 kernel dimensions at degrees 0..4") {
  RootSystem rs = build_root_system(Family::A, 1);
  Engine eng(rs);
  std::vector<long> expect = {1, 0, 1, 1, 2};
  for (int d = 0; d <= 4; ++d) CHECK(long(w_graded_kernel(eng, d).size()) == expect[d]);
}

TEST_CASE("A2 kernel dimension at degree 3") {
  RootSystem rs = build_root_system(Family::A, 2);
  Engine eng(rs);
  CHECK(w_graded_kernel(eng, 3).size() == 2);
  // degree 1: no invariants in any type
  CHECK(w_graded_kernel(eng, 1).empty());
}

TEST_CASE("A1 generator is Sugawara, forced up to scalar") {
  RootSystem rs = build_root_system(Family::A, 1);
  Engine eng(rs);
  WGenerators w = choose_generators(eng, 6);
  REQUIRE(w.gens.size() == 1);
  FockElement omega = sugawara_vector(rs);
  CHECK(w.gens[0].terms == omega.terms);
  CHECK(w.kernel_dims == std::vector<long>{1, 0, 1, 1, 2, 2, 4});
  CHECK(default_w_cutoff(rs) == 6);
}

TEST_CASE("A2 decomposables at degree 3 have dimension 1") {
  RootSystem rs = build_root_system(Family::A, 2);
  Engine eng(rs);
  FockElement omega = sugawara_vector(rs);
  auto span = decomposable_span(eng, {omega}, {2}, 3);
  CHECK(span[3].cols() == 1);
  // and it is the translate T omega = L_{-1} omega
  Matrix lm1 = eng.virasoro_block(omega, -1, eng.pi1(), 2);
  RatVec t_omega = lm1.apply(fock_coords(eng.basis(), omega, 2));
  Matrix single = Matrix::from_columns({t_omega}, eng.basis().dim(3));
  CHECK(same_column_span(span[3], single));
}

TEST_CASE("A2 generators: one fresh generator of degree 3, screened") {
  RootSystem rs = build_root_system(Family::A, 2);
  Engine eng(rs);
  WGenerators w = choose_generators(eng, 4);
  REQUIRE(w.gens.size() == 2);
  CHECK(w.degrees == std::vector<int>{2, 3});
  for (int i = 0; i < 2; ++i)
    for (const auto& g : w.gens) CHECK(eng.screening_apply(i, g).is_zero());
}

TEST_CASE("D4 has two independent degree-4 generators") {
  RootSystem rs = build_root_system(Family::D, 4);
  Engine eng(rs);
  WGenerators w = choose_generators(eng, 6);
  REQUIRE(w.gens.size() == 4);
  CHECK(w.degrees == std::vector<int>{2, 4, 4, 6});
  int deg = 0;
  CHECK(w.gens[1].is_homogeneous(&deg));
  CHECK(deg == 4);
  CHECK(w.gens[2].is_homogeneous(&deg));
  CHECK(deg == 4);
  // independent modulo nothing: the two degree-4 choices are independent
  Matrix pair = Matrix::from_columns(
      {fock_coords(eng.basis(), w.gens[1], 4), fock_coords(eng.basis(), w.gens[2], 4)},
      eng.basis().dim(4));
  CHECK(pair.rank() == 2);
  for (int i = 0; i < 4; ++i)
    for (const auto& g : w.gens) CHECK(eng.screening_apply(i, g).is_zero());
}

TEST_CASE("w_mode: highest-weight eigenvalue and vanishing") {
  RootSystem rs = build_root_system(Family::A, 1);
  Engine eng(rs);
  WGenerators w = choose_generators(eng, 6);
  RatVec lam{ratq(3, 7)};
  FockModule mod = eng.fock_module(lam);
  // omega_0 |lam> = |lam|^2/2 |lam>
  Matrix m0 = w_mode_block(eng, w.gens[0], 2, 0, mod, 0);
  REQUIRE(m0.rows() == 1);
  CHECK(m0.at(0, 0) == rs.ip(lam, lam) / 2);
  // omega_n |lam> = 0 for n >= 1
  for (long n = 1; n <= 3; ++n) {
    Matrix mn = w_mode_block(eng, w.gens[0], 2, n, mod, 0);
    CHECK((mn.rows() == 0 || mn.is_zero()));
  }
  // the non-generic degeneration: omega_{-1}|0> = 0 in pi_{1,0}
  Matrix mm1 = w_mode_block(eng, w.gens[0], 2, -1, eng.pi1(), 0);
  CHECK(mm1.is_zero());
}

TEST_CASE("free generation: PBW span dims match the vacuum character") {
  for (auto [f, l, nmax] : std::vector<std::tuple<Family, int, int>>{
           {Family::A, 1, 7}, {Family::A, 2, 6}}) {
    RootSystem rs = build_root_system(f, l);
    Engine eng(rs);
    WGenerators w = choose_generators(eng, rs.degrees.back() + 1);
    auto dims = free_generation_dims(eng, w, nmax);
    QTSeries ch = w_vacuum_character(rs, nmax);
    for (int n = 0; n <= nmax; ++n) CHECK(Rat(dims[n]) == ch.coeff(0, n));
  }
}

TEST_CASE("JSON round trip and cache reuse") {
  RootSystem rs = build_root_system(Family::A, 2);
  Engine eng(rs);
  WGenerators w = choose_generators(eng, 4);
  std::string text = wgens_to_json(w);
  WGenerators back = wgens_from_json(rs, text);
  REQUIRE(back.gens.size() == w.gens.size());
  for (size_t k = 0; k < w.gens.size(); ++k) CHECK(back.gens[k].terms == w.gens[k].terms);
  CHECK(back.kernel_dims == w.kernel_dims);
  CHECK(wgens_to_json(back) == text);

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "wlat-test-cache";
  fs::remove_all(dir);
  WGenerators a = wgens_cached(eng, 4, dir.string());
  CHECK(fs::exists(dir / ("wgens-" + wgens_cache_key(rs, 4) + ".json")));
  WGenerators b = wgens_cached(eng, 4, dir.string());
  for (size_t k = 0; k < a.gens.size(); ++k) CHECK(a.gens[k].terms == b.gens[k].terms);
  // cached reload reproduces identical mode matrices
  for (size_t k = 0; k < a.gens.size(); ++k)
    for (long n = -2; n <= 2; ++n)
      for (int s = 0; s <= 3; ++s)
        CHECK(w_mode_block(eng, a.gens[k], a.degrees[k], n, eng.pi1(), s) ==
              w_mode_block(eng, b.gens[k], b.degrees[k], n, eng.pi1(), s));
  fs::remove_all(dir);
}

TEST_CASE("perturbed generators remain screened") {
  RootSystem rs = build_root_system(Family::A, 2);
  Engine eng(rs);
  WGenerators w = choose_generators(eng, 4);
  WGenerators p = perturb_generators(eng, w, 42);
  CHECK(p.gens[0].terms == w.gens[0].terms);
  CHECK(p.gens[1].terms != w.gens[1].terms);
  for (int i = 0; i < 2; ++i) CHECK(eng.screening_apply(i, p.gens[1]).is_zero());
}
