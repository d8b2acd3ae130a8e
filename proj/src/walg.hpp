#pragma once

// The W-algebra inside pi_1 as the joint kernel of the screening zero
// modes: graded kernels, a deterministic choice of free generators with
// conformal weights d_1 <= ... <= d_l, their modes on arbitrary Fock
// modules, and JSON persistence (content-addressed cache).

#include <optional>
#include <string>

#include "lattice.hpp"
#include "series.hpp"

namespace wlat {

// Bumped whenever a sign/basis convention changes; part of every cache key.
inline constexpr const char* kConventionVersion = "conv1";

struct WGenerators {
  std::string type_name;              // e.g. "D4"
  int cutoff = 0;                     // kernel dims recorded through this degree
  std::vector<int> degrees;           // d_1 <= ... <= d_l
  std::vector<FockElement> gens;      // gens[k] has degree degrees[k]
  std::vector<long> kernel_dims;      // dim W^{[d]} for d = 0..cutoff
  std::vector<int> chosen_indices;    // pivot choice per generator (kernel column)
  std::string convention = kConventionVersion;
};

// Exact kernel of all screenings on pi_1^{[d]}; dimension is checked
// against the free-generation character (mismatch = engine bug).
std::vector<FockElement> w_graded_kernel(Engine& eng, int d);
Matrix w_graded_kernel_matrix(Engine& eng, int d);

// Spec default: max(2 d_l, d_l + 4), exercising a decomposable degree.
int default_w_cutoff(const RootSystem& rs);

// omega^{(1)} = Sugawara; higher generators complete kernel bases modulo
// normally-ordered products and derivatives of the lower ones, chosen by a
// deterministic pivot rule.
WGenerators choose_generators(Engine& eng, int cutoff);

// Mode omega^{(p)}_n, convention Y(w,z) = sum_n w_n z^{-n-d_p}: the block
// maps pi_{1,mu}^{[s]} to pi_{1,mu}^{[s-n]}.
Matrix w_mode_block(Engine& eng, const FockElement& gen, int gen_degree, long n,
                    const FockModule& mod, int s);

// Span (per degree, basis matrices) of PBW monomials in creative modes
// k <= -d_p of the given generators, applied to the vacuum: the normally
// ordered products and derivatives.  This is the quotient reference for
// generator freshness; the full mode closure is strictly larger once OPEs
// of lower generators start producing higher ones.
std::vector<Matrix> decomposable_span(Engine& eng, const std::vector<FockElement>& gens,
                                      const std::vector<int>& degrees, int n_max);

// dims of decomposable_span of all generators (free-generation desk check).
std::vector<long> free_generation_dims(Engine& eng, const WGenerators& w, int n_max);

// Replace each higher generator by itself plus a seeded-random decomposable
// of equal weight (choice-dependence probe; omega^{(1)} stays Sugawara).
WGenerators perturb_generators(Engine& eng, const WGenerators& w, unsigned long seed);

std::string wgens_to_json(const WGenerators& w);
WGenerators wgens_from_json(const RootSystem& rs, const std::string& text);

std::string wgens_cache_key(const RootSystem& rs, int cutoff);
// Load from cache_dir if present, else compute and store (when cache_dir
// is nonempty).  Returns the generators either way.
WGenerators wgens_cached(Engine& eng, int cutoff, const std::string& cache_dir);

}  // namespace wlat
