#include "walg.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

namespace wlat {

using ordered_json = nlohmann::ordered_json;

Matrix w_graded_kernel_matrix(Engine& eng, int d) {
  const RootSystem& rs = eng.rs();
  int dim = eng.basis().dim(d);
  Matrix K = Matrix::identity(dim);
  for (int i = 0; i < rs.rank && K.cols() > 0; ++i) {
    Matrix S = eng.screening_block(i, d);
    if (S.rows() == 0) continue;  // d = 0: zero mode kills the vacuum line anyway
    Matrix C = restrict_kernel(S, K);
    K = K * C;
  }
  long expect = rat_to_long(w_vacuum_character(rs, d).coeff(0, d));
  internal_check(K.cols() == expect,
                 "screening kernel dimension mismatch at degree " + std::to_string(d) +
                     ": got " + std::to_string(K.cols()) + ", character says " + std::to_string(expect));
  return K;
}

std::vector<FockElement> w_graded_kernel(Engine& eng, int d) {
  Matrix K = w_graded_kernel_matrix(eng, d);
  std::vector<FockElement> out;
  for (int j = 0; j < K.cols(); ++j)
    out.push_back(fock_from_coords(eng.basis(), eng.pi1(), K.column(j), d));
  return out;
}

int default_w_cutoff(const RootSystem& rs) {
  int dl = rs.degrees.back();
  return std::max(2 * dl, dl + 4);
}

namespace {

// Tuples ((p_1,k_1),...) with p weakly decreasing, k_i <= -d_{p_i}, and
// within equal p the k's weakly increasing; bucketed by total degree.
std::vector<std::vector<std::vector<std::pair<int, int>>>> creative_tuples(
    const std::vector<int>& degrees, int n_gens, int n_max) {
  std::vector<std::vector<std::vector<std::pair<int, int>>>> tuples(n_max + 1);
  std::vector<std::pair<int, int>> cur;
  int used = 0;
  std::function<void(int, int)> go = [&](int p, int max_part) {
    tuples[used].push_back(cur);
    int rem = n_max - used;
    if (rem == 0) return;
    for (int pp = p; pp >= 1; --pp) {
      int hi = (pp == p) ? std::min(max_part, rem) : rem;
      for (int neg = hi; neg >= degrees[pp - 1]; --neg) {
        cur.push_back({pp, -neg});
        used += neg;
        go(pp, neg);
        used -= neg;
        cur.pop_back();
      }
    }
  };
  go(n_gens, n_max);
  return tuples;
}

}  // namespace

std::vector<Matrix> decomposable_span(Engine& eng, const std::vector<FockElement>& gens,
                                      const std::vector<int>& degrees, int n_max) {
  auto tuples = creative_tuples(degrees, int(gens.size()), n_max);
  std::vector<Matrix> out;
  for (int n = 0; n <= n_max; ++n) {
    IncrementalSpan span(eng.basis().dim(n));
    for (const auto& t : tuples[n]) {
      RatVec v{Rat(1)};
      int deg = 0;
      for (auto it = t.rbegin(); it != t.rend(); ++it) {  // rightmost first
        auto [p, kk] = *it;
        Matrix block = w_mode_block(eng, gens[p - 1], degrees[p - 1], kk, eng.pi1(), deg);
        v = block.apply(v);
        deg -= kk;
      }
      span.add(v);
    }
    out.push_back(span.basis_columns());
  }
  return out;
}

WGenerators choose_generators(Engine& eng, int cutoff) {
  const RootSystem& rs = eng.rs();
  if (cutoff < rs.degrees.back())
    throw LimitExceeded("generator cutoff " + std::to_string(cutoff) +
                        " below the top degree " + std::to_string(rs.degrees.back()));
  WGenerators w;
  w.type_name = rs.name();
  w.cutoff = cutoff;
  w.degrees = rs.degrees;
  w.gens.resize(rs.rank);
  w.chosen_indices.assign(rs.rank, -1);

  // kernels (and the dimension check against the character) at every degree
  std::vector<Matrix> kernels;
  for (int d = 0; d <= cutoff; ++d) {
    kernels.push_back(w_graded_kernel_matrix(eng, d));
    w.kernel_dims.push_back(kernels.back().cols());
  }

  // omega^{(1)} is the Sugawara vector, exactly
  w.gens[0] = sugawara_vector(rs);
  for (int i = 0; i < rs.rank; ++i)
    internal_check(eng.screening_apply(i, w.gens[0]).is_zero(), "Sugawara vector not screened");

  // walk the distinct higher degrees in ascending order
  for (int k = 1; k < rs.rank;) {
    int d = rs.degrees[k];
    int mult = 0;
    while (k + mult < rs.rank && rs.degrees[k + mult] == d) ++mult;

    const Matrix& K = kernels[d];
    std::vector<FockElement> lower(w.gens.begin(), w.gens.begin() + k);
    std::vector<int> lower_deg(rs.degrees.begin(), rs.degrees.begin() + k);
    Matrix D = decomposable_span(eng, lower, lower_deg, d)[d];
    internal_check(column_span_contained(D, K), "decomposables escape the screening kernel");
    internal_check(K.cols() - D.cols() == mult,
                   "expected " + std::to_string(mult) + " fresh generators at degree " + std::to_string(d));

    // deterministic pivot rule: first kernel columns that grow the span
    IncrementalSpan acc(K.rows());
    acc.add_columns(D);
    int found = 0;
    for (int j = 0; j < K.cols() && found < mult; ++j) {
      if (acc.add(K.column(j))) {
        w.gens[k + found] = fock_from_coords(eng.basis(), eng.pi1(), K.column(j), d);
        w.chosen_indices[k + found] = j;
        ++found;
      }
    }
    internal_check(found == mult, "pivot search failed to complete the kernel basis");
    k += mult;
  }
  return w;
}

Matrix w_mode_block(Engine& eng, const FockElement& gen, int gen_degree, long n,
                    const FockModule& mod, int s) {
  int deg = 0;
  internal_check(gen.is_homogeneous(&deg) && deg == gen_degree, "generator degree mismatch");
  return eng.state_mode_block(gen, n + gen_degree - 1, mod, s);
}

std::vector<long> free_generation_dims(Engine& eng, const WGenerators& w, int n_max) {
  auto span = decomposable_span(eng, w.gens, w.degrees, n_max);
  std::vector<long> dims;
  for (const Matrix& m : span) dims.push_back(m.cols());
  return dims;
}

WGenerators perturb_generators(Engine& eng, const WGenerators& w, unsigned long seed) {
  WGenerators out = w;
  std::mt19937_64 rng(seed);
  for (size_t k = 1; k < w.gens.size(); ++k) {
    int d = w.degrees[k];
    std::vector<FockElement> lower(w.gens.begin(), w.gens.begin() + k);
    std::vector<int> lower_deg(w.degrees.begin(), w.degrees.begin() + k);
    Matrix D = decomposable_span(eng, lower, lower_deg, d)[d];
    if (D.cols() == 0) continue;
    RatVec coeffs(size_t(D.cols()));
    for (auto& c : coeffs) c = ratq(long(rng() % 9) - 4, long(rng() % 3) + 1);
    RatVec shift(D.rows(), Rat(0));
    for (int j = 0; j < D.cols(); ++j)
      for (int r = 0; r < D.rows(); ++r) shift[r] += D.at(r, j) * coeffs[j];
    FockElement pert = fock_from_coords(eng.basis(), eng.pi1(), shift, d);
    out.gens[k] += pert;
  }
  return out;
}

namespace {

ordered_json fock_element_json(const FockElement& v) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : v.terms) {
    ordered_json factors = ordered_json::array();
    for (auto [n, i] : m.factors) factors.push_back({n, i});
    terms.push_back({{"monomial", factors}, {"coeff", rat_str(c)}});
  }
  return terms;
}

FockElement fock_element_from_json(const FockModule& mod, const ordered_json& terms) {
  FockElement v;
  v.module = mod;
  for (const auto& t : terms) {
    FockMonomial m;
    for (const auto& f : t.at("monomial")) m.push(f.at(0).get<int>(), f.at(1).get<int>());
    v.add(m, rat_parse(t.at("coeff").get<std::string>()));
  }
  return v;
}

}  // namespace

std::string wgens_to_json(const WGenerators& w) {
  ordered_json j;
  j["schema"] = "wlat.wgens/1";
  j["type"] = w.type_name;
  j["convention"] = w.convention;
  j["cutoff"] = w.cutoff;
  j["degrees"] = w.degrees;
  j["kernel_dims"] = w.kernel_dims;
  j["chosen_indices"] = w.chosen_indices;
  ordered_json gens = ordered_json::array();
  for (size_t k = 0; k < w.gens.size(); ++k)
    gens.push_back({{"degree", w.degrees[k]}, {"terms", fock_element_json(w.gens[k])}});
  j["generators"] = gens;
  return j.dump(2) + "\n";
}

WGenerators wgens_from_json(const RootSystem& rs, const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.at("schema").get<std::string>() != "wlat.wgens/1")
    throw InvalidArgument("unsupported wgens schema");
  WGenerators w;
  w.type_name = j.at("type").get<std::string>();
  if (w.type_name != rs.name()) throw InvalidArgument("wgens file is for type " + w.type_name);
  w.convention = j.at("convention").get<std::string>();
  if (w.convention != kConventionVersion) throw InvalidArgument("wgens convention mismatch");
  w.cutoff = j.at("cutoff").get<int>();
  w.degrees = j.at("degrees").get<std::vector<int>>();
  w.kernel_dims = j.at("kernel_dims").get<std::vector<long>>();
  w.chosen_indices = j.at("chosen_indices").get<std::vector<int>>();
  FockModule pi1{Rat(1), RatVec(rs.rank, Rat(0))};
  for (const auto& g : j.at("generators")) w.gens.push_back(fock_element_from_json(pi1, g.at("terms")));
  internal_check(int(w.gens.size()) == rs.rank, "generator count mismatch in wgens file");
  return w;
}

std::string wgens_cache_key(const RootSystem& rs, int cutoff) {
  return rs.name() + "-c" + std::to_string(cutoff) + "-" + kConventionVersion;
}

WGenerators wgens_cached(Engine& eng, int cutoff, const std::string& cache_dir) {
  namespace fs = std::filesystem;
  fs::path file;
  if (!cache_dir.empty()) {
    file = fs::path(cache_dir) / ("wgens-" + wgens_cache_key(eng.rs(), cutoff) + ".json");
    if (fs::exists(file)) {
      std::ifstream in(file);
      std::stringstream ss;
      ss << in.rdbuf();
      return wgens_from_json(eng.rs(), ss.str());
    }
  }
  WGenerators w = choose_generators(eng, cutoff);
  if (!cache_dir.empty()) {
    if (!file.parent_path().empty()) fs::create_directories(file.parent_path());
    std::ofstream out(file);
    out << wgens_to_json(w);
  }
  return w;
}

}  // namespace wlat
