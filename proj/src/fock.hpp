#pragma once

// Heisenberg Fock spaces: graded monomial bases, highest-weight module
// tags, and element-level mode actions.  Matrix (blockwise) mode
// computations live in lattice.hpp; this file owns the state types.

#include <map>
#include <vector>

#include "cartan.hpp"
#include "rational.hpp"

namespace wlat {

// Product of creation operators alpha_i(-n), n >= 1, i a simple-root
// (boson) index.  Factors are kept sorted descending by (n, i); the
// multiset is the canonical form.
struct FockMonomial {
  std::vector<std::pair<int, int>> factors;  // (n, boson index)

  int degree() const;
  void push(int n, int i);  // insert keeping canonical order
  bool operator<(const FockMonomial& o) const { return factors < o.factors; }
  bool operator==(const FockMonomial& o) const { return factors == o.factors; }
  std::string str() const;
};

// Graded bases, enumerated once per degree in a fixed colexicographic
// order and cached; index maps give reproducible matrix layouts.
class FockBasis {
 public:
  explicit FockBasis(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  const std::vector<FockMonomial>& at(int degree) const;
  int dim(int degree) const { return int(at(degree).size()); }
  int index_of(const FockMonomial& m) const;

 private:
  int rank_;
  mutable std::vector<std::vector<FockMonomial>> by_degree_;
  mutable std::vector<std::map<FockMonomial, int>> index_;
  void ensure(int degree) const;
};

// Module tag: level and highest weight (simple-root basis).  pi_{k,mu}.
struct FockModule {
  Rat level;
  RatVec mu;

  bool operator==(const FockModule& o) const { return level == o.level && mu == o.mu; }
  bool operator<(const FockModule& o) const {
    if (level != o.level) return level < o.level;
    return mu < o.mu;
  }
};

// Exact linear combination of monomials applied to the highest-weight
// vector of a fixed module.
struct FockElement {
  FockModule module;
  std::map<FockMonomial, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_homogeneous(int* degree_out = nullptr) const;
  void add(const FockMonomial& m, const Rat& c);
  FockElement& operator+=(const FockElement& o);
  FockElement scaled(const Rat& c) const;
  std::string str() const;
};

FockElement fock_vacuum(const FockModule& mod);

// Heisenberg mode h_s for h given in root-basis coordinates: creation for
// s < 0, contraction via [h_m, h'_n] = m delta_{m+n,0} (h|h') k for s > 0,
// and the (mu|h) scalar for s = 0.
FockElement heisenberg_apply(const RootSystem& rs, const RatVec& h, long s, const FockElement& v);

// omega = 1/2 sum_i b_i(-1) b^i(-1) |0> in pi_1, dual bases via the Gram.
FockElement sugawara_vector(const RootSystem& rs);

// coordinates of a homogeneous element in the graded basis
RatVec fock_coords(const FockBasis& basis, const FockElement& v, int degree);
FockElement fock_from_coords(const FockBasis& basis, const FockModule& mod, const RatVec& coords, int degree);

}  // namespace wlat
