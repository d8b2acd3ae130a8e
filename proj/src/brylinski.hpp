#pragma once

// The positive principal Heisenberg s+ and the brute-forced Brylinski
// filtration on the dominant weight spaces Z_n.
//
// s+ is computed abstractly per principal degree m as the kernel of
// ad(e) on the degree-m component of the loop algebra, with
// e = sum_i x_{alpha_i} + x_{-theta} t.  The filtration subspaces
//
//   F^i = { v : u_{1} ... u_{i+1} v = 0 for all basis monomials }
//
// are computed by the graded recursion F^i(C) = { v : u v in F^{i-1} }
// over all components C of bounded twisted degree.  Replacing the power
// condition x^{i+1} v = 0 (for every x in s+) by the monomial condition is
// the standard polarization argument: over a field of characteristic 0, a
// symmetric multilinear form vanishes on the diagonal iff it vanishes, and
// the realized s+ operators commute, so span{x^{i+1} : x} equals
// span{u_{j_1} ... u_{j_{i+1}} : basis monomials}.  A randomized
// necessary-direction spot check is provided alongside.

#include "matrix.hpp"
#include "twisted.hpp"

namespace wlat {

struct SPlusBasis {
  int max_degree = 0;
  // by_degree[m] = basis of the degree-m component, m = 1..max_degree
  std::vector<std::vector<LoopElt>> by_degree;

  std::vector<std::pair<int, int>> flat_index() const;  // (degree, position)
  const LoopElt& at(const std::pair<int, int>& k) const { return by_degree[k.first][k.second]; }
};

// principal nilpotent e = sum_{i=1..l} x_{alpha_i} + x_{-theta} t
LoopElt principal_nilpotent(const RootSystem& rs);

// Exact solution spaces of [x, e] = 0 per principal degree; dimensions are
// checked against the exponent multiplicities (mismatch = hard failure).
SPlusBasis splus_basis(const ChevalleyBasis& chev, int max_degree);

class BrylinskiFiltration {
 public:
  // computes F^i on every component of twisted degree <= n_max until the
  // charge-zero chain stabilizes
  BrylinskiFiltration(Twisted& tw, int n_max);

  int n_max() const { return n_max_; }
  const SPlusBasis& splus() const { return splus_; }

  long dim(int n, int i) const;          // dim F^i Z_n, any i >= -1
  Matrix subspace(int n, int i) const;   // basis columns of F^i Z_n
  int stabilization_index(int n) const;  // least i with F^i Z_n = Z_n

  // (n, i) -> dim F^i Z_n - dim F^{i-1} Z_n, nonzero jumps only
  std::map<std::pair<int, int>, long> jump_table() const;

 private:
  Twisted& tw_;
  int n_max_;
  SPlusBasis splus_;
  std::vector<Component> components_;
  // chain_[c][k] = basis of F^{k-1} on component c (so chain_[c][0] is F^{-1} = 0)
  std::map<Component, std::vector<Matrix>> chain_;
};

// x^{i+1} kills F^i Z_n for random rational combinations x of the s+ basis
// (the necessary direction of polarization); returns false on a violation.
bool polarization_spot_check(Twisted& tw, const BrylinskiFiltration& filt, int trials,
                             unsigned long seed);

// realized s+ operators commute pairwise on all components of degree <= bound
bool splus_commute_check(Twisted& tw, const SPlusBasis& splus, const Rat& bound);

}  // namespace wlat
