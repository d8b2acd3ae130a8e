#pragma once

// Simply-laced root-system data (types A, D, E) computed from the Cartan
// matrix: positive roots by reflection closure, exponents from the height
// distribution, Weyl vector, and the bimultiplicative 2-cocycle fixing all
// structure-constant signs.  Everything downstream (lattice vertex
// operators, twisted currents, the principal Heisenberg) reuses the one
// sign convention fixed here.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace wlat {

enum class Family { A, D, E };

Family family_parse(const std::string& s);
std::string family_str(Family f);

using IntVec = std::vector<long>;  // lattice point in the simple-root basis

struct RootSystem {
  Family family;
  int rank;
  std::vector<IntVec> cartan;          // = Gram matrix, (alpha_i|alpha_i) = 2
  std::vector<IntVec> positive_roots;  // sorted by (height, coords)
  std::vector<int> degrees;            // ascending
  std::vector<int> exponents;          // ascending, e_k = d_k - 1
  int coxeter = 0;                     // = dual Coxeter (simply laced)
  RatVec weyl_vector;                  // simple-root basis, (rho|alpha_i) = 1

  std::string name() const { return family_str(family) + std::to_string(rank); }
  int n_positive() const { return int(positive_roots.size()); }

  // all roots: positive ones first, then their negatives in the same order
  int n_roots() const { return 2 * n_positive(); }
  IntVec root(int id) const;
  int root_id(const IntVec& r) const;            // -1 if not a root
  int negate_root_id(int id) const { return id < n_positive() ? id + n_positive() : id - n_positive(); }
  const IntVec& highest_root() const { return positive_roots.back(); }

  long height(const IntVec& v) const;
  long ip_int(const IntVec& a, const IntVec& b) const;  // Gram pairing
  Rat ip(const RatVec& a, const RatVec& b) const;
  Rat ip_mixed(const RatVec& a, const IntVec& b) const;

  // fundamental-weight coordinates <-> simple-root coordinates
  RatVec fundamental_to_root(const RatVec& m) const;  // solves Gram c = m
  RatVec root_to_fundamental(const RatVec& c) const;
};

RootSystem build_root_system(Family family, int rank);

// Weight with an explicit basis tag; conversion is through the Gram matrix.
struct WeightVector {
  enum class Basis { Root, Fundamental };
  RatVec coords;
  Basis basis = Basis::Root;

  RatVec in_root_basis(const RootSystem& rs) const;
};

Rat inner_product(const RootSystem& rs, const WeightVector& a, const WeightVector& b);

// eps(alpha_i, alpha_j) = +1 for i <= j and (-1)^{(alpha_i|alpha_j)} for
// i > j, extended bimultiplicatively over the root lattice.
class Cocycle {
 public:
  explicit Cocycle(const RootSystem& rs);
  int sign(const IntVec& a, const IntVec& b) const;  // +1 or -1

 private:
  std::vector<std::vector<int>> parity_;  // parity_[i][j] = (a_i|a_j) mod 2 if i > j else 0
};

// Element of the finite-dimensional algebra: Cartan part (root-basis
// coordinates of the corresponding weight) plus coefficients on the x_alpha.
struct GElt {
  RatVec h;               // empty or rank-sized
  std::map<int, Rat> x;   // root id -> coefficient

  bool is_zero() const;
};

GElt g_cartan(const RatVec& h);
GElt g_root(int root_id, const Rat& c = 1);
GElt g_add(const GElt& a, const GElt& b);
GElt g_scale(const Rat& c, const GElt& a);

// Chevalley structure with N(alpha,beta) = eps(alpha,beta); the bracket,
// the normalized invariant form, and a Jacobi sweep over basis triples.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& rs) : rs_(rs), eps_(rs) {}

  const RootSystem& root_system() const { return rs_; }
  const Cocycle& cocycle() const { return eps_; }
  int eps(const IntVec& a, const IntVec& b) const { return eps_.sign(a, b); }

  GElt bracket(const GElt& a, const GElt& b) const;
  Rat form(const GElt& a, const GElt& b) const;  // (x_a|x_-a) = eps(a,-a), (h|h') = Gram

  // exhaustive Jacobi check over basis triples; returns first failing triple
  std::optional<std::array<int, 3>> jacobi_failure() const;

 private:
  GElt bracket_basis(int kind_a, int id_a, const RatVec* ha, int kind_b, int id_b, const RatVec* hb) const;
  const RootSystem& rs_;
  Cocycle eps_;
};

// Loop-algebra element sum_m g_m t^m + c K; brackets carry the level-form
// central term m delta_{m+n,0} (x|y) K.
struct LoopElt {
  std::map<long, GElt> comp;
  Rat central;

  bool is_zero() const;
};

LoopElt loop_root(int root_id, long m, const Rat& c = 1);
LoopElt loop_cartan(const RatVec& h, long m);
LoopElt loop_add(const LoopElt& a, const LoopElt& b);
LoopElt loop_scale(const Rat& c, const LoopElt& a);
LoopElt loop_bracket(const ChevalleyBasis& chev, const LoopElt& a, const LoopElt& b);

// All lattice points c with (c + shift | c + shift) <= bound, enumerated
// deterministically (Fincke-Pohst with an exact LDL^T split of the Gram).
std::vector<IntVec> lattice_points_in_ball(const RootSystem& rs, const RatVec& shift, const Rat& bound);

}  // namespace wlat
