#pragma once

// The lattice vertex algebra V_Q = pi_1 (x) C_eps[Q] and its graded mode
// machinery.  All operators are computed blockwise between graded
// components as exact sparse-ish rational matrices:
//
//   * exponential vertex operators (1 x e^beta)_{(n)} by direct
//     coefficient extraction from
//       e^beta z^{(beta|gamma)} exp(sum_{m>=1} z^m/m beta(-m))
//                               exp(-sum_{m>=1} z^-m/m beta(m)),
//   * modes of arbitrary pi_1 states on any Fock module by the iterate
//     (associativity) formula, peeling one creation factor at a time,
//   * screening zero modes as the (1 x e^{-alpha_i})_{(0)} restriction.
//
// Blocks are memoized per (state, mode, module, degree); the caches are
// append-only behind a mutex, so computed blocks can be shared freely.

#include <map>
#include <mutex>

#include "fock.hpp"
#include "matrix.hpp"

namespace wlat {

// Graded component of V_Q: lattice charge and Fock degree.
struct Component {
  IntVec charge;
  int degree = 0;

  bool operator<(const Component& o) const {
    return charge != o.charge ? charge < o.charge : degree < o.degree;
  }
  bool operator==(const Component& o) const { return charge == o.charge && degree == o.degree; }
  std::string str() const;
};

// Linear combination of (Fock monomial (x) e^beta) basis states.
struct LatticeElement {
  std::map<std::pair<FockMonomial, IntVec>, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const FockMonomial& m, const IntVec& beta, const Rat& c);
  LatticeElement& operator+=(const LatticeElement& o);
  LatticeElement scaled(const Rat& c) const;
};

LatticeElement lattice_from_fock(const FockElement& v, const IntVec& beta);

// Graded operator presented component-by-component.  A source component
// may feed several targets (sums of states of different charges).
struct ModeOperator {
  Rat index;  // integer here; fractional indices appear in the twisted picture
  std::map<Component, std::vector<std::pair<Component, Matrix>>> blocks;
};

// Vectors spread over several graded components.
using GradedVec = std::map<Component, RatVec>;

GradedVec graded_add(const GradedVec& a, const GradedVec& b);
bool graded_is_zero(const GradedVec& v);
GradedVec mode_apply(const ModeOperator& op, const GradedVec& v);

class Engine {
 public:
  explicit Engine(const RootSystem& rs);

  const RootSystem& rs() const { return rs_; }
  const ChevalleyBasis& chev() const { return chev_; }
  const FockBasis& basis() const { return basis_; }
  const RatVec& rho_over_h() const { return rho_over_h_; }

  FockModule pi1() const { return FockModule{Rat(1), RatVec(rs_.rank, Rat(0))}; }
  FockModule fock_module(const RatVec& mu) const { return FockModule{Rat(1), mu}; }
  FockModule charge_module(const IntVec& gamma) const;

  // Heisenberg mode h_m on pi_{k,mu}^{[s]} -> [s-m]; h in root-basis coords.
  Matrix heis_block(const RatVec& h, long m, const FockModule& mod, int s);

  // (1 x e^beta)_{(n)} restricted to the (gamma, s) component.  The target
  // is (gamma+beta, s - n - 1 - (beta|gamma)); an empty matrix is returned
  // when the target degree is negative.
  Matrix exp_block(const IntVec& beta, long n, const IntVec& gamma, int s);
  static int exp_target_degree(const RootSystem& rs, const IntVec& beta, long n, const IntVec& gamma, int s);

  // u_{(n)} for a pi_1 state u, acting on pi_{1,mu}^{[s]} (mu = charge for
  // V_Q components); target degree s + deg(u) - n - 1.
  Matrix state_mode_block(const FockMonomial& u, long n, const FockModule& mod, int s);
  Matrix state_mode_block(const FockElement& u, long n, const FockModule& mod, int s);

  // Virasoro modes of a weight-2 state via the reconstruction engine,
  // convention Y(omega,z) = sum L_n z^{-n-2}.
  Matrix virasoro_block(const FockElement& omega, long n, const FockModule& mod, int s);

  // Independent direct path: normal-ordered Sugawara bilinear.
  Matrix virasoro_block_direct(long n, const FockModule& mod, int s);

  // screening zero mode (1 x e^{-alpha_i})_{(0)} : pi_1^{[s]} -> (-alpha_i, s-1)
  Matrix screening_block(int i, int s);

  // element-level screening application (for single states / debugging)
  LatticeElement screening_apply(int i, const FockElement& v);

  // ModeOperator assembled over explicit source components.
  ModeOperator exp_mode_operator(const IntVec& beta, long n, const std::vector<Component>& sources);

 private:
  Matrix state_mode_uncached(const FockMonomial& u, long n, const FockModule& mod, int s);

  const RootSystem& rs_;
  ChevalleyBasis chev_;
  FockBasis basis_;
  RatVec rho_over_h_;

  std::mutex mu_;
  std::map<std::tuple<IntVec, long, IntVec, int>, Matrix> exp_cache_;
  std::map<std::tuple<FockMonomial, long, FockModule, int>, Matrix> state_cache_;
  std::map<std::pair<IntVec, int>, Matrix> screen_cache_;
};

}  // namespace wlat
