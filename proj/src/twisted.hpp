#pragma once

// The zeta-twisted realization of the basic representation on the vector
// space V_Q, by the shift operator
//
//   Delta(h,z) = z^{h_0} exp( sum_{k>=1} h_k (-z)^{-k} / (-k) ),  h = rho/h.
//
// Twisted fields are Y_z(v,z) := Y(Delta(h,z) v, z).  The normalized
// grading puts the vacuum 1 x e^0 at degree 0; a component (beta, s) sits
// in degree s + |beta|^2/2 + ht(beta)/h.  The subspace Z = pi_1 x e^0 is
// invariant under all twisted pi_1-modes and carries the Fock structure
// with highest weight rho/h.
//
// Affine currents: charge-alpha twisted modes live in (alpha|rho)/h + Z
// only for modes of 1 x e^{-alpha}, so the loop dictionary is
//
//   x_alpha t^m  ->  twisted mode of 1 x e^{-alpha} at index m + (alpha|rho)/h
//                    (equivalently the untwisted mode (1 x e^{-alpha})_{(m)}),
//   h t^m        ->  -h_m   (bare Heisenberg mode, no shift),
//   K            ->  id,
//
// the unique single-mode assignment satisfying the loop brackets with the
// cartan structure constants; the bracket self-tests pin it down.

#include "lattice.hpp"

namespace wlat {

class Twisted {
 public:
  explicit Twisted(Engine& eng);

  Engine& engine() const { return eng_; }
  const RootSystem& rs() const { return eng_.rs(); }

  // normalized twisted conformal degree of a component (vacuum = 0)
  Rat degree(const Component& c) const;
  // all components of degree <= bound (deterministic order)
  std::vector<Component> components_upto(const Rat& bound) const;

  Component vacuum() const { return Component{IntVec(rs().rank, 0), 0}; }

  // Delta(h,z) v for a pi_1 state: list of (z-power, state); powers are
  // 0, -1, ..., -deg(v), state at power -j homogeneous of degree deg(v)-j.
  std::vector<std::pair<Rat, FockElement>> delta_apply(const RatVec& h, const FockElement& v) const;
  // general lattice elements: the z^{h_0} factor contributes z^{(h|beta)}
  std::vector<std::pair<Rat, LatticeElement>> delta_apply(const RatVec& h, const LatticeElement& v) const;

  // twisted mode of a pi_1 state at integer index r, on any component
  Matrix pi1_mode_block(const FockElement& v, long r, const Component& src) const;

  // twisted mode of 1 x e^beta at index r in -(beta|rho)/h + Z
  Matrix exp_mode_block(const IntVec& beta, const Rat& r, const Component& src) const;
  Component exp_mode_target(const IntVec& beta, const Rat& r, const Component& src) const;

  // action of a loop-algebra element through the dictionary above
  std::vector<std::pair<Component, Matrix>> affine_action(const LoopElt& x, const Component& src) const;

  // affine_action applied to spread-out vectors
  GradedVec affine_apply(const LoopElt& x, const GradedVec& v) const;

 private:
  Engine& eng_;
  RatVec h_zeta_;   // rho / h
};

}  // namespace wlat
