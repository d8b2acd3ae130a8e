#include "twisted.hpp"

#include <algorithm>

namespace wlat {

Twisted::Twisted(Engine& eng) : eng_(eng), h_zeta_(eng.rho_over_h()) {}

Rat Twisted::degree(const Component& c) const {
  const RootSystem& rs = eng_.rs();
  Rat d = Rat(c.degree) + Rat(rs.ip_int(c.charge, c.charge)) / 2 +
          Rat(rs.height(c.charge), rs.coxeter);
  internal_check(d >= 0, "twisted grading dipped below the vacuum at " + c.str());
  return d;
}

std::vector<Component> Twisted::components_upto(const Rat& bound) const {
  const RootSystem& rs = eng_.rs();
  std::vector<Component> out;
  if (bound < 0) return out;
  // degree(beta, s) = s + |beta + h_zeta|^2/2 - |h_zeta|^2/2
  Rat hz2 = rs.ip(h_zeta_, h_zeta_);
  std::vector<IntVec> charges = lattice_points_in_ball(rs, h_zeta_, 2 * bound + hz2);
  for (const IntVec& beta : charges) {
    Rat base = degree(Component{beta, 0});
    for (long s = 0; base + s <= bound; ++s) out.push_back(Component{beta, int(s)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Rat, FockElement>> Twisted::delta_apply(const RatVec& h, const FockElement& v) const {
  // T_0 = v, T_j = (1/j) sum_{m=1..j} (-1)^{m+1} h_m T_{j-m}
  int deg = 0;
  internal_check(v.is_homogeneous(&deg), "delta_apply expects a homogeneous state");
  std::vector<std::pair<Rat, FockElement>> out;
  std::vector<FockElement> T(deg + 1);
  T[0] = v;
  for (int j = 1; j <= deg; ++j) {
    T[j].module = v.module;
    for (int m = 1; m <= j; ++m) {
      Rat c = Rat((m % 2) ? 1 : -1) / Rat(j);
      T[j] += heisenberg_apply(eng_.rs(), h, m, T[j - m]).scaled(c);
    }
  }
  for (int j = 0; j <= deg; ++j)
    if (!T[j].is_zero()) out.push_back({Rat(-j), T[j]});
  return out;
}

std::vector<std::pair<Rat, LatticeElement>> Twisted::delta_apply(const RatVec& h, const LatticeElement& v) const {
  // group by charge; z^{h_0} contributes z^{(h|beta)} per charge sector
  std::map<IntVec, FockElement> by_charge;
  for (const auto& [key, c] : v.terms) {
    const auto& [mon, beta] = key;
    auto it = by_charge.find(beta);
    if (it == by_charge.end()) {
      FockElement f;
      f.module = eng_.charge_module(beta);
      f.terms[mon] = c;
      by_charge[beta] = f;
    } else {
      it->second.add(mon, c);
    }
  }
  std::map<Rat, LatticeElement> acc;
  for (const auto& [beta, f] : by_charge) {
    Rat charge_pow = eng_.rs().ip_mixed(h, beta);
    for (const auto& [pow, state] : delta_apply(h, f)) {
      LatticeElement piece = lattice_from_fock(state, beta);
      acc[charge_pow + pow] += piece;
    }
  }
  std::vector<std::pair<Rat, LatticeElement>> out;
  for (auto& [pow, elt] : acc)
    if (!elt.is_zero()) out.push_back({pow, elt});
  return out;
}

Matrix Twisted::pi1_mode_block(const FockElement& v, long r, const Component& src) const {
  int deg = 0;
  internal_check(v.is_homogeneous(&deg), "twisted mode of a non-homogeneous state");
  FockModule mod = eng_.charge_module(src.charge);
  int st = src.degree + deg - int(r) - 1;
  int dim_s = eng_.basis().dim(src.degree);
  if (st < 0) return Matrix(0, dim_s);
  Matrix out(eng_.basis().dim(st), dim_s);
  for (const auto& [pow, state] : delta_apply(h_zeta_, v)) {
    long j = -rat_to_long(pow);
    // z^{-j} Y(T_j, z): mode r picks (T_j)_{(r - j)}
    Matrix b = eng_.state_mode_block(state, r - j, mod, src.degree);
    if (b.rows() == eng_.basis().dim(st))
      out += b;
    else
      internal_check(b.rows() == 0 || b.is_zero(), "twisted block shape drift");
  }
  return out;
}

Component Twisted::exp_mode_target(const IntVec& beta, const Rat& r, const Component& src) const {
  const RootSystem& rs = eng_.rs();
  Rat p_rat = r + Rat(rs.height(beta), rs.coxeter);
  if (!rat_is_integer(p_rat))
    throw InvalidArgument("incompatible fractional mode index " + rat_str(r) +
                          " for charge of height " + std::to_string(rs.height(beta)));
  long p = rat_to_long(p_rat);
  IntVec tgt(rs.rank);
  for (int i = 0; i < rs.rank; ++i) tgt[i] = src.charge[i] + beta[i];
  return Component{tgt, Engine::exp_target_degree(rs, beta, p, src.charge, src.degree)};
}

Matrix Twisted::exp_mode_block(const IntVec& beta, const Rat& r, const Component& src) const {
  const RootSystem& rs = eng_.rs();
  Rat p_rat = r + Rat(rs.height(beta), rs.coxeter);
  if (!rat_is_integer(p_rat))
    throw InvalidArgument("incompatible fractional mode index " + rat_str(r) +
                          " for charge of height " + std::to_string(rs.height(beta)));
  return eng_.exp_block(beta, rat_to_long(p_rat), src.charge, src.degree);
}

std::vector<std::pair<Component, Matrix>> Twisted::affine_action(const LoopElt& x, const Component& src) const {
  const RootSystem& rs = eng_.rs();
  std::map<Component, Matrix> acc;
  int dim_s = eng_.basis().dim(src.degree);
  auto add = [&](const Component& tgt, const Matrix& m) {
    if (m.rows() == 0 || m.is_zero()) return;
    auto it = acc.find(tgt);
    if (it == acc.end())
      acc.emplace(tgt, m);
    else
      it->second += m;
  };

  for (const auto& [m, g] : x.comp) {
    // Cartan part: h t^m -> -h_m, bare
    if (!g.h.empty() && !vec_is_zero(g.h)) {
      int st = src.degree - int(m);
      if (st >= 0) {
        Matrix block = eng_.heis_block(g.h, m, eng_.charge_module(src.charge), src.degree).scaled(Rat(-1));
        Component tgt{src.charge, st};
        internal_check(degree(tgt) == degree(src) - Rat(m), "affine grading drift (cartan)");
        add(tgt, block);
      }
    }
    // root part: x_alpha t^m -> (1 x e^{-alpha})_{(m)}
    for (const auto& [root_id, c] : g.x) {
      IntVec alpha = rs.root(root_id);
      IntVec beta(rs.rank);
      for (int i = 0; i < rs.rank; ++i) beta[i] = -alpha[i];
      int st = Engine::exp_target_degree(rs, beta, m, src.charge, src.degree);
      if (st < 0) continue;
      IntVec tgt_charge(rs.rank);
      for (int i = 0; i < rs.rank; ++i) tgt_charge[i] = src.charge[i] + beta[i];
      Component tgt{tgt_charge, st};
      internal_check(degree(tgt) == degree(src) - (Rat(m) + Rat(rs.height(alpha), rs.coxeter)),
                     "affine grading drift (current)");
      add(tgt, eng_.exp_block(beta, m, src.charge, src.degree).scaled(c));
    }
  }
  if (x.central != 0) add(src, Matrix::identity(dim_s).scaled(x.central));

  std::vector<std::pair<Component, Matrix>> out(acc.begin(), acc.end());
  return out;
}

GradedVec Twisted::affine_apply(const LoopElt& x, const GradedVec& v) const {
  GradedVec out;
  for (const auto& [src, vec] : v) {
    if (vec_is_zero(vec)) continue;
    for (const auto& [tgt, block] : affine_action(x, src)) {
      RatVec y = block.apply(vec);
      auto it = out.find(tgt);
      if (it == out.end())
        out[tgt] = std::move(y);
      else
        it->second = vec_add(it->second, y);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = vec_is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace wlat
