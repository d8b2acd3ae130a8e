#include "lattice.hpp"

#include <sstream>

namespace wlat {

std::string Component::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < charge.size(); ++i) {
    if (i) os << ",";
    os << charge[i];
  }
  os << ";" << degree << ")";
  return os.str();
}

void LatticeElement::add(const FockMonomial& m, const IntVec& beta, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(m, beta);
  auto it = terms.find(key);
  if (it == terms.end())
    terms[key] = c;
  else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LatticeElement& LatticeElement::operator+=(const LatticeElement& o) {
  for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
  return *this;
}

LatticeElement LatticeElement::scaled(const Rat& c) const {
  LatticeElement r;
  if (c != 0)
    for (const auto& [k, v] : terms) r.terms[k] = c * v;
  return r;
}

LatticeElement lattice_from_fock(const FockElement& v, const IntVec& beta) {
  LatticeElement r;
  for (const auto& [m, c] : v.terms) r.terms[{m, beta}] = c;
  return r;
}

GradedVec graded_add(const GradedVec& a, const GradedVec& b) {
  GradedVec r = a;
  for (const auto& [c, v] : b) {
    auto it = r.find(c);
    if (it == r.end())
      r[c] = v;
    else
      it->second = vec_add(it->second, v);
  }
  return r;
}

bool graded_is_zero(const GradedVec& v) {
  for (const auto& [c, x] : v)
    if (!vec_is_zero(x)) return false;
  return true;
}

GradedVec mode_apply(const ModeOperator& op, const GradedVec& v) {
  GradedVec out;
  for (const auto& [src, x] : v) {
    if (vec_is_zero(x)) continue;
    auto it = op.blocks.find(src);
    if (it == op.blocks.end()) continue;
    for (const auto& [tgt, m] : it->second) {
      if (m.rows() == 0) continue;
      RatVec y = m.apply(x);
      auto jt = out.find(tgt);
      if (jt == out.end())
        out[tgt] = std::move(y);
      else
        jt->second = vec_add(jt->second, y);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = vec_is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

Engine::Engine(const RootSystem& rs) : rs_(rs), chev_(rs), basis_(rs.rank) {
  rho_over_h_ = vec_scale(Rat(1, rs.coxeter), rs.weyl_vector);
}

FockModule Engine::charge_module(const IntVec& gamma) const {
  RatVec mu(gamma.begin(), gamma.end());
  return FockModule{Rat(1), mu};
}

Matrix Engine::heis_block(const RatVec& h, long m, const FockModule& mod, int s) {
  int st = s - int(m);
  int dim_s = basis_.dim(s);
  if (st < 0) return Matrix(0, dim_s);
  Matrix out(basis_.dim(st), dim_s);
  const auto& mons = basis_.at(s);
  for (int col = 0; col < dim_s; ++col) {
    FockElement v;
    v.module = mod;
    v.terms[mons[col]] = 1;
    FockElement w = heisenberg_apply(rs_, h, m, v);
    for (const auto& [mon, c] : w.terms) out.at(basis_.index_of(mon), col) += c;
  }
  return out;
}

int Engine::exp_target_degree(const RootSystem& rs, const IntVec& beta, long n, const IntVec& gamma, int s) {
  return s - int(n) - 1 - int(rs.ip_int(beta, gamma));
}

Matrix Engine::exp_block(const IntVec& beta, long n, const IntVec& gamma, int s) {
  auto key = std::make_tuple(beta, n, gamma, s);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = exp_cache_.find(key);
    if (it != exp_cache_.end()) return it->second;
  }
  int st = exp_target_degree(rs_, beta, n, gamma, s);
  int dim_s = basis_.dim(s);
  Matrix out(st < 0 ? 0 : basis_.dim(st), dim_s);
  if (st >= 0) {
    RatVec beta_r(beta.begin(), beta.end());
    Rat eps = Rat(chev_.eps(beta, gamma));
    long pairing = rs_.ip_int(beta, gamma);
    FockModule mod = charge_module(gamma);
    const auto& mons = basis_.at(s);
    for (int col = 0; col < dim_s; ++col) {
      // annihilation expansion P_j = coefficient of z^{-j} in E^+(z) F
      std::vector<FockElement> P(s + 1);
      P[0].module = mod;
      P[0].terms[mons[col]] = 1;
      for (int j = 1; j <= s; ++j) {
        P[j].module = mod;
        for (int m = 1; m <= j; ++m)
          P[j] += heisenberg_apply(rs_, beta_r, m, P[j - m]).scaled(Rat(-1, j));
      }
      for (int j = 0; j <= s; ++j) {
        long a = long(j) - n - 1 - pairing;
        if (a < 0 || P[j].is_zero()) continue;
        // creation expansion R_a = coefficient of z^a in E^-(z) P_j
        std::vector<FockElement> R(a + 1);
        R[0] = P[j];
        for (long b = 1; b <= a; ++b) {
          R[b].module = mod;
          for (long m = 1; m <= b; ++m)
            R[b] += heisenberg_apply(rs_, beta_r, -m, R[b - m]).scaled(Rat(1) / Rat(b));
        }
        for (const auto& [mon, c] : R[a].terms) out.at(basis_.index_of(mon), col) += eps * c;
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  return exp_cache_.emplace(key, std::move(out)).first->second;
}

Matrix Engine::state_mode_block(const FockMonomial& u, long n, const FockModule& mod, int s) {
  auto key = std::make_tuple(u, n, mod, s);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = state_cache_.find(key);
    if (it != state_cache_.end()) return it->second;
  }
  Matrix out = state_mode_uncached(u, n, mod, s);
  std::lock_guard<std::mutex> lk(mu_);
  return state_cache_.emplace(key, std::move(out)).first->second;
}

Matrix Engine::state_mode_uncached(const FockMonomial& u, long n, const FockModule& mod, int s) {
  int dim_s = basis_.dim(s);
  int st = s + u.degree() - int(n) - 1;
  if (st < 0) return Matrix(0, dim_s);
  if (u.factors.empty()) {
    // 1_{(n)} = delta_{n,-1} id
    if (n == -1) return Matrix::identity(dim_s);
    return Matrix::zero(basis_.dim(st), dim_s);
  }

  // u = a_{(-m)} u' with a the current of boson i1; iterate formula
  //   (a_{(-m)}u')_{(n)} = sum_j (-1)^j C(-m,j) a_{(-m-j)} u'_{(n+j)}
  //                      - sum_j (-1)^{j+m} C(-m,j) u'_{(n-m-j)} a_{(j)}
  auto [m, i1] = u.factors.front();
  FockMonomial rest;
  rest.factors.assign(u.factors.begin() + 1, u.factors.end());
  const int deg_rest = rest.degree();
  RatVec a(rs_.rank, Rat(0));
  a[i1] = 1;

  Matrix out(basis_.dim(st), dim_s);
  for (long j = 0;; ++j) {
    int s1 = s + deg_rest - int(n + j) - 1;  // target of u'_{(n+j)}
    if (s1 < 0) break;
    Rat c = binom_int(-m, j);
    if ((j % 2) != 0) c = -c;
    if (c != 0) {
      Matrix inner = state_mode_block(rest, n + j, mod, s);
      if (inner.rows() > 0 && !inner.is_zero()) {
        Matrix outer = heis_block(a, -(m + j), mod, s1);
        out.axpy(c, outer * inner);
      }
    }
  }
  for (long j = 0; j <= s; ++j) {
    Rat c = binom_int(-m, j);
    if (((j + m) % 2) != 0) c = -c;
    c = -c;
    if (c == 0) continue;
    Matrix inner = heis_block(a, j, mod, s);  // a_{(j)} first
    if (inner.rows() == 0 || inner.is_zero()) continue;
    Matrix outer = state_mode_block(rest, n - m - j, mod, s - int(j));
    if (outer.rows() == 0) continue;
    out.axpy(c, outer * inner);
  }
  return out;
}

Matrix Engine::state_mode_block(const FockElement& u, long n, const FockModule& mod, int s) {
  int deg = 0;
  internal_check(u.is_homogeneous(&deg), "mode of a non-homogeneous state");
  int st = s + deg - int(n) - 1;
  int dim_s = basis_.dim(s);
  if (st < 0 || u.is_zero()) return Matrix(st < 0 ? 0 : basis_.dim(st), dim_s);
  Matrix out(basis_.dim(st), dim_s);
  for (const auto& [mon, c] : u.terms) out.axpy(c, state_mode_block(mon, n, mod, s));
  return out;
}

Matrix Engine::virasoro_block(const FockElement& omega, long n, const FockModule& mod, int s) {
  int deg = 0;
  internal_check(omega.is_homogeneous(&deg) && deg == 2, "conformal vector must have weight 2");
  return state_mode_block(omega, n + 1, mod, s);
}

Matrix Engine::virasoro_block_direct(long n, const FockModule& mod, int s) {
  int st = s - int(n);
  int dim_s = basis_.dim(s);
  if (st < 0) return Matrix(0, dim_s);
  Matrix out(basis_.dim(st), dim_s);
  // L_n = 1/2 sum_{i,j} Ginv_ij sum_m :a_i(m) a_j(n-m):
  for (int i = 0; i < rs_.rank; ++i) {
    RatVec ei(rs_.rank, Rat(0));
    ei[i] = 1;
    RatVec dual = rs_.fundamental_to_root(ei);  // row of G^{-1}
    for (int j = 0; j < rs_.rank; ++j) {
      if (dual[j] == 0) continue;
      RatVec ej(rs_.rank, Rat(0));
      ej[j] = 1;
      long lo = -(long(s) + std::abs(n) + 2), hi = long(s) + std::abs(n) + 2;
      for (long m = lo; m <= hi; ++m) {
        // normal ordering: the larger mode index acts first
        long am, bm;
        const RatVec *av, *bv;
        if (m <= n - m) {
          am = n - m; av = &ej; bm = m; bv = &ei;
        } else {
          am = m; av = &ei; bm = n - m; bv = &ej;
        }
        int mid = s - int(am);
        if (mid < 0) continue;
        Matrix pre = heis_block(*av, am, mod, s);
        if (pre.rows() == 0 || pre.is_zero()) continue;
        Matrix post = heis_block(*bv, bm, mod, mid);
        if (post.rows() == 0) continue;
        out.axpy(dual[j] / 2, post * pre);
      }
    }
  }
  return out;
}

Matrix Engine::screening_block(int i, int s) {
  IntVec beta(rs_.rank, 0);
  beta[i] = -1;
  IntVec zero(rs_.rank, 0);
  return exp_block(beta, 0, zero, s);
}

LatticeElement Engine::screening_apply(int i, const FockElement& v) {
  int deg = 0;
  internal_check(v.is_homogeneous(&deg), "screening of a non-homogeneous state");
  IntVec beta(rs_.rank, 0);
  beta[i] = -1;
  LatticeElement out;
  if (v.is_zero()) return out;
  Matrix block = screening_block(i, deg);
  if (block.rows() == 0) return out;
  RatVec x = fock_coords(basis_, v, deg);
  RatVec y = block.apply(x);
  const auto& mons = basis_.at(deg - 1);
  for (size_t k = 0; k < mons.size(); ++k)
    if (y[k] != 0) out.add(mons[k], beta, y[k]);
  return out;
}

ModeOperator Engine::exp_mode_operator(const IntVec& beta, long n, const std::vector<Component>& sources) {
  ModeOperator op;
  op.index = Rat(n);
  for (const Component& src : sources) {
    int st = exp_target_degree(rs_, beta, n, src.charge, src.degree);
    if (st < 0) continue;
    IntVec tgt_charge(rs_.rank);
    for (int k = 0; k < rs_.rank; ++k) tgt_charge[k] = src.charge[k] + beta[k];
    Matrix m = exp_block(beta, n, src.charge, src.degree);
    op.blocks[src].push_back({Component{tgt_charge, st}, std::move(m)});
  }
  return op;
}

}  // namespace wlat
