#include "cartan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <set>

#include "matrix.hpp"

namespace wlat {

Family family_parse(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  throw InvalidArgument("unsupported family '" + s + "' (expected A, D or E)");
}

std::string family_str(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

namespace {

std::vector<IntVec> cartan_matrix(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;  // 0-based Bourbaki numbering
  switch (family) {
    case Family::A:
      if (rank < 1) throw InvalidArgument("A_l requires l >= 1");
      for (int i = 0; i + 1 < rank; ++i) edges.push_back({i, i + 1});
      break;
    case Family::D:
      if (rank < 4) throw InvalidArgument("D_l requires l >= 4");
      for (int i = 0; i + 1 < rank - 1; ++i) edges.push_back({i, i + 1});
      edges.push_back({rank - 3, rank - 1});
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw InvalidArgument("E_l requires l in {6,7,8}");
      // chain 1-3-4-5-6(-7-8), node 2 attached to node 4
      edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      for (int i = 6; i < rank; ++i) edges.push_back({i - 1, i});
      break;
  }
  std::vector<IntVec> c(rank, IntVec(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  for (auto [i, j] : edges) c[i][j] = c[j][i] = -1;
  return c;
}

}  // namespace

IntVec RootSystem::root(int id) const {
  internal_check(id >= 0 && id < n_roots(), "root id out of range");
  if (id < n_positive()) return positive_roots[id];
  IntVec r = positive_roots[id - n_positive()];
  for (auto& c : r) c = -c;
  return r;
}

int RootSystem::root_id(const IntVec& r) const {
  auto find_pos = [&](const IntVec& v) -> int {
    for (int i = 0; i < n_positive(); ++i)
      if (positive_roots[i] == v) return i;
    return -1;
  };
  long ht = height(r);
  if (ht > 0) return find_pos(r);
  IntVec m = r;
  for (auto& c : m) c = -c;
  int i = find_pos(m);
  return i < 0 ? -1 : i + n_positive();
}

long RootSystem::height(const IntVec& v) const {
  long h = 0;
  for (long c : v) h += c;
  return h;
}

long RootSystem::ip_int(const IntVec& a, const IntVec& b) const {
  long s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (b[j] != 0) s += a[i] * cartan[i][j] * b[j];
  }
  return s;
}

Rat RootSystem::ip(const RatVec& a, const RatVec& b) const {
  Rat s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (b[j] != 0) s += a[i] * Rat(cartan[i][j]) * b[j];
  }
  return s;
}

Rat RootSystem::ip_mixed(const RatVec& a, const IntVec& b) const {
  RatVec br(b.begin(), b.end());
  return ip(a, br);
}

RatVec RootSystem::fundamental_to_root(const RatVec& m) const {
  internal_check(int(m.size()) == rank, "weight size mismatch");
  // solve Gram c = m by elimination
  Matrix g(rank, rank + 1);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) g.at(i, j) = Rat(cartan[i][j]);
    g.at(i, rank) = m[i];
  }
  Matrix k = g.kernel_basis();  // one column: (c, -1) up to scale
  internal_check(k.cols() == 1 && k.at(rank, 0) != 0, "Gram matrix not invertible");
  RatVec c(rank);
  Rat scale = -1 / k.at(rank, 0);
  for (int i = 0; i < rank; ++i) c[i] = scale * k.at(i, 0);
  return c;
}

RatVec RootSystem::root_to_fundamental(const RatVec& c) const {
  internal_check(int(c.size()) == rank, "weight size mismatch");
  RatVec m(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m[i] += Rat(cartan[i][j]) * c[j];
  return m;
}

RootSystem build_root_system(Family family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = cartan_matrix(family, rank);

  // Roots as the reflection closure of the simple roots.
  std::set<IntVec> roots;
  std::vector<IntVec> frontier;
  for (int i = 0; i < rank; ++i) {
    IntVec a(rank, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& r : frontier) {
      for (int i = 0; i < rank; ++i) {
        long pairing = 0;
        for (int j = 0; j < rank; ++j) pairing += rs.cartan[i][j] * r[j];
        IntVec s = r;
        s[i] -= pairing;  // simple reflection, coroot = root here
        if (roots.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  for (const IntVec& r : roots)
    if (rs.height(r) > 0) rs.positive_roots.push_back(r);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [&](const IntVec& a, const IntVec& b) {
              long ha = rs.height(a), hb = rs.height(b);
              return ha != hb ? ha < hb : a < b;
            });

  // Exponents: the number of positive roots of height m equals #{k : e_k >= m},
  // so the height distribution is the conjugate partition of the exponents.
  long max_ht = rs.height(rs.positive_roots.back());
  std::vector<int> count(max_ht + 2, 0);
  for (const IntVec& r : rs.positive_roots) count[rs.height(r)]++;
  rs.coxeter = int(max_ht) + 1;
  for (long m = 1; m <= max_ht; ++m)
    for (int rep = 0; rep < count[m] - count[m + 1]; ++rep) rs.exponents.push_back(int(m));
  std::sort(rs.exponents.begin(), rs.exponents.end());
  internal_check(int(rs.exponents.size()) == rank, "exponent count != rank");
  long esum = 0;
  for (int e : rs.exponents) esum += e;
  internal_check(esum == rs.n_positive(), "sum of exponents != number of positive roots");
  for (int e : rs.exponents) rs.degrees.push_back(e + 1);

  // Weyl vector from (rho|alpha_i) = 1 for all i.
  rs.weyl_vector = rs.fundamental_to_root(RatVec(rank, Rat(1)));
  return rs;
}

RatVec WeightVector::in_root_basis(const RootSystem& rs) const {
  if (basis == Basis::Root) return coords;
  return rs.fundamental_to_root(coords);
}

Rat inner_product(const RootSystem& rs, const WeightVector& a, const WeightVector& b) {
  return rs.ip(a.in_root_basis(rs), b.in_root_basis(rs));
}

Cocycle::Cocycle(const RootSystem& rs) {
  parity_.assign(rs.rank, std::vector<int>(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < i; ++j)
      parity_[i][j] = int(((rs.cartan[i][j] % 2) + 2) % 2);
}

int Cocycle::sign(const IntVec& a, const IntVec& b) const {
  long e = 0;
  int n = int(parity_.size());
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < i; ++j)
      if (b[j] != 0 && parity_[i][j]) e += a[i] * b[j];
  }
  return (e % 2) ? -1 : 1;
}

bool GElt::is_zero() const {
  if (!vec_is_zero(h) && !h.empty()) return false;
  for (const auto& [id, c] : x)
    if (c != 0) return false;
  return vec_is_zero(h);
}

GElt g_cartan(const RatVec& h) {
  GElt g;
  g.h = h;
  return g;
}

GElt g_root(int root_id, const Rat& c) {
  GElt g;
  if (c != 0) g.x[root_id] = c;
  return g;
}

GElt g_add(const GElt& a, const GElt& b) {
  GElt r = a;
  if (r.h.empty())
    r.h = b.h;
  else if (!b.h.empty())
    r.h = vec_add(r.h, b.h);
  for (const auto& [id, c] : b.x) {
    auto it = r.x.find(id);
    if (it == r.x.end())
      r.x[id] = c;
    else {
      it->second += c;
      if (it->second == 0) r.x.erase(it);
    }
  }
  return r;
}

GElt g_scale(const Rat& c, const GElt& a) {
  GElt r;
  if (c == 0) return r;
  if (!a.h.empty()) r.h = vec_scale(c, a.h);
  for (const auto& [id, v] : a.x) r.x[id] = c * v;
  return r;
}

GElt ChevalleyBasis::bracket(const GElt& a, const GElt& b) const {
  GElt out;
  const int rank = rs_.rank;
  auto add = [&](const GElt& g) { out = g_add(out, g); };

  // [h, x_beta] = (h|beta) x_beta
  if (!a.h.empty())
    for (const auto& [id, c] : b.x)
      add(g_root(id, c * rs_.ip_mixed(a.h, rs_.root(id))));
  if (!b.h.empty())
    for (const auto& [id, c] : a.x)
      add(g_root(id, -c * rs_.ip_mixed(b.h, rs_.root(id))));

  // [x_alpha, x_beta]
  for (const auto& [ida, ca] : a.x)
    for (const auto& [idb, cb] : b.x) {
      IntVec ra = rs_.root(ida), rb = rs_.root(idb);
      long pairing = rs_.ip_int(ra, rb);
      Rat c = ca * cb * Rat(eps_.sign(ra, rb));
      if (pairing == -2) {
        // beta = -alpha: bracket is the coroot, identified with alpha
        RatVec h(rank);
        for (int i = 0; i < rank; ++i) h[i] = c * Rat(ra[i]);
        add(g_cartan(h));
      } else if (pairing == -1) {
        IntVec sum(rank);
        for (int i = 0; i < rank; ++i) sum[i] = ra[i] + rb[i];
        int id = rs_.root_id(sum);
        internal_check(id >= 0, "alpha+beta expected to be a root");
        add(g_root(id, c));
      }
    }
  if (out.h.empty()) out.h = RatVec(rank, Rat(0));
  return out;
}

Rat ChevalleyBasis::form(const GElt& a, const GElt& b) const {
  Rat s = 0;
  if (!a.h.empty() && !b.h.empty()) s += rs_.ip(a.h, b.h);
  for (const auto& [ida, ca] : a.x) {
    int neg = rs_.negate_root_id(ida);
    auto it = b.x.find(neg);
    if (it != b.x.end()) {
      IntVec ra = rs_.root(ida), rneg = rs_.root(neg);
      s += ca * it->second * Rat(eps_.sign(ra, rneg));
    }
  }
  return s;
}

std::optional<std::array<int, 3>> ChevalleyBasis::jacobi_failure() const {
  // basis: x_alpha for every root, then the simple-coroot Cartan elements
  const int nr = rs_.n_roots();
  const int dim = nr + rs_.rank;
  auto basis_elt = [&](int k) -> GElt {
    if (k < nr) return g_root(k);
    RatVec h(rs_.rank, Rat(0));
    h[k - nr] = 1;
    return g_cartan(h);
  };
  for (int i = 0; i < dim; ++i) {
    GElt gi = basis_elt(i);
    for (int j = i; j < dim; ++j) {
      GElt gj = basis_elt(j);
      GElt bij = bracket(gi, gj);
      for (int k = j; k < dim; ++k) {
        GElt gk = basis_elt(k);
        GElt s = g_add(bracket(bij, gk),
                       g_add(bracket(bracket(gj, gk), gi), bracket(bracket(gk, gi), gj)));
        if (!s.is_zero()) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

bool LoopElt::is_zero() const {
  if (central != 0) return false;
  for (const auto& [m, g] : comp)
    if (!g.is_zero()) return false;
  return true;
}

LoopElt loop_root(int root_id, long m, const Rat& c) {
  LoopElt e;
  e.comp[m] = g_root(root_id, c);
  return e;
}

LoopElt loop_cartan(const RatVec& h, long m) {
  LoopElt e;
  e.comp[m] = g_cartan(h);
  return e;
}

LoopElt loop_add(const LoopElt& a, const LoopElt& b) {
  LoopElt r = a;
  r.central += b.central;
  for (const auto& [m, g] : b.comp) {
    auto it = r.comp.find(m);
    if (it == r.comp.end())
      r.comp[m] = g;
    else
      it->second = g_add(it->second, g);
  }
  for (auto it = r.comp.begin(); it != r.comp.end();)
    it = it->second.is_zero() ? r.comp.erase(it) : std::next(it);
  return r;
}

LoopElt loop_scale(const Rat& c, const LoopElt& a) {
  LoopElt r;
  r.central = c * a.central;
  if (c == 0) return r;
  for (const auto& [m, g] : a.comp) r.comp[m] = g_scale(c, g);
  return r;
}

LoopElt loop_bracket(const ChevalleyBasis& chev, const LoopElt& a, const LoopElt& b) {
  LoopElt r;
  for (const auto& [m, ga] : a.comp)
    for (const auto& [n, gb] : b.comp) {
      GElt br = chev.bracket(ga, gb);
      if (!br.is_zero()) {
        auto it = r.comp.find(m + n);
        if (it == r.comp.end())
          r.comp[m + n] = br;
        else
          it->second = g_add(it->second, br);
      }
      if (m + n == 0 && m != 0) r.central += Rat(m) * chev.form(ga, gb);
    }
  for (auto it = r.comp.begin(); it != r.comp.end();)
    it = it->second.is_zero() ? r.comp.erase(it) : std::next(it);
  return r;
}

std::vector<IntVec> lattice_points_in_ball(const RootSystem& rs, const RatVec& shift, const Rat& bound) {
  // Exact LDL^T of the Gram matrix, then Fincke-Pohst back-substitution.
  const int n = rs.rank;
  std::vector<RatVec> L(n, RatVec(n, Rat(0)));
  RatVec D(n);
  {
    std::vector<RatVec> g(n, RatVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[i][j] = Rat(rs.cartan[i][j]);
    for (int j = 0; j < n; ++j) {
      Rat d = g[j][j];
      for (int k = 0; k < j; ++k) d -= L[j][k] * L[j][k] * D[k];
      internal_check(d > 0, "Gram matrix not positive definite");
      D[j] = d;
      L[j][j] = 1;
      for (int i = j + 1; i < n; ++i) {
        Rat v = g[i][j];
        for (int k = 0; k < j; ++k) v -= L[i][k] * L[j][k] * D[k];
        L[i][j] = v / d;
      }
    }
  }
  // (c+s)^T G (c+s) = sum_j D_j (c_j + s_j + sum_{i>j} L_ij (c_i + s_i))^2
  std::vector<IntVec> out;
  IntVec c(n, 0);
  RatVec partial(n, Rat(0));  // running inner sums per level
  std::function<void(int, Rat)> descend = [&](int j, Rat remaining) {
    if (j < 0) {
      out.push_back(c);
      return;
    }
    // center_j = s_j + sum_{i>j} L_ij (c_i + s_i)
    Rat center = shift[j];
    for (int i = j + 1; i < n; ++i) center += L[i][j] * (Rat(c[i]) + shift[i]);
    // D_j (c_j + center)^2 <= remaining
    Rat r2 = remaining / D[j];
    // integer window around -center of half-width sqrt(r2)
    double w = std::sqrt(std::max(0.0, r2.get_d())) + 1.0;
    double cd = center.get_d();
    long lo = long(std::floor(-cd - w)), hi = long(std::ceil(-cd + w));
    for (long v = lo; v <= hi; ++v) {
      Rat term = (Rat(v) + center);
      term = D[j] * term * term;
      if (term <= remaining) {
        c[j] = v;
        descend(j - 1, remaining - term);
      }
    }
    c[j] = 0;
  };
  descend(n - 1, bound);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wlat
