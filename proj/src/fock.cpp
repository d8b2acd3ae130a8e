#include "fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wlat {

int FockMonomial::degree() const {
  int d = 0;
  for (auto [n, i] : factors) d += n;
  return d;
}

void FockMonomial::push(int n, int i) {
  auto pos = std::lower_bound(factors.begin(), factors.end(), std::make_pair(n, i),
                              [](const auto& a, const auto& b) { return a > b; });
  factors.insert(pos, {n, i});
}

std::string FockMonomial::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < factors.size(); ++k) {
    if (k) os << " ";
    os << "a" << (factors[k].second + 1) << "(-" << factors[k].first << ")";
  }
  return os.str();
}

void FockBasis::ensure(int degree) const {
  while (int(by_degree_.size()) <= degree) {
    int d = int(by_degree_.size());
    std::vector<FockMonomial> out;
    // parts (n, i) chosen weakly decreasing in (n, i)
    FockMonomial cur;
    std::function<void(int, int, int)> go = [&](int rem, int max_n, int max_i) {
      if (rem == 0) {
        out.push_back(cur);
        return;
      }
      for (int n = std::min(rem, max_n); n >= 1; --n)
        for (int i = (n == max_n ? max_i : rank_ - 1); i >= 0; --i) {
          cur.factors.push_back({n, i});
          go(rem - n, n, i);
          cur.factors.pop_back();
        }
    };
    go(d, d, rank_ - 1);
    std::map<FockMonomial, int> idx;
    for (size_t k = 0; k < out.size(); ++k) idx[out[k]] = int(k);
    by_degree_.push_back(std::move(out));
    index_.push_back(std::move(idx));
  }
}

const std::vector<FockMonomial>& FockBasis::at(int degree) const {
  internal_check(degree >= 0, "negative Fock degree");
  ensure(degree);
  return by_degree_[degree];
}

int FockBasis::index_of(const FockMonomial& m) const {
  int d = m.degree();
  ensure(d);
  auto it = index_[d].find(m);
  internal_check(it != index_[d].end(), "monomial not in basis");
  return it->second;
}

bool FockElement::is_homogeneous(int* degree_out) const {
  if (terms.empty()) {
    if (degree_out) *degree_out = 0;
    return true;
  }
  int d = terms.begin()->first.degree();
  for (const auto& [m, c] : terms)
    if (m.degree() != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

void FockElement::add(const FockMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end())
    terms[m] = c;
  else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

FockElement& FockElement::operator+=(const FockElement& o) {
  internal_check(module == o.module, "module mismatch in Fock sum");
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

FockElement FockElement::scaled(const Rat& c) const {
  FockElement r;
  r.module = module;
  if (c != 0)
    for (const auto& [m, v] : terms) r.terms[m] = c * v;
  return r;
}

std::string FockElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    os << rat_str(c) << "*" << m.str();
    first = false;
  }
  return os.str();
}

FockElement fock_vacuum(const FockModule& mod) {
  FockElement v;
  v.module = mod;
  v.terms[FockMonomial{}] = 1;
  return v;
}

FockElement heisenberg_apply(const RootSystem& rs, const RatVec& h, long s, const FockElement& v) {
  FockElement out;
  out.module = v.module;
  if (s == 0) {
    Rat c = rs.ip(h, v.module.mu);
    return v.scaled(c);
  }
  if (s < 0) {
    // creation: h(-m) = sum_i h_i alpha_i(-m) in the boson basis
    for (const auto& [m, c] : v.terms)
      for (int i = 0; i < rs.rank; ++i) {
        if (h[i] == 0) continue;
        FockMonomial m2 = m;
        m2.push(int(-s), i);
        out.add(m2, c * h[i]);
      }
    return out;
  }
  // pairing of h against boson i, for contractions
  RatVec pair(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    RatVec e(rs.rank, Rat(0));
    e[i] = 1;
    pair[i] = rs.ip(h, e);
  }
  // annihilation: contract with each factor alpha_i(-n), n == s
  for (const auto& [m, c] : v.terms) {
    for (size_t k = 0; k < m.factors.size(); ++k) {
      auto [n, i] = m.factors[k];
      if (n != s || pair[i] == 0) continue;
      FockMonomial m2 = m;
      m2.factors.erase(m2.factors.begin() + k);
      out.add(m2, c * Rat(s) * v.module.level * pair[i]);
    }
  }
  return out;
}

FockElement sugawara_vector(const RootSystem& rs) {
  // dual basis b^i = sum_j (G^{-1})_{ij} alpha_j; omega = 1/2 sum_i b_i(-1) b^i(-1)
  FockElement omega;
  omega.module = FockModule{Rat(1), RatVec(rs.rank, Rat(0))};
  for (int i = 0; i < rs.rank; ++i) {
    RatVec e(rs.rank, Rat(0));
    e[i] = 1;
    RatVec dual = rs.fundamental_to_root(e);  // G^{-1} e_i
    for (int j = 0; j < rs.rank; ++j) {
      if (dual[j] == 0) continue;
      FockMonomial m;
      m.push(1, i);
      m.push(1, j);
      omega.add(m, dual[j] / 2);
    }
  }
  return omega;
}

RatVec fock_coords(const FockBasis& basis, const FockElement& v, int degree) {
  RatVec out(basis.dim(degree), Rat(0));
  for (const auto& [m, c] : v.terms) {
    internal_check(m.degree() == degree, "element not homogeneous of the requested degree");
    out[basis.index_of(m)] = c;
  }
  return out;
}

FockElement fock_from_coords(const FockBasis& basis, const FockModule& mod, const RatVec& coords, int degree) {
  const auto& mons = basis.at(degree);
  internal_check(coords.size() == mons.size(), "coordinate size mismatch");
  FockElement v;
  v.module = mod;
  for (size_t k = 0; k < mons.size(); ++k) v.add(mons[k], coords[k]);
  return v;
}

}  // namespace wlat
