#pragma once

#include <map>
#include <vector>

#include "parhall/scalar.hpp"

namespace parhall {

// Sparse multivariate Laurent polynomial over K with a fixed variable
// count.  Exponent vectors are map keys, so the term order (lex) is
// deterministic.
template <class K>
struct MPoly {
  using Expo = std::vector<int>;
  int nvars = 0;
  std::map<Expo, K> t;

  MPoly() = default;
  explicit MPoly(int nv) : nvars(nv) {}
  static MPoly constant(int nv, K k) {
    MPoly p(nv);
    if (!k.is_zero()) p.t.emplace(Expo(nv, 0), std::move(k));
    return p;
  }
  static MPoly monomial(int nv, Expo e, K k) {
    MPoly p(nv);
    if (!k.is_zero()) p.t.emplace(std::move(e), std::move(k));
    return p;
  }
  static MPoly var(int nv, int i, int power = 1) {
    Expo e(nv, 0);
    e[i] = power;
    return monomial(nv, e, K(1));
  }

  bool is_zero() const { return t.empty(); }
  void add_term(const Expo& e, const K& k) {
    if (k.is_zero()) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t.emplace(e, k);
    } else {
      it->second += k;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, k] : b.t) r.add_term(e, k);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, k] : b.t) r.add_term(e, -k);
    return r;
  }
  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, k] : r.t) k = -k;
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.nvars);
    Expo e(a.nvars);
    for (const auto& [ea, ka] : a.t)
      for (const auto& [eb, kb] : b.t) {
        for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ka * kb);
      }
    return r;
  }
  MPoly operator*(const K& k) const {
    MPoly r(nvars);
    if (k.is_zero()) return r;
    for (const auto& [e, c] : t) r.t.emplace(e, c * k);
    return r;
  }
  bool operator==(const MPoly& o) const { return nvars == o.nvars && t == o.t; }

  // relabel variables: result exponent of var perm[i] = exponent of var i
  MPoly permuted(const std::vector<int>& perm) const {
    MPoly r(nvars);
    Expo e(nvars);
    for (const auto& [e0, k] : t) {
      for (int i = 0; i < nvars; ++i) e[perm[i]] = e0[i];
      r.add_term(e, k);
    }
    return r;
  }

  // widen to nv variables, placing old var i at position offset+i
  MPoly widened(int nv, int offset) const {
    MPoly r(nv);
    for (const auto& [e0, k] : t) {
      Expo e(nv, 0);
      for (int i = 0; i < nvars; ++i) e[offset + i] = e0[i];
      r.t.emplace(std::move(e), k);
    }
    return r;
  }

  // multiply by the monomial with exponent vector d
  MPoly shifted(const Expo& d) const {
    MPoly r(nvars);
    for (const auto& [e0, k] : t) {
      Expo e = e0;
      for (int i = 0; i < nvars; ++i) e[i] += d[i];
      r.t.emplace(std::move(e), k);
    }
    return r;
  }

  int min_exp(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, k] : t) {
      if (first || e[var] < m) m = e[var];
      first = false;
    }
    return m;
  }

  K eval(const std::vector<K>& vals) const {
    K acc(0);
    for (const auto& [e, k] : t) {
      K term = k;
      for (int i = 0; i < nvars; ++i) {
        if (e[i] == 0) continue;
        K p = vals[i].pow(e[i]);
        term *= p;
      }
      acc += term;
    }
    return acc;
  }

  // substitute polynomials for all variables
  MPoly subst(const std::vector<MPoly>& vals) const {
    MPoly acc(vals.empty() ? nvars : vals[0].nvars);
    for (const auto& [e, k] : t) {
      MPoly term = MPoly::constant(acc.nvars, k);
      for (int i = 0; i < nvars; ++i)
        for (int j = 0; j < e[i]; ++j) term = term * vals[i];
      acc = acc + term;
    }
    return acc;
  }
};

// Exact division by (t_i - t_j); throws input_error when not divisible.
template <class K>
MPoly<K> mpoly_div_linear(const MPoly<K>& p, int vi, int vj) {
  if (p.is_zero()) return p;
  // shift so the t_i exponents are nonnegative, view as polynomial in t_i
  int m = p.min_exp(vi);
  typename MPoly<K>::Expo sh(p.nvars, 0);
  sh[vi] = -m;
  MPoly<K> q = p.shifted(sh);
  // coefficients by t_i-degree, as polynomials in the other variables
  std::map<int, MPoly<K>> by_deg;
  for (const auto& [e, k] : q.t) {
    auto e2 = e;
    int d = e2[vi];
    e2[vi] = 0;
    auto it = by_deg.find(d);
    if (it == by_deg.end()) it = by_deg.emplace(d, MPoly<K>(p.nvars)).first;
    it->second.add_term(e2, k);
  }
  int topd = by_deg.rbegin()->first;
  // synthetic division by (t_i - t_j): Q_d = c_{d+1} + t_j Q_{d+1}
  std::vector<MPoly<K>> quot(topd, MPoly<K>(p.nvars));
  MPoly<K> tj = MPoly<K>::var(p.nvars, vj);
  MPoly<K> carry(p.nvars);
  for (int d = topd; d >= 1; --d) {
    auto it = by_deg.find(d);
    MPoly<K> cd = (it == by_deg.end()) ? MPoly<K>(p.nvars) : it->second;
    carry = cd + tj * carry;
    quot[d - 1] = carry;
  }
  {
    auto it = by_deg.find(0);
    MPoly<K> c0 = (it == by_deg.end()) ? MPoly<K>(p.nvars) : it->second;
    MPoly<K> rem = c0 + tj * carry;
    if (!rem.is_zero()) throw input_error("not divisible by (t_i - t_j)");
  }
  MPoly<K> res(p.nvars);
  for (int d = 0; d < topd; ++d) {
    typename MPoly<K>::Expo e(p.nvars, 0);
    e[vi] = d + m;  // undo the shift
    res = res + quot[d].shifted(e);
  }
  return res;
}

}  // namespace parhall
