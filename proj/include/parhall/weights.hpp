#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "parhall/scalar.hpp"

namespace parhall {

// The marked-point data: an ordered nonempty list of points, each of
// weight >= 1 and degree 1.
struct Weights {
  struct Point {
    std::string name;
    int weight;
  };
  std::vector<Point> points;

  Weights() = default;
  explicit Weights(std::vector<Point> ps) : points(std::move(ps)) {
    if (points.empty()) throw input_error("weights need at least one point");
    for (const auto& p : points)
      if (p.weight < 1) throw input_error("point weights must be >= 1");
  }
  static Weights single(int w) { return Weights({{"p", w}}); }

  size_t npoints() const { return points.size(); }
  int weight(size_t i) const { return points[i].weight; }
  int lcm() const {
    int m = 1;
    for (const auto& p : points) m = std::lcm(m, p.weight);
    return m;
  }
  bool operator==(const Weights& o) const {
    if (points.size() != o.points.size()) return false;
    for (size_t i = 0; i < points.size(); ++i)
      if (points[i].name != o.points[i].name ||
          points[i].weight != o.points[i].weight)
        return false;
    return true;
  }
};

// One residue x_p in Z/w_p per marked point, canonical representatives.
struct Residue {
  std::vector<int> x;

  static Residue zero(const Weights& w) {
    Residue r;
    r.x.assign(w.npoints(), 0);
    return r;
  }
  static Residue reduced(const Weights& w, std::vector<int> raw) {
    Residue r;
    r.x.resize(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
      int m = w.weight(i);
      r.x[i] = ((raw[i] % m) + m) % m;
    }
    return r;
  }
  bool is_zero() const {
    for (int v : x)
      if (v) return false;
    return true;
  }
  bool operator==(const Residue& o) const { return x == o.x; }
  bool operator<(const Residue& o) const { return x < o.x; }
};

// Element of the rank-one lattice on generators x_p with w_p x_p = c.
// Canonical form: an integer multiple of c plus reduced residues.
struct Lattice {
  long long d = 0;
  Residue res;

  static Lattice make(const Weights& w, long long d, std::vector<int> raw) {
    Lattice v;
    v.d = d;
    v.res.x.resize(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
      int m = w.weight(i);
      long long q = raw[i] >= 0 ? raw[i] / m : -((-(long long)raw[i] + m - 1) / m);
      v.res.x[i] = static_cast<int>(raw[i] - q * m);
      v.d += q;
    }
    return v;
  }
  static Lattice zero(const Weights& w) { return make(w, 0, std::vector<int>(w.npoints(), 0)); }
  static Lattice c_gen(const Weights& w, long long k = 1) {
    return make(w, k, std::vector<int>(w.npoints(), 0));
  }
  static Lattice x_gen(const Weights& w, size_t point, int mult = 1) {
    std::vector<int> raw(w.npoints(), 0);
    raw[point] = mult;
    return make(w, 0, std::move(raw));
  }

  bool operator==(const Lattice& o) const { return d == o.d && res == o.res; }
  bool operator<(const Lattice& o) const {
    if (d != o.d) return d < o.d;
    return res < o.res;
  }
};

Lattice lat_add(const Weights& w, const Lattice& a, const Lattice& b);
Lattice lat_neg(const Weights& w, const Lattice& a);
Residue pi(const Lattice& v);

// (Pic1): d0 c + sum_p sum_i i (d_{i,p} - d_{i-1,p}) x_p for a rank-one
// multi-degree; slot differences must lie in {0, 1}.
Lattice lattice_from_multidegree(const Weights& w, long long d0,
                                 const std::vector<std::vector<long long>>& slots);

// Element of the group algebra of the lattice, with deterministic term
// order.
struct GAElem {
  std::map<Lattice, Scalar> terms;

  static GAElem zero() { return {}; }
  static GAElem unit(const Weights& w) {
    GAElem e;
    e.terms.emplace(Lattice::zero(w), Scalar(1));
    return e;
  }
  static GAElem monomial(Lattice v, Scalar c = Scalar(1)) {
    GAElem e;
    if (!c.is_zero()) e.terms.emplace(std::move(v), std::move(c));
    return e;
  }
  void add_term(const Lattice& v, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(v);
    if (it == terms.end())
      terms.emplace(v, c);
    else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend GAElem operator+(const GAElem& a, const GAElem& b) {
    GAElem r = a;
    for (const auto& [v, c] : b.terms) r.add_term(v, c);
    return r;
  }
  bool operator==(const GAElem& o) const { return terms == o.terms; }
};

GAElem ga_mul(const Weights& w, const GAElem& a, const GAElem& b);

// Gamma factor of a residue vector, expanded in single-slot variables:
// the product over points of v + (1-v^2) t_p^{x_p}, or 1 when x_p = 0.
GAElem gamma_factor(const Weights& w, const Residue& x);

}  // namespace parhall
