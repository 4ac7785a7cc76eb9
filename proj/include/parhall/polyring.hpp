#pragma once

#include <algorithm>
#include <vector>

#include "parhall/scalar.hpp"

namespace parhall {

// Dense univariate polynomial over a field K (K = Scalar or GenericScalar).
template <class K>
struct Poly1 {
  std::vector<K> c;  // ascending

  Poly1() = default;
  explicit Poly1(K k) {
    if (!k.is_zero()) c.push_back(std::move(k));
  }
  static Poly1 monomial(K k, int deg) {
    Poly1 p;
    if (k.is_zero()) return p;
    p.c.assign(deg + 1, K(0));
    p.c[deg] = std::move(k);
    return p;
  }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  K at(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : K(0);
  }

  friend Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend Poly1 operator-(const Poly1& a, const Poly1& b) {
    Poly1 r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  Poly1 operator*(const K& k) const {
    Poly1 r = *this;
    for (auto& x : r.c) x *= k;
    r.trim();
    return r;
  }
  bool operator==(const Poly1& o) const { return c == o.c; }

  Poly1 reversed() const {  // t^deg * p(1/t)
    Poly1 r = *this;
    std::reverse(r.c.begin(), r.c.end());
    r.trim();
    return r;
  }
  // substitute t -> k t (scale coefficient i by k^i)
  Poly1 scale_arg(const K& k) const {
    Poly1 r = *this;
    K p(1);
    for (size_t i = 0; i < r.c.size(); ++i) {
      r.c[i] *= p;
      p *= k;
    }
    r.trim();
    return r;
  }
};

template <class K>
void poly1_divmod(const Poly1<K>& a, const Poly1<K>& b, Poly1<K>& q,
                  Poly1<K>& r) {
  if (b.is_zero()) throw input_error("division by zero polynomial");
  q = Poly1<K>();
  r = a;
  K lb = b.c.back().inv();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    K coef = r.c.back() * lb;
    q = q + Poly1<K>::monomial(coef, shift);
    for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] -= coef * b.c[i];
    r.trim();
  }
}

template <class K>
Poly1<K> poly1_gcd(Poly1<K> a, Poly1<K> b) {
  while (!b.is_zero()) {
    Poly1<K> q, r;
    poly1_divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (!a.is_zero()) a = a * a.c.back().inv();  // monic
  return a;
}

// Rational function in one variable over K, canonical: reduced, monic
// denominator.
template <class K>
struct RatFun {
  Poly1<K> num, den;

  RatFun() : num(), den(K(1)) {}
  RatFun(Poly1<K> n, Poly1<K> d) : num(std::move(n)), den(std::move(d)) {
    normalize();
  }
  static RatFun from_poly(Poly1<K> p) { return RatFun(std::move(p), Poly1<K>(K(1))); }
  // no gcd reduction; for coefficient rings where gcd is too costly
  static RatFun raw(Poly1<K> n, Poly1<K> d) {
    RatFun f;
    f.num = std::move(n);
    f.den = std::move(d);
    if (f.den.is_zero()) throw input_error("rational function with zero denominator");
    return f;
  }

  void normalize() {
    if (den.is_zero()) throw input_error("rational function with zero denominator");
    if (num.is_zero()) {
      den = Poly1<K>(K(1));
      return;
    }
    Poly1<K> g = poly1_gcd(num, den);
    if (g.degree() > 0) {
      Poly1<K> q, r;
      poly1_divmod(num, g, q, r);
      num = q;
      poly1_divmod(den, g, q, r);
      den = q;
    }
    // scale so the lowest nonzero denominator coefficient is 1
    K unit(0);
    for (const auto& x : den.c)
      if (!x.is_zero()) {
        unit = x.inv();
        break;
      }
    num = num * unit;
    den = den * unit;
  }

  bool is_zero() const { return num.is_zero(); }
  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.num, a.den * b.den);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw input_error("division by zero rational function");
    return RatFun(a.num * b.den, a.den * b.num);
  }
  // equality of the underlying functions (no canonical form assumed)
  bool operator==(const RatFun& o) const { return num * o.den == o.num * den; }

  // f(k t)
  RatFun scale_arg(const K& k) const {
    return raw(num.scale_arg(k), den.scale_arg(k));
  }
  // f(1/t)
  RatFun subst_inverse() const {
    int dn = num.degree(), dd = den.degree();
    Poly1<K> n = num.reversed(), d = den.reversed();
    if (dd > dn)
      n = n * Poly1<K>::monomial(K(1), dd - dn);
    else if (dn > dd)
      d = d * Poly1<K>::monomial(K(1), dn - dd);
    return raw(std::move(n), std::move(d));
  }
  // f * t^k (k may be negative)
  RatFun shift(int k) const {
    if (k >= 0) return raw(num * Poly1<K>::monomial(K(1), k), den);
    return raw(num, den * Poly1<K>::monomial(K(1), -k));
  }
};

// Truncated power series over K: coefficients of t^0..t^order.
template <class K>
struct Series {
  std::vector<K> c;
  int order = 0;

  Series() : c(1, K(0)), order(0) {}
  Series(int ord, K c0) : c(ord + 1, K(0)), order(ord) { c[0] = std::move(c0); }

  K at(int i) const {
    if (i < 0 || i > order) throw input_error("series coefficient beyond order");
    return c[i];
  }
  Series truncated(int n) const {
    if (n > order) throw input_error("cannot extend series precision");
    Series r;
    r.order = n;
    r.c.assign(c.begin(), c.begin() + n + 1);
    return r;
  }
  friend Series operator+(const Series& a, const Series& b) {
    Series r;
    r.order = std::min(a.order, b.order);
    r.c.assign(r.order + 1, K(0));
    for (int i = 0; i <= r.order; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series r;
    r.order = std::min(a.order, b.order);
    r.c.assign(r.order + 1, K(0));
    for (int i = 0; i <= r.order; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series r;
    r.order = std::min(a.order, b.order);
    r.c.assign(r.order + 1, K(0));
    for (int i = 0; i <= r.order; ++i) {
      if (a.c[i].is_zero()) continue;
      for (int j = 0; i + j <= r.order; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }
  bool operator==(const Series& o) const { return order == o.order && c == o.c; }

  Series inverse() const {
    if (c[0].is_zero()) throw input_error("series inverse needs unit constant term");
    Series r;
    r.order = order;
    r.c.assign(order + 1, K(0));
    K u = c[0].inv();
    r.c[0] = u;
    for (int n = 1; n <= order; ++n) {
      K acc(0);
      for (int k = 1; k <= n; ++k) acc += c[k] * r.c[n - k];
      r.c[n] = -(u * acc);
    }
    return r;
  }

  static Series from_poly(const Poly1<K>& p, int ord) {
    Series r;
    r.order = ord;
    r.c.assign(ord + 1, K(0));
    for (int i = 0; i <= ord && i <= p.degree(); ++i) r.c[i] = p.c[i];
    return r;
  }
  static Series from_ratfun(const RatFun<K>& f, int ord) {
    Series d = from_poly(f.den, ord);
    return from_poly(f.num, ord) * d.inverse();
  }

  // exp of a series with zero constant term
  Series exp() const {
    if (!c[0].is_zero()) throw input_error("series exp needs zero constant term");
    Series r(order, K(1));
    Series pw(order, K(1));
    Int fact = 1;
    for (int m = 1; m <= order; ++m) {
      pw = pw * (*this);
      fact *= m;
      K invf = K(1) / K(Int(fact));
      for (int i = 0; i <= order; ++i) r.c[i] += pw.c[i] * invf;
      bool all0 = true;
      for (const auto& x : pw.c)
        if (!x.is_zero()) all0 = false;
      if (all0) break;
    }
    return r;
  }
  // log of a series with constant term 1
  Series log() const {
    if (!(c[0] == K(1))) throw input_error("series log needs constant term 1");
    Series u = *this;
    u.c[0] = K(0);  // x - 1
    Series r(order, K(0));
    Series pw(order, K(1));
    for (int m = 1; m <= order; ++m) {
      pw = pw * u;
      K coef = K(m % 2 == 1 ? 1 : -1) / K(m);
      for (int i = 0; i <= order; ++i) r.c[i] += pw.c[i] * coef;
      bool all0 = true;
      for (const auto& x : pw.c)
        if (!x.is_zero()) all0 = false;
      if (all0) break;
    }
    return r;
  }
};

}  // namespace parhall
