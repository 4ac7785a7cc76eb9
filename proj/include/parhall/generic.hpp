#pragma once

#include "parhall/mpoly.hpp"

namespace parhall {

// Fraction of multivariate polynomials in the free zeta-numerator
// coefficients c_1..c_g, over Q(v).  No full gcd reduction; equality is
// by cross-multiplication.
class GenericScalar {
 public:
  GenericScalar() : num_(0), den_(MPoly<Scalar>::constant(0, Scalar(1))) {}
  GenericScalar(int k)
      : num_(MPoly<Scalar>::constant(0, Scalar(k))),
        den_(MPoly<Scalar>::constant(0, Scalar(1))) {}
  explicit GenericScalar(const Int& k) : GenericScalar(Scalar(k), 0) {}
  explicit GenericScalar(const Scalar& s, int nvars = 0)
      : num_(MPoly<Scalar>::constant(nvars, s)),
        den_(MPoly<Scalar>::constant(nvars, Scalar(1))) {}
  GenericScalar(MPoly<Scalar> n, MPoly<Scalar> d)
      : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw input_error("generic scalar with zero denominator");
    normalize();
  }
  static GenericScalar coeff_var(int g, int i) {  // c_{i+1}, 0-based i
    return GenericScalar(MPoly<Scalar>::var(g, i),
                         MPoly<Scalar>::constant(g, Scalar(1)));
  }

  int nvars() const { return num_.nvars; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return (*this) == GenericScalar(Scalar(1), nvars()); }

  GenericScalar operator-() const { return GenericScalar(-num_, den_); }
  // constants are created without knowing g; widen on demand
  static std::pair<GenericScalar, GenericScalar> aligned(GenericScalar a,
                                                         GenericScalar b) {
    int nv = std::max(a.nvars(), b.nvars());
    if (a.nvars() < nv) {
      a.num_ = a.num_.widened(nv, 0);
      a.den_ = a.den_.widened(nv, 0);
    }
    if (b.nvars() < nv) {
      b.num_ = b.num_.widened(nv, 0);
      b.den_ = b.den_.widened(nv, 0);
    }
    return {std::move(a), std::move(b)};
  }
  friend GenericScalar operator+(const GenericScalar& a0, const GenericScalar& b0) {
    auto [a, b] = aligned(a0, b0);
    return GenericScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend GenericScalar operator-(const GenericScalar& a0, const GenericScalar& b0) {
    auto [a, b] = aligned(a0, b0);
    return GenericScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend GenericScalar operator*(const GenericScalar& a0, const GenericScalar& b0) {
    auto [a, b] = aligned(a0, b0);
    return GenericScalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend GenericScalar operator/(const GenericScalar& a0, const GenericScalar& b0) {
    if (b0.is_zero()) throw input_error("generic scalar division by zero");
    auto [a, b] = aligned(a0, b0);
    return GenericScalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  GenericScalar& operator+=(const GenericScalar& o) { return *this = *this + o; }
  GenericScalar& operator-=(const GenericScalar& o) { return *this = *this - o; }
  GenericScalar& operator*=(const GenericScalar& o) { return *this = *this * o; }
  GenericScalar& operator/=(const GenericScalar& o) { return *this = *this / o; }

  GenericScalar inv() const {
    if (is_zero()) throw input_error("inverse of zero generic scalar");
    return GenericScalar(den_, num_);
  }
  GenericScalar pow(int k) const {
    if (k == 0) return GenericScalar(Scalar(1), nvars());
    GenericScalar b = k > 0 ? *this : inv();
    int e = k > 0 ? k : -k;
    GenericScalar r(Scalar(1), nvars());
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const GenericScalar& o) const {
    auto [a, b] = aligned(*this, o);
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }
  bool operator!=(const GenericScalar& o) const { return !(*this == o); }

  // substitution homomorphism c_i -> values[i]
  Scalar specialize(const std::vector<Rat>& values) const {
    if (static_cast<int>(values.size()) < nvars())
      throw input_error("specialize: wrong number of values");
    std::vector<Scalar> vals;
    vals.reserve(nvars());
    for (int i = 0; i < nvars(); ++i) vals.emplace_back(values[i]);
    Scalar d = den_.eval(vals);
    if (d.is_zero()) throw pole_error("specialization pole");
    return num_.eval(vals) / d;
  }

  const MPoly<Scalar>& num() const { return num_; }
  const MPoly<Scalar>& den() const { return den_; }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = MPoly<Scalar>::constant(num_.nvars, Scalar(1));
      return;
    }
    // light canonicalization: make the leading denominator coefficient 1
    const Scalar& lead = den_.t.begin()->second;
    if (!lead.is_one()) {
      Scalar li = lead.inv();
      num_ = num_ * li;
      den_ = den_ * li;
    }
  }
  MPoly<Scalar> num_, den_;
};

}  // namespace parhall
