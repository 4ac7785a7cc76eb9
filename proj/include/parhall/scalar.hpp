#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace parhall {

using Int = mpz_class;
using Rat = mpq_class;

struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& m) : std::runtime_error(m) {}
};
struct saturation_error : std::runtime_error {
  explicit saturation_error(const std::string& m) : std::runtime_error(m) {}
};
struct pole_error : std::runtime_error {
  explicit pole_error(const std::string& m) : std::runtime_error(m) {}
};

// Dense integer-coefficient polynomial in the formal variable v,
// coefficients ascending.  Empty vector is the zero polynomial.
struct VPoly {
  std::vector<Int> c;

  VPoly() = default;
  explicit VPoly(Int k) {
    if (k != 0) c.push_back(std::move(k));
  }
  static VPoly monomial(const Int& k, int deg);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Int& lc() const { return c.back(); }
  void trim();

  friend VPoly operator+(const VPoly& a, const VPoly& b);
  friend VPoly operator-(const VPoly& a, const VPoly& b);
  friend VPoly operator*(const VPoly& a, const VPoly& b);
  VPoly operator-() const;
  bool operator==(const VPoly& o) const { return c == o.c; }

  Int content() const;
  VPoly primitive() const;
  // quotient of exact division; throws if not divisible
  VPoly divexact(const VPoly& d) const;
};

VPoly vpoly_gcd(VPoly a, VPoly b);

// Element of Q(v).  Canonical form: numerator and denominator are
// integer polynomials with gcd 1 (including contents) and the
// denominator has positive leading coefficient.  The field-size symbol
// of the ambient finite field is always v^-2; it is substituted on
// construction and never stored.
class Scalar {
 public:
  Scalar() : num_(), den_(Int(1)) {}
  Scalar(int k) : num_(Int(k)), den_(Int(1)) {}
  explicit Scalar(const Int& k) : num_(k), den_(Int(1)) {}
  explicit Scalar(const Rat& q);
  Scalar(VPoly n, VPoly d);

  static Scalar v_pow(int k);          // v^k, k may be negative
  static Scalar l_pow(int k) { return v_pow(-2 * k); }  // l^k = v^{-2k}
  static Scalar q_int(int d);          // [d] = (v^-d - v^d)/(v^-1 - v)

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inv() const;
  Scalar pow(int k) const;

  const VPoly& num() const { return num_; }
  const VPoly& den() const { return den_; }

  // substitute v^2 = 1/l; requires all v-powers even
  Rat eval_at_l(const Rat& l) const;
  // image in Q[v]/(v^2 - 1/l) as (a, b) for a + b v
  std::pair<Rat, Rat> eval_quadratic(const Rat& l) const;

  std::string str() const;
  static Scalar parse(const std::string& s);

  // total order compatible with canonical form, for use as map key
  friend bool scalar_less(const Scalar& a, const Scalar& b);

 private:
  void reduce();
  VPoly num_, den_;
};

inline Scalar operator*(int k, const Scalar& s) { return Scalar(k) * s; }

std::string vpoly_str(const VPoly& p);

}  // namespace parhall
