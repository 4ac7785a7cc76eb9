#include "parhall/curve.hpp"

namespace parhall {

Curve Curve::numeric(int genus, std::vector<Scalar> lower,
                     std::optional<Rat> lnum) {
  if (genus < 0) throw input_error("negative genus");
  if (static_cast<int>(lower.size()) != genus)
    throw input_error("expected g free numerator coefficients");
  Curve c;
  c.mode_ = Mode::numeric;
  c.genus_ = genus;
  c.lnum_ = std::move(lnum);
  c.p_.assign(2 * genus + 1, Scalar(0));
  c.p_[0] = Scalar(1);
  for (int i = 1; i <= genus; ++i) c.p_[i] = lower[i - 1];
  // functional-equation symmetry p_{2g-i} = l^{g-i} p_i with l = v^-2
  for (int i = 0; i < genus; ++i)
    c.p_[2 * genus - i] = Scalar::l_pow(genus - i) * c.p_[i];
  return c;
}

Curve Curve::numeric_full(int genus, const std::vector<Scalar>& coeffs,
                          std::optional<Rat> lnum) {
  if (static_cast<int>(coeffs.size()) != 2 * genus + 1)
    throw input_error("numerator must have 2g+1 coefficients");
  if (!(coeffs[0] == Scalar(1))) throw input_error("P(0) must equal 1");
  // validate the upper half, either symbolically or against a numeric l
  for (int i = 0; i < genus; ++i) {
    const Scalar& hi = coeffs[2 * genus - i];
    Scalar sym = Scalar::l_pow(genus - i) * coeffs[i];
    if (hi == sym) continue;
    bool ok = false;
    if (lnum) {
      try {
        ok = hi.eval_at_l(*lnum) == sym.eval_at_l(*lnum);
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok)
      throw input_error("numerator violates the zeta functional equation");
  }
  std::vector<Scalar> lower(coeffs.begin() + 1, coeffs.begin() + 1 + genus);
  return numeric(genus, std::move(lower), std::move(lnum));
}

Curve Curve::generic(int genus) {
  Curve c;
  c.mode_ = Mode::generic;
  c.genus_ = genus;
  c.pg_.assign(2 * genus + 1, GenericScalar(Scalar(0), genus));
  c.pg_[0] = GenericScalar(Scalar(1), genus);
  for (int i = 1; i <= genus; ++i) c.pg_[i] = GenericScalar::coeff_var(genus, i - 1);
  for (int i = 0; i < genus; ++i)
    c.pg_[2 * genus - i] =
        GenericScalar(Scalar::l_pow(genus - i), genus) * c.pg_[i];
  return c;
}

template <class K>
static RatFun<K> zeta_impl(const std::vector<K>& p) {
  Poly1<K> num;
  num.c.assign(p.begin(), p.end());
  num.trim();
  Poly1<K> one_minus_t;
  one_minus_t.c = {K(1), -K(1)};
  K l = K(1);
  // l = v^-2 lifted into K
  if constexpr (std::is_same_v<K, Scalar>) {
    l = Scalar::l_pow(1);
  } else {
    l = K(Scalar::l_pow(1), 0);
  }
  Poly1<K> one_minus_lt;
  one_minus_lt.c = {K(1), -l};
  if constexpr (std::is_same_v<K, Scalar>) {
    return RatFun<K>(num, one_minus_t * one_minus_lt);
  } else {
    return RatFun<K>::raw(num, one_minus_t * one_minus_lt);
  }
}

RatFun<Scalar> Curve::zeta_rational() const {
  if (mode_ != Mode::numeric) throw input_error("zeta_rational: numeric mode only");
  return zeta_impl<Scalar>(p_);
}

RatFun<GenericScalar> Curve::zeta_rational_generic() const {
  if (mode_ == Mode::generic) {
    std::vector<GenericScalar> pg = pg_;
    for (auto& x : pg)
      if (x.nvars() != genus_) x = GenericScalar(Scalar(0), genus_);
    return zeta_impl<GenericScalar>(pg);
  }
  std::vector<GenericScalar> pg;
  pg.reserve(p_.size());
  for (const auto& s : p_) pg.emplace_back(s, 0);
  return zeta_impl<GenericScalar>(pg);
}

bool Curve::functional_equation_check() const {
  RatFun<Scalar> z = zeta_rational();
  RatFun<Scalar> lhs = z.scale_arg(Scalar::v_pow(2));
  RatFun<Scalar> rhs = z.subst_inverse().shift(2 * (genus_ - 1));
  rhs.num = rhs.num * Scalar::v_pow(2 * (genus_ - 1));
  rhs.normalize();
  return lhs == rhs;
}

Scalar Curve::point_count(int k) const {
  if (mode_ != Mode::numeric) throw input_error("point_count: numeric mode only");
  if (k < 1) throw input_error("point_count needs k >= 1");
  // Newton's identities on the roots of P: e_i = (-1)^i p_i
  int n = 2 * genus_;
  std::vector<Scalar> e(n + 1, Scalar(0)), s(k + 1, Scalar(0));
  for (int i = 0; i <= n; ++i) e[i] = (i % 2 == 0) ? p_[i] : -p_[i];
  for (int m = 1; m <= k; ++m) {
    Scalar acc = (m <= n) ? Scalar(m % 2 == 1 ? m : -m) * e[m] : Scalar(0);
    for (int i = 1; i < m; ++i) {
      if (i > n) break;
      Scalar term = e[i] * s[m - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    s[m] = acc;
  }
  return Scalar(1) - s[k] + Scalar::l_pow(k);
}

Series<Scalar> Curve::h_series(int order) const {
  if (mode_ != Mode::numeric) throw input_error("h_series: numeric mode only");
  Series<Scalar> xi = xi_coeffs(order);
  Scalar c = Scalar::v_pow(2 * genus_ - 2);
  for (auto& x : xi.c) x *= c;
  return xi;
}

Series<Scalar> Curve::xi_coeffs(int order) const {
  if (mode_ != Mode::numeric) throw input_error("xi_coeffs: numeric mode only");
  RatFun<Scalar> z = zeta_rational();
  RatFun<Scalar> ratio = z / z.scale_arg(Scalar::v_pow(2));
  return Series<Scalar>::from_ratfun(ratio, order);
}

Series<GenericScalar> Curve::xi_coeffs_generic(int order) const {
  RatFun<GenericScalar> z = zeta_rational_generic();
  GenericScalar v2(Scalar::v_pow(2), mode_ == Mode::generic ? genus_ : 0);
  RatFun<GenericScalar> zs = z.scale_arg(v2);
  // zeta(z)/zeta(v^2 z) as a series without fraction-field gcd work
  auto ratio = RatFun<GenericScalar>::raw(z.num * zs.den, z.den * zs.num);
  return Series<GenericScalar>::from_ratfun(ratio, order);
}

RatFun<Scalar> Curve::g_rational() const {
  RatFun<Scalar> z = zeta_rational();
  Poly1<Scalar> a;  // 1 - v^-2 t
  a.c = {Scalar(1), -Scalar::l_pow(1)};
  Poly1<Scalar> b;  // t - v^-2, so that (1 - v^-2/t) = b/t
  b.c = {-Scalar::l_pow(1), Scalar(1)};
  RatFun<Scalar> zt = z * RatFun<Scalar>::from_poly(a) *
                      RatFun<Scalar>(b, Poly1<Scalar>::monomial(Scalar(1), 1));
  RatFun<Scalar> g = zt.subst_inverse().shift(genus_ - 1);
  g.normalize();
  return g;
}

Series<Scalar> Curve::zeta_series(int order) const {
  Series<Scalar> acc(order, Scalar(0));
  for (int k = 1; k <= order; ++k) {
    Scalar c = point_count(k) / Scalar(k);
    acc.c[k] += c;
  }
  return acc.exp();
}

Curve Curve::specialize(const std::vector<Rat>& values) const {
  if (mode_ != Mode::generic) throw input_error("specialize: generic mode only");
  std::vector<Scalar> lower;
  lower.reserve(genus_);
  for (int i = 1; i <= genus_; ++i) lower.push_back(pg_[i].specialize(values));
  return Curve::numeric(genus_, std::move(lower));
}

}  // namespace parhall
