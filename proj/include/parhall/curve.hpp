#pragma once

#include <optional>

#include "parhall/generic.hpp"
#include "parhall/polyring.hpp"

namespace parhall {

// A smooth projective curve over F_l presented by its genus and the
// zeta numerator P(t) = 1 + p_1 t + ... + p_{2g} t^{2g}.  Coefficients
// live in Q(v) with the field size encoded as l = v^-2, so the Weil
// functional equation holds as an exact rational identity.  When a
// numeric l accompanies integer input coefficients, the upper half of
// the numerator is validated against it and then re-expressed through
// v; the numeric value is kept for finite-field evaluations.
class Curve {
 public:
  enum class Mode { numeric, generic };

  // numeric curve from the free lower coefficients p_1..p_g
  static Curve numeric(int genus, std::vector<Scalar> lower,
                       std::optional<Rat> lnum = std::nullopt);
  // numeric curve from all 2g+1 coefficients (validated, upper half lifted)
  static Curve numeric_full(int genus, const std::vector<Scalar>& coeffs,
                            std::optional<Rat> lnum = std::nullopt);
  static Curve generic(int genus);

  Mode mode() const { return mode_; }
  int genus() const { return genus_; }
  const std::optional<Rat>& numeric_l() const { return lnum_; }
  const std::vector<Scalar>& numerator() const { return p_; }
  const std::vector<GenericScalar>& numerator_generic() const { return pg_; }

  // P(t)/((1-t)(1-lt)) with l = v^-2
  RatFun<Scalar> zeta_rational() const;
  RatFun<GenericScalar> zeta_rational_generic() const;

  bool functional_equation_check() const;

  // #X(F_{l^k}) as an element of Q(v); an integer after evaluating at
  // the numeric l
  Scalar point_count(int k) const;

  // h_X(t) = v^{2g-2} zeta(t)/zeta(v^2 t), expanded at t = 0
  Series<Scalar> h_series(int order) const;
  // zeta(z)/zeta(v^2 z) = sum xi_k z^k
  Series<Scalar> xi_coeffs(int order) const;
  Series<GenericScalar> xi_coeffs_generic(int order) const;

  // g_X(t) = t^{g-1} zt(1/t) with zt(t) = zeta(t)(1-v^-2 t)(1-v^-2 t^-1)
  RatFun<Scalar> g_rational() const;

  // exp(sum point_count(k) t^k / k) to the given order
  Series<Scalar> zeta_series(int order) const;

  // substitute c_i = values[i] into a generic curve
  Curve specialize(const std::vector<Rat>& values) const;

 private:
  Mode mode_ = Mode::numeric;
  int genus_ = 0;
  std::optional<Rat> lnum_;
  std::vector<Scalar> p_;         // numeric mode, size 2g+1
  std::vector<GenericScalar> pg_;  // generic mode
};

}  // namespace parhall
