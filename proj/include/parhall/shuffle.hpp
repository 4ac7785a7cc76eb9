#pragma once

#include <memory>

#include "parhall/curve.hpp"
#include "parhall/weights.hpp"

namespace parhall {

// An (r,s)-shuffle: sigma[i] is the position of input slot i, and
// inv_pairs lists the (i,j) with i < j whose post-permutation slots came
// from the second and first block respectively.
struct ShufPerm {
  std::vector<int> sigma;
  std::vector<int> inv;
  std::vector<std::pair<int, int>> inv_pairs;
};

std::vector<ShufPerm> enumerate_shuffles(int r, int s);

struct TruncPolicy {
  int N = 0;
};

// Shared data of a weighted shuffle algebra: the marked points, the
// curve, and the expansion coefficients of the kernel h(z).
class ShuffleCtx {
 public:
  ShuffleCtx(Weights w, Curve c) : weights_(std::move(w)), curve_(std::move(c)) {}
  const Weights& weights() const { return weights_; }
  const Curve& curve() const { return curve_; }
  const Scalar& h(int k) const;
  void ensure_h(int upto) const;

 private:
  Weights weights_;
  Curve curve_;
  mutable std::vector<Scalar> h_;
};

using CtxPtr = std::shared_ptr<const ShuffleCtx>;

// Monomial t_1^{d_1 + x_1} ... t_r^{d_r + x_r}; residues are stored
// flattened, slot-major.
struct SMono {
  std::vector<long long> d;
  std::vector<int> res;
  auto operator<=>(const SMono&) const = default;
};

struct STerm {
  Scalar coeff;
  int ord = 0;  // ratio order at which the monomial first appears
};

class ShufElem {
 public:
  ShufElem() = default;
  ShufElem(CtxPtr ctx, int r, TruncPolicy pol)
      : ctx_(std::move(ctx)), r_(r), pol_(pol) {}

  const CtxPtr& ctx() const { return ctx_; }
  int rank() const { return r_; }
  TruncPolicy policy() const { return pol_; }
  const std::map<SMono, STerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SMono& m, const Scalar& c, int ord);
  Scalar coeff(const SMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second.coeff;
  }

  friend ShufElem operator+(const ShufElem& a, const ShufElem& b);
  ShufElem scaled(const Scalar& c) const;
  bool same_coeffs(const ShufElem& o) const;

  // total lattice degree, defined for homogeneous elements
  Lattice total_degree() const;
  bool is_homogeneous() const;

  ShufElem retruncated(int n) const;

 private:
  CtxPtr ctx_;
  int r_ = 0;
  TruncPolicy pol_{0};
  std::map<SMono, STerm> terms_;
};

// degree-one generator t_1^{d + x}
ShufElem generator(const CtxPtr& ctx, long long d, const Residue& x);

ShufElem shuffle_mul(const ShufElem& a, const ShufElem& b, TruncPolicy pol);
ShufElem shuffle_mul_serial(const ShufElem& a, const ShufElem& b, TruncPolicy pol);

// slot-splitting coproduct piece Delta_{m,n}; right factors reindexed
std::vector<std::tuple<SMono, SMono, Scalar>> deconcat(const ShufElem& u, int m,
                                                       int n);

// exponent window for span computations: every slot exponent in [lo, hi]
struct ExpWindow {
  long long lo = 0, hi = 0;
};

// rank over Q(v) of the coefficient matrix of the products of the given
// generator tuples, restricted to the window; throws saturation_error if
// enlarging the policy by one changes any in-window coefficient
int graded_span_dim(const CtxPtr& ctx,
                    const std::vector<std::vector<std::pair<long long, Residue>>>& tuples,
                    const ExpWindow& window, TruncPolicy pol);

// in-window coefficients of the product of one generator tuple
std::map<SMono, Scalar> windowed_product_coeffs(
    const CtxPtr& ctx, const std::vector<std::pair<long long, Residue>>& tuple,
    const ExpWindow& window, TruncPolicy pol);

}  // namespace parhall
