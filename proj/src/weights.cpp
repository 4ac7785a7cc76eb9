#include "parhall/weights.hpp"

namespace parhall {

Lattice lat_add(const Weights& w, const Lattice& a, const Lattice& b) {
  std::vector<int> raw(w.npoints());
  for (size_t i = 0; i < w.npoints(); ++i) raw[i] = a.res.x[i] + b.res.x[i];
  return Lattice::make(w, a.d + b.d, std::move(raw));
}

Lattice lat_neg(const Weights& w, const Lattice& a) {
  std::vector<int> raw(w.npoints());
  for (size_t i = 0; i < w.npoints(); ++i) raw[i] = -a.res.x[i];
  return Lattice::make(w, -a.d, std::move(raw));
}

Residue pi(const Lattice& v) { return v.res; }

Lattice lattice_from_multidegree(
    const Weights& w, long long d0,
    const std::vector<std::vector<long long>>& slots) {
  if (slots.size() != w.npoints())
    throw input_error("multidegree has wrong number of points");
  std::vector<int> raw(w.npoints(), 0);
  for (size_t p = 0; p < w.npoints(); ++p) {
    int wp = w.weight(p);
    if (static_cast<int>(slots[p].size()) != wp - 1)
      throw input_error("multidegree slot count mismatch");
    long long prev = d0;
    for (int i = 1; i < wp; ++i) {
      long long diff = slots[p][i - 1] - prev;
      if (diff != 0 && diff != 1)
        throw input_error("not a line-bundle class: slot difference outside {0,1}");
      raw[p] += static_cast<int>(i * diff);
      prev = slots[p][i - 1];
    }
    // wrap: d_{w_p} = d0 + 1 for rank one, so the last difference is
    // (d0 + 1) - d_{w_p-1}, also constrained to {0,1}
    long long wrap = d0 + 1 - prev;
    if (wrap != 0 && wrap != 1)
      throw input_error("not a line-bundle class: slot difference outside {0,1}");
  }
  return Lattice::make(w, d0, std::move(raw));
}

GAElem ga_mul(const Weights& w, const GAElem& a, const GAElem& b) {
  GAElem r;
  for (const auto& [va, ca] : a.terms)
    for (const auto& [vb, cb] : b.terms) r.add_term(lat_add(w, va, vb), ca * cb);
  return r;
}

GAElem gamma_factor(const Weights& w, const Residue& x) {
  GAElem acc = GAElem::unit(w);
  Scalar v1 = Scalar::v_pow(1);
  Scalar one_minus_v2 = Scalar(1) - Scalar::v_pow(2);
  for (size_t p = 0; p < w.npoints(); ++p) {
    if (x.x[p] == 0) continue;
    GAElem factor;
    factor.add_term(Lattice::zero(w), v1);
    factor.add_term(Lattice::x_gen(w, p, x.x[p]), one_minus_v2);
    acc = ga_mul(w, acc, factor);
  }
  return acc;
}

}  // namespace parhall
