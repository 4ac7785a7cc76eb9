#include "parhall/shuffle.hpp"

#include <algorithm>

#include "parhall/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parhall {

std::vector<ShufPerm> enumerate_shuffles(int r, int s) {
  if (r < 0 || s < 0) throw input_error("enumerate_shuffles needs r, s >= 0");
  int n = r + s;
  std::vector<ShufPerm> out;
  // choose the ascending positions of the first block
  std::vector<int> pos(r);
  for (int i = 0; i < r; ++i) pos[i] = i;
  for (;;) {
    ShufPerm p;
    p.sigma.assign(n, -1);
    for (int i = 0; i < r; ++i) p.sigma[i] = pos[i];
    std::vector<bool> used(n, false);
    for (int i = 0; i < r; ++i) used[pos[i]] = true;
    int next = 0;
    for (int j = 0; j < s; ++j) {
      while (next < n && used[next]) ++next;
      p.sigma[r + j] = next;
      used[next] = true;
    }
    p.inv.assign(n, -1);
    for (int i = 0; i < n; ++i) p.inv[p.sigma[i]] = i;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p.inv[i] >= r && p.inv[j] < r) p.inv_pairs.emplace_back(i, j);
    out.push_back(std::move(p));
    if (r == 0) break;
    // next combination
    int k = r - 1;
    while (k >= 0 && pos[k] == n - r + k) --k;
    if (k < 0) break;
    ++pos[k];
    for (int i = k + 1; i < r; ++i) pos[i] = pos[i - 1] + 1;
  }
  return out;
}

const Scalar& ShuffleCtx::h(int k) const {
  ensure_h(k);
  return h_[k];
}

void ShuffleCtx::ensure_h(int upto) const {
  if (static_cast<int>(h_.size()) > upto) return;
  auto hs = curve_.h_series(upto + 4);
  h_.assign(hs.c.begin(), hs.c.end());
}

void ShufElem::add_term(const SMono& m, const Scalar& c, int ord) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, STerm{c, ord});
    return;
  }
  it->second.coeff += c;
  it->second.ord = std::min(it->second.ord, ord);
  if (it->second.coeff.is_zero()) terms_.erase(it);
}

ShufElem operator+(const ShufElem& a, const ShufElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.r_ != b.r_) throw input_error("adding shuffle elements of different rank");
  ShufElem r = a;
  r.pol_.N = std::min(a.pol_.N, b.pol_.N);
  for (const auto& [m, t] : b.terms_) r.add_term(m, t.coeff, t.ord);
  return r;
}

ShufElem ShufElem::scaled(const Scalar& c) const {
  ShufElem r(ctx_, r_, pol_);
  if (c.is_zero()) return r;
  for (const auto& [m, t] : terms_) r.terms_.emplace(m, STerm{t.coeff * c, t.ord});
  return r;
}

bool ShufElem::same_coeffs(const ShufElem& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!(it->second.coeff == jt->second.coeff)) return false;
  }
  return true;
}

Lattice ShufElem::total_degree() const {
  if (terms_.empty()) throw input_error("total degree of the zero element");
  const Weights& w = ctx_->weights();
  const SMono& m = terms_.begin()->first;
  Lattice acc = Lattice::zero(w);
  size_t np = w.npoints();
  for (int i = 0; i < r_; ++i) {
    std::vector<int> raw(np);
    for (size_t p = 0; p < np; ++p) raw[p] = m.res[i * np + p];
    acc = lat_add(w, acc, Lattice::make(w, m.d[i], std::move(raw)));
  }
  return acc;
}

bool ShufElem::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Weights& w = ctx_->weights();
  size_t np = w.npoints();
  Lattice ref;
  bool first = true;
  for (const auto& [m, t] : terms_) {
    Lattice acc = Lattice::zero(w);
    for (int i = 0; i < r_; ++i) {
      std::vector<int> raw(np);
      for (size_t p = 0; p < np; ++p) raw[p] = m.res[i * np + p];
      acc = lat_add(w, acc, Lattice::make(w, m.d[i], std::move(raw)));
    }
    if (first) {
      ref = acc;
      first = false;
    } else if (!(acc == ref)) {
      return false;
    }
  }
  return true;
}

ShufElem ShufElem::retruncated(int n) const {
  if (n > pol_.N) throw input_error("cannot retruncate to a larger policy");
  ShufElem r(ctx_, r_, TruncPolicy{n});
  for (const auto& [m, t] : terms_)
    if (t.ord <= n) r.terms_.emplace(m, t);
  return r;
}

ShufElem generator(const CtxPtr& ctx, long long d, const Residue& x) {
  const Weights& w = ctx->weights();
  if (x.x.size() != w.npoints()) throw input_error("generator residue size mismatch");
  ShufElem e(ctx, 1, TruncPolicy{0});
  SMono m;
  m.d = {d};
  m.res = x.x;
  e.add_term(m, Scalar(1), 0);
  return e;
}

namespace {

// one sigma-branch of one monomial pair, ready for h-expansion
struct BranchTask {
  std::vector<long long> based;   // slot integer parts after sigma and Gamma
  std::vector<int> baseres;       // slot residues after sigma and Gamma
  Scalar coeff;                   // input coefficients times Gamma constants
  int base_ord;                   // sum of the two input term orders
  const std::vector<std::pair<int, int>>* pairs;
};

struct GammaSite {
  int si, sj;  // slots
  int point;
  int delta;   // nonzero residue difference
};

// expand the h-series over the inversion pairs, total order bounded by kint
void expand_branch(const ShuffleCtx& ctx, const BranchTask& task, int kint,
                   int /*npoints*/, ShufElem& out) {
  const auto& pairs = *task.pairs;
  int npairs = static_cast<int>(pairs.size());
  std::vector<long long> d = task.based;
  SMono mono;
  mono.res = task.baseres;
  auto rec = [&](auto&& self, int level, int budget, const Scalar& coeff) -> void {
    if (level == npairs) {
      mono.d = d;
      out.add_term(mono, coeff, task.base_ord + (kint - budget));
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      if (k > 0) {
        d[pairs[level].first] += 1;
        d[pairs[level].second] -= 1;
      }
      self(self, level + 1, budget - k, coeff * ctx.h(k));
    }
    d[pairs[level].first] -= budget;
    d[pairs[level].second] += budget;
  };
  rec(rec, 0, kint, task.coeff);
}

}  // namespace

static ShufElem shuffle_mul_impl(const ShufElem& a, const ShufElem& b,
                                 TruncPolicy pol, bool parallel) {
  if (!a.ctx() || !b.ctx()) throw input_error("shuffle product of empty context");
  if (!(a.ctx()->weights() == b.ctx()->weights()) ||
      !(a.ctx()->curve().numerator() == b.ctx()->curve().numerator()) ||
      a.ctx()->curve().genus() != b.ctx()->curve().genus())
    throw input_error("shuffle product needs matching weights and curve");
  if (!a.is_homogeneous() || !b.is_homogeneous())
    throw input_error("shuffle product needs homogeneous inputs");
  const ShuffleCtx& ctx = *a.ctx();
  const Weights& w = ctx.weights();
  int np = static_cast<int>(w.npoints());
  int r = a.rank(), s = b.rank(), n = r + s;
  ShufElem out(a.ctx(), n, pol);
  if (a.is_zero() || b.is_zero()) return out;

  auto shuffles = enumerate_shuffles(r, s);
  Scalar v1 = Scalar::v_pow(1);
  Scalar one_minus_v2 = Scalar(1) - Scalar::v_pow(2);

  // collect all sigma-branches first so the expansion bound can be global
  std::vector<BranchTask> tasks;
  for (const auto& [ma, ta] : a.terms()) {
    for (const auto& [mb, tb] : b.terms()) {
      // combined input slots
      std::vector<long long> ud(n);
      std::vector<int> ures(n * np);
      for (int i = 0; i < r; ++i) {
        ud[i] = ma.d[i];
        for (int p = 0; p < np; ++p) ures[i * np + p] = ma.res[i * np + p];
      }
      for (int j = 0; j < s; ++j) {
        ud[r + j] = mb.d[j];
        for (int p = 0; p < np; ++p) ures[(r + j) * np + p] = mb.res[j * np + p];
      }
      for (const auto& sh : shuffles) {
        // slot k of the permuted monomial carries input slot inv[k]
        std::vector<long long> based(n);
        std::vector<int> baseres(n * np);
        for (int kpos = 0; kpos < n; ++kpos) {
          based[kpos] = ud[sh.inv[kpos]];
          for (int p = 0; p < np; ++p)
            baseres[kpos * np + p] = ures[sh.inv[kpos] * np + p];
        }
        // Gamma sites from the residue differences of the inverted pairs
        std::vector<GammaSite> sites;
        for (const auto& [i, j] : sh.inv_pairs) {
          for (int p = 0; p < np; ++p) {
            int wp = w.weight(p);
            int delta =
                ((ures[sh.inv[i] * np + p] - ures[sh.inv[j] * np + p]) % wp + wp) %
                wp;
            if (delta != 0) sites.push_back({i, j, p, delta});
          }
        }
        if (sites.size() > 20) throw capacity_error("too many gamma sites");
        Scalar cc = ta.coeff * tb.coeff;
        int base_ord = ta.ord + tb.ord;
        for (unsigned mask = 0; mask < (1u << sites.size()); ++mask) {
          BranchTask task;
          task.based = based;
          task.baseres = baseres;
          task.coeff = cc;
          task.base_ord = base_ord;
          task.pairs = &sh.inv_pairs;
          for (size_t t = 0; t < sites.size(); ++t) {
            const GammaSite& g = sites[t];
            if (mask & (1u << t)) {
              task.coeff *= one_minus_v2;
              // shift slot si by +delta x_p and slot sj by -delta x_p
              int wp = w.weight(g.point);
              int xi = task.baseres[g.si * np + g.point] + g.delta;
              task.based[g.si] += xi / wp;
              task.baseres[g.si * np + g.point] = xi % wp;
              int xj = task.baseres[g.sj * np + g.point] - g.delta;
              while (xj < 0) {
                xj += wp;
                task.based[g.sj] -= 1;
              }
              task.baseres[g.sj * np + g.point] = xj;
            } else {
              task.coeff *= v1;
            }
          }
          tasks.push_back(std::move(task));
        }
      }
    }
  }

  // pass 1: expand every branch to the policy order; this finds every
  // monomial whose minimal total ratio order meets the policy
  ctx.ensure_h(pol.N);
  if (parallel && tasks.size() > 1) {
#ifdef _OPENMP
    int nt = std::min<int>(omp_get_max_threads(), static_cast<int>(tasks.size()));
    std::vector<ShufElem> partial(nt, ShufElem(a.ctx(), n, pol));
#pragma omp parallel for schedule(static) num_threads(nt)
    for (size_t t = 0; t < tasks.size(); ++t)
      expand_branch(ctx, tasks[t], pol.N, np, partial[omp_get_thread_num()]);
    for (const auto& part : partial)
      for (const auto& [m, tm] : part.terms()) out.add_term(m, tm.coeff, tm.ord);
#else
    for (const auto& t : tasks) expand_branch(ctx, t, pol.N, np, out);
#endif
  } else {
    for (const auto& t : tasks) expand_branch(ctx, t, pol.N, np, out);
  }

  ShufElem res(a.ctx(), n, pol);
  for (const auto& [m, t] : out.terms())
    if (t.ord <= pol.N) res.add_term(m, t.coeff, t.ord);

  // pass 2: a retained monomial may receive further contributions whose
  // ratio order exceeds the policy.  For a fixed branch the transfer
  // pattern to a fixed monomial has a determined total order (the pair
  // graph is bipartite), so these are finitely many and added exactly.
  std::map<SMono, Scalar> extra;
  for (const auto& task : tasks) {
    const auto& pairs = *task.pairs;
    std::vector<bool> touched(n, false);
    for (const auto& [i, j] : pairs) touched[i] = touched[j] = true;
    for (const auto& [m, t] : res.terms()) {
      if (m.res != task.baseres) continue;
      long long need = 0;
      bool feasible = true;
      std::vector<long long> f(n);
      for (int kpos = 0; kpos < n; ++kpos) {
        f[kpos] = m.d[kpos] - task.based[kpos];
        if (f[kpos] > 0) need += f[kpos];
        if (!touched[kpos] && f[kpos] != 0) feasible = false;
      }
      if (!feasible) continue;
      if (need <= pol.N) continue;  // already counted in pass 1
      if (need > 2000) throw capacity_error("shuffle transfer order too large");
      ctx.ensure_h(static_cast<int>(need));
      Scalar add(0);
      auto rec = [&](auto&& self, size_t lvl, std::vector<long long>& rem,
                     const Scalar& coeff) -> void {
        if (lvl == pairs.size()) {
          for (int kpos = 0; kpos < n; ++kpos)
            if (rem[kpos] != 0) return;
          add += coeff;
          return;
        }
        auto [i, j] = pairs[lvl];
        // k units flow from slot j to slot i
        long long kmax = rem[i] > 0 ? rem[i] : 0;
        for (long long k = 0; k <= kmax; ++k) {
          rem[i] -= k;
          rem[j] += k;
          self(self, lvl + 1, rem, coeff * ctx.h(static_cast<int>(k)));
          rem[i] += k;
          rem[j] -= k;
        }
      };
      std::vector<long long> rem = f;
      rec(rec, 0, rem, task.coeff);
      if (!add.is_zero()) {
        auto it = extra.find(m);
        if (it == extra.end())
          extra.emplace(m, add);
        else
          it->second += add;
      }
    }
  }
  if (extra.empty()) return res;
  ShufElem final_res(a.ctx(), n, pol);
  for (const auto& [m, t] : res.terms()) {
    Scalar c = t.coeff;
    auto it = extra.find(m);
    if (it != extra.end()) c += it->second;
    if (!c.is_zero()) final_res.add_term(m, c, t.ord);
  }
  return final_res;
}

ShufElem shuffle_mul(const ShufElem& a, const ShufElem& b, TruncPolicy pol) {
  return shuffle_mul_impl(a, b, pol, true);
}

ShufElem shuffle_mul_serial(const ShufElem& a, const ShufElem& b, TruncPolicy pol) {
  return shuffle_mul_impl(a, b, pol, false);
}

std::vector<std::tuple<SMono, SMono, Scalar>> deconcat(const ShufElem& u, int m,
                                                       int n) {
  if (m < 0 || n < 0 || m + n != u.rank())
    throw input_error("deconcat needs m + n = rank");
  const Weights& w = u.ctx()->weights();
  int np = static_cast<int>(w.npoints());
  std::map<std::pair<SMono, SMono>, Scalar> acc;
  for (const auto& [mono, t] : u.terms()) {
    SMono left, right;
    left.d.assign(mono.d.begin(), mono.d.begin() + m);
    left.res.assign(mono.res.begin(), mono.res.begin() + m * np);
    right.d.assign(mono.d.begin() + m, mono.d.end());
    right.res.assign(mono.res.begin() + m * np, mono.res.end());
    auto key = std::make_pair(std::move(left), std::move(right));
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(std::move(key), t.coeff);
    else
      it->second += t.coeff;
  }
  std::vector<std::tuple<SMono, SMono, Scalar>> out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k.first, k.second, c);
  return out;
}

std::map<SMono, Scalar> windowed_product_coeffs(
    const CtxPtr& ctx, const std::vector<std::pair<long long, Residue>>& tuple,
    const ExpWindow& window, TruncPolicy pol) {
  if (tuple.empty()) throw input_error("empty generator tuple");
  ShufElem acc = generator(ctx, tuple[0].first, tuple[0].second);
  for (size_t i = 1; i < tuple.size(); ++i)
    acc = shuffle_mul(acc, generator(ctx, tuple[i].first, tuple[i].second), pol);
  std::map<SMono, Scalar> out;
  for (const auto& [m, t] : acc.terms()) {
    bool in = true;
    for (long long d : m.d)
      if (d < window.lo || d > window.hi) in = false;
    if (in) out.emplace(m, t.coeff);
  }
  return out;
}

int graded_span_dim(
    const CtxPtr& ctx,
    const std::vector<std::vector<std::pair<long long, Residue>>>& tuples,
    const ExpWindow& window, TruncPolicy pol) {
  std::vector<std::map<SMono, Scalar>> rows, rows_next;
  rows.reserve(tuples.size());
  for (const auto& tup : tuples) {
    rows.push_back(windowed_product_coeffs(ctx, tup, window, pol));
    rows_next.push_back(
        windowed_product_coeffs(ctx, tup, window, TruncPolicy{pol.N + 1}));
  }
  if (rows != rows_next)
    throw saturation_error("window not saturated: policy+1 changes in-window coefficients");
  // assemble the coefficient matrix over all monomials seen
  std::map<SMono, size_t> cols;
  for (const auto& r : rows)
    for (const auto& [m, c] : r) cols.emplace(m, 0);
  size_t idx = 0;
  for (auto& [m, i] : cols) i = idx++;
  std::vector<std::vector<Scalar>> mat(tuples.size(),
                                       std::vector<Scalar>(idx, Scalar(0)));
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [m, c] : rows[r]) mat[r][cols[m]] = c;
  return matrix_rank(mat);
}

}  // namespace parhall
