#include "parhall/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace parhall {

void VPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

VPoly VPoly::monomial(const Int& k, int deg) {
  VPoly p;
  if (k == 0) return p;
  p.c.assign(deg + 1, Int(0));
  p.c[deg] = k;
  return p;
}

VPoly operator+(const VPoly& a, const VPoly& b) {
  VPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

VPoly operator-(const VPoly& a, const VPoly& b) {
  VPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
  VPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

VPoly VPoly::operator-() const {
  VPoly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Int VPoly::content() const {
  Int g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

VPoly VPoly::primitive() const {
  if (is_zero()) return *this;
  Int g = content();
  VPoly r = *this;
  for (auto& x : r.c) x /= g;
  return r;
}

VPoly VPoly::divexact(const VPoly& d) const {
  if (d.is_zero()) throw input_error("polynomial division by zero");
  VPoly rem = *this, q;
  if (rem.is_zero()) return q;
  if (rem.degree() < d.degree()) throw input_error("inexact polynomial division");
  q.c.assign(rem.degree() - d.degree() + 1, Int(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    Int qr, r0;
    mpz_tdiv_qr(qr.get_mpz_t(), r0.get_mpz_t(), rem.lc().get_mpz_t(),
                d.lc().get_mpz_t());
    if (r0 != 0) throw input_error("inexact polynomial division");
    int shift = rem.degree() - d.degree();
    q.c[shift] = qr;
    for (size_t i = 0; i < d.c.size(); ++i) rem.c[i + shift] -= qr * d.c[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw input_error("inexact polynomial division");
  q.trim();
  return q;
}

// pseudo-remainder of a by b (b nonzero, deg a >= deg b)
static VPoly prem(VPoly a, const VPoly& b) {
  int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    int shift = a.degree() - db;
    Int la = a.lc();
    for (auto& x : a.c) x *= b.lc();
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= la * b.c[i];
    a.trim();
  }
  return a;
}

VPoly vpoly_gcd(VPoly a, VPoly b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive();
  if (b.is_zero()) return a.primitive();
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    VPoly r = prem(a, b).primitive();
    a = b;
    b = r;
  }
  if (a.lc() < 0) a = -a;
  return a;
}

Scalar::Scalar(const Rat& q) {
  num_ = VPoly(Int(q.get_num()));
  den_ = VPoly(Int(q.get_den()));
}

Scalar::Scalar(VPoly n, VPoly d) : num_(std::move(n)), den_(std::move(d)) {
  reduce();
}

void Scalar::reduce() {
  if (den_.is_zero()) throw input_error("scalar with zero denominator");
  if (num_.is_zero()) {
    den_ = VPoly(Int(1));
    return;
  }
  VPoly g = vpoly_gcd(num_, den_);
  if (g.degree() > 0 || g.c[0] != 1) {
    // polynomial part first, then shared integer content
    VPoly gp = g;
    num_ = num_.divexact(gp);
    den_ = den_.divexact(gp);
  }
  Int cn = num_.content(), cd = den_.content(), ci;
  mpz_gcd(ci.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (ci > 1) {
    for (auto& x : num_.c) x /= ci;
    for (auto& x : den_.c) x /= ci;
  }
  if (den_.lc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::v_pow(int k) {
  if (k >= 0) return Scalar(VPoly::monomial(Int(1), k), VPoly(Int(1)));
  return Scalar(VPoly(Int(1)), VPoly::monomial(Int(1), -k));
}

Scalar Scalar::q_int(int d) {
  if (d < 0) throw input_error("[d] needs d >= 0");
  // (v^-d - v^d)/(v^-1 - v) = v^{1-d} (1 - v^{2d}) / (1 - v^2)
  Scalar s = 0;
  for (int i = 0; i < d; ++i) s += v_pow(-(d - 1) + 2 * i);
  return s;
}

bool Scalar::is_one() const {
  return num_.c.size() == 1 && num_.c[0] == 1 && den_.c.size() == 1 &&
         den_.c[0] == 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw input_error("scalar division by zero");
  return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw input_error("inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
  if (k == 0) return Scalar(1);
  Scalar base = k > 0 ? *this : inv();
  int e = k > 0 ? k : -k;
  Scalar r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

static Rat eval_even(const VPoly& p, const Rat& u) {
  // value of p(v) with v^2 = u; throws if an odd coefficient is nonzero
  Rat acc = 0, up = 1;
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (i % 2 == 1) {
      if (p.c[i] != 0) throw input_error("odd power of v under l-evaluation");
      continue;
    }
    if (i > 0 && i % 2 == 0) up *= u;
    if (i == 0) up = 1;
    acc += Rat(p.c[i]) * up;
  }
  return acc;
}

Rat Scalar::eval_at_l(const Rat& l) const {
  if (l == 0) throw input_error("field size 0");
  Rat u = Rat(1) / l;  // v^2
  Rat dn = eval_even(den_, u);
  if (dn == 0) throw pole_error("denominator vanishes at given l");
  return eval_even(num_, u) / dn;
}

static std::pair<Rat, Rat> eval_quad_poly(const VPoly& p, const Rat& u) {
  Rat a = 0, b = 0, up = 1;
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (i > 0 && i % 2 == 0) up *= u;
    if (i % 2 == 0)
      a += Rat(p.c[i]) * up;
    else
      b += Rat(p.c[i]) * up;  // v^{2k+1} = u^k v
  }
  return {a, b};
}

std::pair<Rat, Rat> Scalar::eval_quadratic(const Rat& l) const {
  if (l <= 0) throw input_error("field size must be positive");
  Rat u = Rat(1) / l;
  auto [na, nb] = eval_quad_poly(num_, u);
  auto [da, db] = eval_quad_poly(den_, u);
  // (na + nb v)/(da + db v) with v^2 = u
  Rat norm = da * da - db * db * u;
  if (norm == 0) throw pole_error("denominator vanishes in Q(sqrt(1/l))");
  Rat a = (na * da - nb * db * u) / norm;
  Rat b = (nb * da - na * db) / norm;
  return {a, b};
}

std::string vpoly_str(const VPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    Int a = p.c[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) {
      os << "v";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::string Scalar::str() const {
  if (den_.c.size() == 1 && den_.c[0] == 1) return vpoly_str(num_);
  return "(" + vpoly_str(num_) + ")/(" + vpoly_str(den_) + ")";
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  explicit Parser(const std::string& str) : s(str) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  Int integer() {
    skip();
    size_t j = i;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) throw input_error("expected integer in scalar literal");
    Int r(s.substr(i, k - i));
    i = k;
    return r;
  }

  // sum of terms: [sign] [int] [v [^ exp]]
  VPoly poly() {
    VPoly acc;
    bool lead = true;
    for (;;) {
      skip();
      int sign = 1;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!lead) {
        break;
      }
      skip();
      Int coef(1);
      bool have_coef = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = integer();
        have_coef = true;
      }
      int deg = 0;
      skip();
      if (i < s.size() && s[i] == 'v') {
        ++i;
        deg = 1;
        if (eat('^')) deg = static_cast<int>(integer().get_si());
      } else if (!have_coef) {
        throw input_error("expected term in scalar literal");
      }
      acc = acc + VPoly::monomial(sign * coef, deg);
      lead = false;
      skip();
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
    }
    return acc;
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  std::string s = text;
  Parser p(s);
  p.skip();
  VPoly num, den(Int(1));
  if (p.eat('(')) {
    num = p.poly();
    if (!p.eat(')')) throw input_error("unbalanced '(' in scalar literal");
    if (p.eat('/')) {
      if (!p.eat('(')) throw input_error("expected '(' after '/'");
      den = p.poly();
      if (!p.eat(')')) throw input_error("unbalanced '(' in scalar literal");
    }
  } else {
    num = p.poly();
    if (p.eat('/')) {
      // plain rational like -1/2
      den = VPoly(p.integer());
    }
  }
  p.skip();
  if (p.i != s.size()) throw input_error("trailing junk in scalar literal: " + text);
  return Scalar(std::move(num), std::move(den));
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  auto cmp = [](const VPoly& x, const VPoly& y) {
    if (x.c.size() != y.c.size()) return x.c.size() < y.c.size() ? -1 : 1;
    for (size_t i = 0; i < x.c.size(); ++i)
      if (x.c[i] != y.c[i]) return x.c[i] < y.c[i] ? -1 : 1;
    return 0;
  };
  int c = cmp(a.num(), b.num());
  if (c != 0) return c < 0;
  return cmp(a.den(), b.den()) < 0;
}

}  // namespace parhall
