#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "weilrep/common.hpp"

namespace weilrep {

namespace detail {

// Exact division of integer polynomials, requiring the divisor to be monic.
// Coefficients are low-degree-first throughout.
inline std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  if (den.empty() || den.back() != 1) throw std::invalid_argument("poly_div_exact: divisor not monic");
  if (num.size() < den.size()) throw std::invalid_argument("poly_div_exact: degree underflow");
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (std::size_t qi = quot.size(); qi-- > 0;) {
    Int c = num[qi + den.size() - 1];
    quot[qi] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::invalid_argument("poly_div_exact: nonzero remainder");
  return quot;
}

}  // namespace detail

/// Coefficients of the m-th cyclotomic polynomial, low degree first, computed
/// by dividing x^m - 1 by the product of all lower-index cyclotomic factors.
inline std::vector<Int> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
  static std::map<unsigned, std::vector<Int>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<Int> result;
  if (m == 1) {
    result = {Int(-1), Int(1)};
  } else {
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      num = detail::poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    result = std::move(num);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, result);
  return result;
}

/// Reduction context for Q(zeta_m): fixes the conductor and Phi_m so that
/// every value has a unique canonical representative in the power basis.
class CycloCtx {
 public:
  explicit CycloCtx(unsigned m) : m_(m), phi_(cyclotomic_polynomial(m)) {}

  static std::shared_ptr<const CycloCtx> make(unsigned m) {
    return std::make_shared<const CycloCtx>(m);
  }

  unsigned conductor() const { return m_; }
  unsigned degree() const { return static_cast<unsigned>(phi_.size() - 1); }
  const std::vector<Int>& phi() const { return phi_; }

  // In-place reduction of an integer polynomial modulo Phi_m (monic, so the
  // result stays integral). Truncates the vector to length degree().
  void reduce(std::vector<Int>& poly) const {
    const std::size_t deg = degree();
    for (std::size_t i = poly.size(); i-- > deg;) {
      Int c = poly[i];
      if (c != 0) {
        for (std::size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * phi_[j];
      }
      poly[i] = 0;
    }
    poly.resize(deg);
  }

 private:
  unsigned m_;
  std::vector<Int> phi_;
};

/// Element of Q(zeta_m), stored as integer coefficients over a positive common
/// denominator, fully reduced modulo Phi_m. Canonical form: den > 0 and
/// gcd(den, content(num)) = 1, so equality is component-wise.
class CycloNum {
 public:
  CycloNum() = default;

  static CycloNum zero(std::shared_ptr<const CycloCtx> ctx) {
    CycloNum r;
    r.ctx_ = std::move(ctx);
    r.num_.assign(r.ctx_->degree(), Int(0));
    r.den_ = 1;
    return r;
  }

  static CycloNum from_rational(std::shared_ptr<const CycloCtx> ctx, const Rat& q) {
    CycloNum r = zero(std::move(ctx));
    r.num_[0] = q.get_num();
    r.den_ = q.get_den();
    r.normalize();
    return r;
  }

  static CycloNum from_int(std::shared_ptr<const CycloCtx> ctx, long v) {
    return from_rational(std::move(ctx), Rat(v));
  }

  /// Canonical representative of zeta_m^e (e arbitrary, reduced mod m).
  static CycloNum root_of_unity(std::shared_ptr<const CycloCtx> ctx, long e) {
    unsigned m = ctx->conductor();
    unsigned long r = static_cast<unsigned long>(((e % static_cast<long>(m)) + m) % m);
    CycloNum out;
    out.ctx_ = std::move(ctx);
    std::vector<Int> poly(r + 1, Int(0));
    poly[r] = 1;
    if (poly.size() < out.ctx_->degree()) poly.resize(out.ctx_->degree(), Int(0));
    out.ctx_->reduce(poly);
    out.num_ = std::move(poly);
    out.den_ = 1;
    return out;
  }

  /// Builds sum_e counts[e] * zeta^e from an exponent histogram (size m).
  static CycloNum from_exponent_counts(std::shared_ptr<const CycloCtx> ctx,
                                       const std::vector<Int>& counts) {
    if (counts.size() != ctx->conductor())
      throw std::invalid_argument("from_exponent_counts: histogram size != conductor");
    std::vector<Int> poly(counts.begin(), counts.end());
    if (poly.size() < ctx->degree()) poly.resize(ctx->degree(), Int(0));
    ctx->reduce(poly);
    CycloNum out;
    out.ctx_ = std::move(ctx);
    out.num_ = std::move(poly);
    out.den_ = 1;
    return out;
  }

  const std::shared_ptr<const CycloCtx>& ctx() const { return ctx_; }
  const std::vector<Int>& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Int& c) { return c == 0; });
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0) return false;
    return true;
  }

  Rat rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: not a rational number");
    Rat q(num_.empty() ? Int(0) : num_[0], den_);
    q.canonicalize();
    return q;
  }

  /// Rational coefficient of zeta^i in the power basis.
  Rat coeff(std::size_t i) const {
    Rat q(num_.at(i), den_);
    q.canonicalize();
    return q;
  }

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    a.check_same_ctx(b);
    CycloNum r;
    r.ctx_ = a.ctx_;
    r.num_.resize(a.num_.size());
    // common denominator a.den * b.den, normalized afterwards
    for (std::size_t i = 0; i < a.num_.size(); ++i)
      r.num_[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }

  friend CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

  CycloNum operator-() const {
    CycloNum r = *this;
    for (Int& c : r.num_) c = -c;
    return r;
  }

  friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    a.check_same_ctx(b);
    const std::size_t deg = a.num_.size();
    std::vector<Int> conv(2 * deg - 1, Int(0));
    for (std::size_t i = 0; i < deg; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < deg; ++j) {
        if (b.num_[j] == 0) continue;
        mpz_addmul(conv[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
    a.ctx_->reduce(conv);
    CycloNum r;
    r.ctx_ = a.ctx_;
    r.num_ = std::move(conv);
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }

  CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    a.check_same_ctx(b);
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  CycloNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum r = from_int(ctx_, 1);
    CycloNum base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  /// Field inverse via the extended Euclidean algorithm in Q[x] against Phi_m.
  CycloNum inverse() const {
    if (is_zero()) throw std::domain_error("CycloNum::inverse: zero has no inverse");
    using Poly = std::vector<Rat>;
    auto deg_of = [](const Poly& f) -> long {
      for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<long>(i);
      return -1;
    };
    Poly r0(ctx_->phi().size());
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(ctx_->phi()[i]);
    Poly r1(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) {
      r1[i] = Rat(num_[i], den_);
      r1[i].canonicalize();
    }
    Poly s0{Rat(0)}, s1{Rat(1)};  // invariant: s_k * self = r_k (mod Phi)
    while (true) {
      long d1 = deg_of(r1);
      if (d1 < 0) throw std::domain_error("CycloNum::inverse: not invertible");
      if (d1 == 0) break;
      long d0 = deg_of(r0);
      if (d0 < d1) {
        std::swap(r0, r1);
        std::swap(s0, s1);
        continue;
      }
      Rat c = r0[d0] / r1[d1];
      long shift = d0 - d1;
      for (long j = 0; j <= d1; ++j) r0[j + shift] -= c * r1[j];
      if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, Rat(0));
      for (std::size_t j = 0; j < s1.size(); ++j) s0[j + shift] -= c * s1[j];
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
    // r1 is a nonzero constant; inverse = s1 / r1.
    Rat c = r1[deg_of(r1)];
    CycloNum out = zero(ctx_);
    Int den_lcm(1);
    for (auto& q : s1) {
      q /= c;
      q.canonicalize();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    std::vector<Int> poly(std::max<std::size_t>(s1.size(), ctx_->degree()), Int(0));
    for (std::size_t i = 0; i < s1.size(); ++i) poly[i] = s1[i].get_num() * (den_lcm / s1[i].get_den());
    ctx_->reduce(poly);
    out.num_ = std::move(poly);
    out.den_ = den_lcm;
    out.normalize();
    return out;
  }

  /// Galois automorphism zeta -> zeta^j for gcd(j, m) = 1; j = -1 is complex
  /// conjugation.
  CycloNum galois(long j) const {
    long m = static_cast<long>(ctx_->conductor());
    long jr = ((j % m) + m) % m;
    if (std::gcd(jr == 0 ? m : jr, m) != 1)
      throw std::invalid_argument("CycloNum::galois: exponent not coprime to conductor");
    std::vector<Int> poly(static_cast<std::size_t>(m), Int(0));
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      poly[(i * static_cast<std::size_t>(jr)) % static_cast<std::size_t>(m)] += num_[i];
    }
    if (poly.size() < ctx_->degree()) poly.resize(ctx_->degree(), Int(0));
    ctx_->reduce(poly);
    CycloNum r;
    r.ctx_ = ctx_;
    r.num_ = std::move(poly);
    r.den_ = den_;
    r.normalize();
    return r;
  }

  CycloNum conj() const { return galois(-1); }

  /// Value-preserving image in Q(zeta_{m'}) for m | m' (zeta_m -> zeta_{m'}^{m'/m}).
  CycloNum embed(std::shared_ptr<const CycloCtx> big) const {
    unsigned m = ctx_->conductor(), mp = big->conductor();
    if (mp % m != 0) throw std::invalid_argument("CycloNum::embed: conductor is not a multiple");
    unsigned k = mp / m;
    std::vector<Int> poly(static_cast<std::size_t>(ctx_->degree() - 1) * k + 1, Int(0));
    for (std::size_t i = 0; i < num_.size(); ++i) poly[i * k] = num_[i];
    if (poly.size() < big->degree()) poly.resize(big->degree(), Int(0));
    big->reduce(poly);
    CycloNum r;
    r.ctx_ = std::move(big);
    r.num_ = std::move(poly);
    r.den_ = den_;
    r.normalize();
    return r;
  }

  std::complex<double> to_complex() const {
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    double m = static_cast<double>(ctx_->conductor());
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      double c = Rat(num_[i], den_).get_d();
      acc += c * std::polar(1.0, two_pi * static_cast<double>(i) / m);
    }
    return acc;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("CycloNum: zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      for (Int& c : num_) c = -c;
    }
    Int g = den_;
    for (const Int& c : num_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    if (g > 1) {
      den_ /= g;
      for (Int& c : num_) c /= g;
    }
    if (is_zero()) den_ = 1;
  }

 private:
  void check_same_ctx(const CycloNum& other) const {
    if (!ctx_ || !other.ctx_ || ctx_->conductor() != other.ctx_->conductor())
      throw std::invalid_argument("CycloNum: conductor mismatch");
  }

  std::shared_ptr<const CycloCtx> ctx_;
  std::vector<Int> num_;
  Int den_{1};
};

}  // namespace weilrep
