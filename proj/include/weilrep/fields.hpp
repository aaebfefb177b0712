#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "weilrep/scalars.hpp"

namespace weilrep {

/// Element of k = F_q, as coordinates in the power basis 1, y, ..., y^{t-1}.
struct FqElem {
  std::vector<int32_t> d;
  friend bool operator==(const FqElem&, const FqElem&) = default;
};

/// Element re + im*Delta of K = k(Delta).
struct KElem {
  FqElem re, im;
  friend bool operator==(const KElem&, const KElem&) = default;
};

namespace detail {

// F_p[y] helpers on low-degree-first coefficient vectors.
inline std::vector<int32_t> fp_poly_mulmod(const std::vector<int32_t>& a,
                                           const std::vector<int32_t>& b,
                                           const std::vector<int32_t>& mod, long p) {
  std::vector<long> conv(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] = (conv[i + j] + long(a[i]) * b[j]) % p;
  }
  const std::size_t t = mod.size() - 1;
  for (std::size_t i = conv.size(); i-- > t;) {
    long c = conv[i] % p;
    if (c) {
      for (std::size_t j = 0; j < t; ++j) conv[i - t + j] = ((conv[i - t + j] - c * mod[j]) % p + p) % p;
    }
    conv[i] = 0;
  }
  std::vector<int32_t> out(t);
  for (std::size_t i = 0; i < t; ++i) out[i] = static_cast<int32_t>(((conv[i] % p) + p) % p);
  return out;
}

inline std::vector<int32_t> fp_poly_powmod(std::vector<int32_t> base, Int e,
                                           const std::vector<int32_t>& mod, long p) {
  std::vector<int32_t> r(mod.size() - 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_poly_mulmod(r, base, mod, p);
    base = fp_poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

inline long fp_poly_deg(const std::vector<int32_t>& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i]) return static_cast<long>(i);
  return -1;
}

inline std::vector<int32_t> fp_poly_gcd(std::vector<int32_t> a, std::vector<int32_t> b, long p) {
  auto inv_mod_p = [p](long x) {
    long r = 1, base = ((x % p) + p) % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (fp_poly_deg(b) >= 0) {
    long db = fp_poly_deg(b);
    long lead_inv = inv_mod_p(b[db]);
    while (fp_poly_deg(a) >= db) {
      long da = fp_poly_deg(a);
      long c = a[da] * lead_inv % p;
      for (long j = 0; j <= db; ++j)
        a[da - db + j] = ((a[da - db + j] - c * b[j]) % p + p) % p;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility test for a monic polynomial of degree t over F_p.
inline bool fp_poly_irreducible(const std::vector<int32_t>& f, long p) {
  long t = static_cast<long>(f.size()) - 1;
  if (t < 1 || f[t] != 1) return false;
  std::vector<int32_t> x(t, 0);
  if (t == 1) return true;
  x[1] = 1;
  // x^(p^t) == x mod f
  std::vector<int32_t> xpow = fp_poly_powmod(x, int_pow(Int(p), static_cast<unsigned long>(t)), f, p);
  if (xpow != x) return false;
  // gcd(x^(p^(t/r)) - x, f) == 1 for every prime r | t
  for (long r = 2; r <= t; ++r) {
    if (t % r != 0) continue;
    bool prime = true;
    for (long s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    std::vector<int32_t> g = fp_poly_powmod(x, int_pow(Int(p), static_cast<unsigned long>(t / r)), f, p);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<int32_t>(((g[i] - x[i]) % p + p) % p);
    if (fp_poly_deg(fp_poly_gcd(g, f, p)) != 0) return false;
  }
  return true;
}

}  // namespace detail

/// The tower F_p < k = F_q < K = k(Delta), with Delta^2 = delta a nonsquare of
/// k. Defaults are deterministic: the lexicographically smallest monic
/// irreducible modulus and the smallest nonsquare delta in index order.
class FieldConfig {
 public:
  FieldConfig(long p, long t, std::optional<std::vector<int32_t>> modulus = std::nullopt,
              std::optional<FqElem> delta_sq = std::nullopt)
      : p_(p), t_(t) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("FieldConfig: p must be an odd prime");
    if (t < 1) throw std::invalid_argument("FieldConfig: t must be >= 1");
    q_ = 1;
    for (long i = 0; i < t; ++i) {
      if (q_ > (1LL << 40)) throw resource_error("FieldConfig: q too large");
      q_ *= p;
    }
    mod_ = modulus ? normalize_modulus(*modulus) : smallest_irreducible();
    if (!detail::fp_poly_irreducible(mod_, p_))
      throw std::invalid_argument("FieldConfig: modulus is reducible");
    delta_ = delta_sq ? *delta_sq : smallest_nonsquare();
    validate_digits(delta_);
    if (is_zero(delta_) || is_square(delta_))
      throw std::invalid_argument("FieldConfig: delta_sq must be a nonsquare");
    ctx_p_ = CycloCtx::make(static_cast<unsigned>(p_));
  }

  long p() const { return p_; }
  long t() const { return t_; }
  long q() const { return q_; }
  const std::vector<int32_t>& modulus() const { return mod_; }
  const FqElem& delta_sq() const { return delta_; }
  const std::shared_ptr<const CycloCtx>& ctx_p() const { return ctx_p_; }

  // --- k = F_q arithmetic ---

  FqElem zero() const { return FqElem{std::vector<int32_t>(t_, 0)}; }
  FqElem one() const { return from_int(1); }
  FqElem from_int(long v) const {
    FqElem e = zero();
    e.d[0] = static_cast<int32_t>(((v % p_) + p_) % p_);
    return e;
  }

  bool is_zero(const FqElem& a) const {
    return std::all_of(a.d.begin(), a.d.end(), [](int32_t x) { return x == 0; });
  }

  FqElem add(const FqElem& a, const FqElem& b) const {
    FqElem r = a;
    for (long i = 0; i < t_; ++i) r.d[i] = static_cast<int32_t>((r.d[i] + b.d[i]) % p_);
    return r;
  }
  FqElem sub(const FqElem& a, const FqElem& b) const { return add(a, neg(b)); }
  FqElem neg(const FqElem& a) const {
    FqElem r = a;
    for (long i = 0; i < t_; ++i) r.d[i] = static_cast<int32_t>((p_ - r.d[i]) % p_);
    return r;
  }
  FqElem mul(const FqElem& a, const FqElem& b) const {
    return FqElem{detail::fp_poly_mulmod(a.d, b.d, mod_, p_)};
  }
  FqElem scalar_mul(long c, const FqElem& a) const {
    long cr = ((c % p_) + p_) % p_;
    FqElem r = a;
    for (long i = 0; i < t_; ++i) r.d[i] = static_cast<int32_t>((r.d[i] * cr) % p_);
    return r;
  }
  FqElem pow(const FqElem& a, Int e) const {
    if (e < 0) return pow(inv(a), -e);
    return FqElem{detail::fp_poly_powmod(a.d, e, mod_, p_)};
  }
  FqElem inv(const FqElem& a) const {
    if (is_zero(a)) throw std::domain_error("FieldConfig::inv: zero is not invertible");
    return pow(a, Int(q_ - 2));
  }

  bool is_square(const FqElem& a) const {
    if (is_zero(a)) return true;
    return pow(a, Int((q_ - 1) / 2)) == one();
  }

  /// Absolute trace Tr_{k/F_p}: trace of the multiplication-by-a matrix in the
  /// power basis, as a residue in [0, p).
  long trace(const FqElem& a) const {
    long tr = 0;
    FqElem basis = one();
    for (long i = 0; i < t_; ++i) {
      FqElem prod = mul(a, basis);
      tr = (tr + prod.d[i]) % p_;
      // shift basis: multiply by y
      std::vector<int32_t> shifted(t_ + 1, 0);
      for (long j = 0; j < t_; ++j) shifted[j + 1] = basis.d[j];
      basis = FqElem{detail::fp_poly_mulmod(shifted, one().d, mod_, p_)};
    }
    return tr;
  }

  /// Mixed-radix value of the digit vector; the element order used everywhere
  /// a "smallest" element is requested.
  uint64_t fq_index(const FqElem& a) const {
    uint64_t v = 0;
    for (long i = t_ - 1; i >= 0; --i) v = v * static_cast<uint64_t>(p_) + static_cast<uint64_t>(a.d[i]);
    return v;
  }
  FqElem fq_element(uint64_t idx) const {
    FqElem e = zero();
    for (long i = 0; i < t_; ++i) {
      e.d[i] = static_cast<int32_t>(idx % static_cast<uint64_t>(p_));
      idx /= static_cast<uint64_t>(p_);
    }
    if (idx != 0) throw std::out_of_range("fq_element: index out of range");
    return e;
  }
  std::vector<FqElem> enumerate_fq() const {
    std::vector<FqElem> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (uint64_t i = 0; i < static_cast<uint64_t>(q_); ++i) out.push_back(fq_element(i));
    return out;
  }

  // --- K = k(Delta) arithmetic ---

  KElem K_zero() const { return KElem{zero(), zero()}; }
  KElem K_one() const { return KElem{one(), zero()}; }
  KElem K_delta() const { return KElem{zero(), one()}; }
  KElem K_from_parts(FqElem re, FqElem im) const { return KElem{std::move(re), std::move(im)}; }

  bool K_is_zero(const KElem& z) const { return is_zero(z.re) && is_zero(z.im); }

  KElem K_add(const KElem& a, const KElem& b) const {
    return KElem{add(a.re, b.re), add(a.im, b.im)};
  }
  KElem K_sub(const KElem& a, const KElem& b) const {
    return KElem{sub(a.re, b.re), sub(a.im, b.im)};
  }
  KElem K_neg(const KElem& a) const { return KElem{neg(a.re), neg(a.im)}; }
  KElem K_mul(const KElem& a, const KElem& b) const {
    // (x + yD)(u + vD) = xu + yv*delta + (xv + yu)D
    return KElem{add(mul(a.re, b.re), mul(delta_, mul(a.im, b.im))),
                 add(mul(a.re, b.im), mul(a.im, b.re))};
  }
  KElem K_conj(const KElem& a) const { return KElem{a.re, neg(a.im)}; }
  FqElem K_norm(const KElem& a) const {
    return sub(mul(a.re, a.re), mul(delta_, mul(a.im, a.im)));
  }
  KElem K_inv(const KElem& a) const {
    FqElem n = K_norm(a);
    if (is_zero(n)) throw std::domain_error("FieldConfig::K_inv: zero is not invertible");
    FqElem ni = inv(n);
    return KElem{mul(a.re, ni), neg(mul(a.im, ni))};
  }
  KElem K_scalar_mul(long c, const KElem& a) const {
    return KElem{scalar_mul(c, a.re), scalar_mul(c, a.im)};
  }

  uint64_t K_index(const KElem& z) const {
    return fq_index(z.re) + static_cast<uint64_t>(q_) * fq_index(z.im);
  }
  KElem K_element(uint64_t idx) const {
    uint64_t qv = static_cast<uint64_t>(q_);
    if (idx >= qv * qv) throw std::out_of_range("K_element: index out of range");
    return KElem{fq_element(idx % qv), fq_element(idx / qv)};
  }
  std::vector<KElem> enumerate_K() const {
    std::vector<KElem> out;
    uint64_t sz = static_cast<uint64_t>(q_) * static_cast<uint64_t>(q_);
    out.reserve(sz);
    for (uint64_t i = 0; i < sz; ++i) out.push_back(K_element(i));
    return out;
  }

  // --- additive characters of K, all with values in Q(zeta_p) ---

  /// psi0(a + bD) = zeta_p^{Tr(a+b)}: nontrivial on k and on Delta*k.
  long psi0_exp(const KElem& z) const { return trace(add(z.re, z.im)); }
  /// zeta_p^{Tr(Re z)}: nontrivial on k, trivial on Delta*k.
  long psi0_re_exp(const KElem& z) const { return trace(z.re); }
  /// zeta_p^{Tr(Im z)}: trivial on k, nontrivial on Delta*k.
  long psi0_im_exp(const KElem& z) const { return trace(z.im); }

  CycloNum psi0(const KElem& z) const { return CycloNum::root_of_unity(ctx_p_, psi0_exp(z)); }
  CycloNum psi0_re(const KElem& z) const { return CycloNum::root_of_unity(ctx_p_, psi0_re_exp(z)); }
  CycloNum psi0_im(const KElem& z) const { return CycloNum::root_of_unity(ctx_p_, psi0_im_exp(z)); }

  /// Exhaustive sum of psi0(N_{K/k}(lambda z)) over z in K: q^2 for lambda = 0
  /// and -q otherwise.
  CycloNum norm_character_sum(const FqElem& lambda) const {
    std::vector<Int> counts(static_cast<std::size_t>(p_), Int(0));
    uint64_t sz = static_cast<uint64_t>(q_) * static_cast<uint64_t>(q_);
    for (uint64_t i = 0; i < sz; ++i) {
      KElem z = K_element(i);
      KElem lz = K_mul(KElem{lambda, zero()}, z);
      FqElem nrm = K_norm(lz);
      counts[static_cast<std::size_t>(psi0_exp(KElem{nrm, zero()}))] += 1;
    }
    return CycloNum::from_exponent_counts(ctx_p_, counts);
  }

 private:
  static bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  std::vector<int32_t> normalize_modulus(std::vector<int32_t> m) const {
    if (static_cast<long>(m.size()) != t_ + 1)
      throw std::invalid_argument("FieldConfig: modulus must have degree t");
    for (auto& c : m) c = static_cast<int32_t>(((c % p_) + p_) % p_);
    if (m.back() != 1) throw std::invalid_argument("FieldConfig: modulus must be monic");
    return m;
  }

  std::vector<int32_t> smallest_irreducible() const {
    // Scan monic degree-t polynomials in lexicographic order of the
    // low-degree-first digit vector.
    std::vector<int32_t> f(t_ + 1, 0);
    f[t_] = 1;
    uint64_t total = 1;
    for (long i = 0; i < t_; ++i) total *= static_cast<uint64_t>(p_);
    for (uint64_t v = 0; v < total; ++v) {
      uint64_t x = v;
      for (long i = 0; i < t_; ++i) {
        f[i] = static_cast<int32_t>(x % static_cast<uint64_t>(p_));
        x /= static_cast<uint64_t>(p_);
      }
      if (detail::fp_poly_irreducible(f, p_)) return f;
    }
    throw std::logic_error("smallest_irreducible: none found");
  }

  FqElem smallest_nonsquare() const {
    for (uint64_t i = 1; i < static_cast<uint64_t>(q_); ++i) {
      FqElem c = fq_element(i);
      if (!is_square(c)) return c;
    }
    throw std::logic_error("smallest_nonsquare: none found");
  }

  void validate_digits(const FqElem& e) const {
    if (static_cast<long>(e.d.size()) != t_)
      throw std::invalid_argument("FieldConfig: element has wrong digit count");
    for (int32_t c : e.d)
      if (c < 0 || c >= p_) throw std::invalid_argument("FieldConfig: digit out of range");
  }

  long p_, t_, q_;
  std::vector<int32_t> mod_;
  FqElem delta_;
  std::shared_ptr<const CycloCtx> ctx_p_;
};

}  // namespace weilrep
