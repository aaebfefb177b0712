#pragma once

#include <random>

#include "weilrep/fields.hpp"

namespace weilrep {

/// Element of A_n = K[x]/<x^n>: coefficient of x^i at position i, length n.
struct RingElem {
  std::vector<KElem> c;
  friend bool operator==(const RingElem&, const RingElem&) = default;
};

enum class ElemKind { All, Units, Sym, Asym, SymUnits, AsymUnits };

/// The involutive algebra A_n = K[x]/<x^n> with the second class involution
/// (Galois conjugation on coefficients, x -> -x).
class RingConfig {
 public:
  RingConfig(FieldConfig field, long n) : field_(std::move(field)), n_(n) {
    if (n < 1) throw std::invalid_argument("RingConfig: n must be >= 1");
    size_ = 1;
    uint64_t qsq = static_cast<uint64_t>(field_.q()) * static_cast<uint64_t>(field_.q());
    for (long i = 0; i < n; ++i) {
      if (size_ > (uint64_t{1} << 62) / qsq) throw resource_error("RingConfig: q^(2n) overflows the index space");
      size_ *= qsq;
    }
    // 2 is invertible since p is odd
    two_inv_ = field_.K_from_parts(field_.inv(field_.from_int(2)), field_.zero());
  }

  const FieldConfig& field() const { return field_; }
  long n() const { return n_; }
  /// |A_n| = q^(2n).
  uint64_t size() const { return size_; }
  const KElem& two_inv() const { return two_inv_; }

  RingElem zero() const { return RingElem{std::vector<KElem>(n_, field_.K_zero())}; }
  RingElem one() const { return from_K_const(field_.K_one()); }
  RingElem from_K_const(const KElem& z) const {
    RingElem r = zero();
    r.c[0] = z;
    return r;
  }
  /// The monomial z * x^i.
  RingElem monomial(const KElem& z, long i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("RingConfig::monomial: exponent out of range");
    RingElem r = zero();
    r.c[i] = z;
    return r;
  }

  bool is_zero(const RingElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [&](const KElem& z) { return field_.K_is_zero(z); });
  }

  RingElem add(const RingElem& a, const RingElem& b) const {
    RingElem r = a;
    for (long i = 0; i < n_; ++i) r.c[i] = field_.K_add(r.c[i], b.c[i]);
    return r;
  }
  RingElem sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }
  RingElem neg(const RingElem& a) const {
    RingElem r = a;
    for (long i = 0; i < n_; ++i) r.c[i] = field_.K_neg(r.c[i]);
    return r;
  }

  /// Convolution truncated at degree n-1 (x^m = 0 for m >= n).
  RingElem mul(const RingElem& a, const RingElem& b) const {
    RingElem r = zero();
    for (long i = 0; i < n_; ++i) {
      if (field_.K_is_zero(a.c[i])) continue;
      for (long j = 0; j < n_ - i; ++j)
        r.c[i + j] = field_.K_add(r.c[i + j], field_.K_mul(a.c[i], b.c[j]));
    }
    return r;
  }

  RingElem scalar_mul(const KElem& z, const RingElem& a) const {
    RingElem r = a;
    for (long i = 0; i < n_; ++i) r.c[i] = field_.K_mul(z, r.c[i]);
    return r;
  }

  /// a* = sum (-1)^i conj(a_i) x^i.
  RingElem involution(const RingElem& a) const {
    RingElem r = a;
    for (long i = 0; i < n_; ++i) {
      r.c[i] = field_.K_conj(r.c[i]);
      if (i % 2 == 1) r.c[i] = field_.K_neg(r.c[i]);
    }
    return r;
  }

  bool is_unit(const RingElem& a) const { return !field_.K_is_zero(a.c[0]); }
  bool is_symmetric(const RingElem& a) const { return involution(a) == a; }
  bool is_antisymmetric(const RingElem& a) const { return involution(a) == neg(a); }

  /// Exact inverse, computed degree by degree.
  RingElem inv(const RingElem& a) const {
    if (!is_unit(a)) throw std::domain_error("RingConfig::inv: constant term is zero (not a unit)");
    RingElem b = zero();
    b.c[0] = field_.K_inv(a.c[0]);
    for (long i = 1; i < n_; ++i) {
      KElem s = field_.K_zero();
      for (long j = 1; j <= i; ++j) s = field_.K_add(s, field_.K_mul(a.c[j], b.c[i - j]));
      b.c[i] = field_.K_neg(field_.K_mul(b.c[0], s));
    }
    return b;
  }

  /// Division by 2 (p odd).
  RingElem halve(const RingElem& a) const { return scalar_mul(two_inv_, a); }

  // --- bit-exact indexing: mixed radix, coeff of x^0 least significant,
  // within K re before im, within F_q the e_1 digit least significant ---

  uint64_t index_of(const RingElem& a) const {
    uint64_t qsq = static_cast<uint64_t>(field_.q()) * static_cast<uint64_t>(field_.q());
    uint64_t v = 0;
    for (long i = n_ - 1; i >= 0; --i) v = v * qsq + field_.K_index(a.c[i]);
    return v;
  }

  RingElem elem_at(uint64_t idx) const {
    if (idx >= size_) throw std::out_of_range("RingConfig::elem_at: index out of range");
    uint64_t qsq = static_cast<uint64_t>(field_.q()) * static_cast<uint64_t>(field_.q());
    RingElem r = zero();
    for (long i = 0; i < n_; ++i) {
      r.c[i] = field_.K_element(idx % qsq);
      idx /= qsq;
    }
    return r;
  }

  std::vector<RingElem> enumerate(ElemKind kind = ElemKind::All) const {
    std::vector<RingElem> out;
    for (uint64_t i = 0; i < size_; ++i) {
      RingElem a = elem_at(i);
      bool keep = true;
      switch (kind) {
        case ElemKind::All: break;
        case ElemKind::Units: keep = is_unit(a); break;
        case ElemKind::Sym: keep = is_symmetric(a); break;
        case ElemKind::Asym: keep = is_antisymmetric(a); break;
        case ElemKind::SymUnits: keep = is_symmetric(a) && is_unit(a); break;
        case ElemKind::AsymUnits: keep = is_antisymmetric(a) && is_unit(a); break;
      }
      if (keep) out.push_back(std::move(a));
    }
    return out;
  }

  /// |A_n^x| = (q^2-1) q^(2(n-1)).
  Int unit_count() const {
    Int q(field_.q());
    return (q * q - 1) * int_pow(q, static_cast<unsigned long>(2 * (n_ - 1)));
  }
  /// |A_n^sym| = |A_n^asym| = q^n.
  Int sym_count() const { return int_pow(Int(field_.q()), static_cast<unsigned long>(n_)); }

  // --- seeded samplers for property tests and sampled verification ---

  RingElem random_elem(std::mt19937_64& rng) const {
    std::uniform_int_distribution<uint64_t> dist(0, size_ - 1);
    return elem_at(dist(rng));
  }
  RingElem random_unit(std::mt19937_64& rng) const {
    for (;;) {
      RingElem a = random_elem(rng);
      if (is_unit(a)) return a;
    }
  }
  /// Uniform antisymmetric element: even-degree coefficients in Delta*k,
  /// odd-degree coefficients in k.
  RingElem random_antisym(std::mt19937_64& rng) const {
    std::uniform_int_distribution<uint64_t> dist(0, static_cast<uint64_t>(field_.q()) - 1);
    RingElem r = zero();
    for (long i = 0; i < n_; ++i) {
      FqElem part = field_.fq_element(dist(rng));
      r.c[i] = (i % 2 == 0) ? field_.K_from_parts(field_.zero(), part)
                            : field_.K_from_parts(part, field_.zero());
    }
    return r;
  }
  RingElem random_antisym_unit(std::mt19937_64& rng) const {
    for (;;) {
      RingElem a = random_antisym(rng);
      if (is_unit(a)) return a;
    }
  }

 private:
  FieldConfig field_;
  long n_;
  uint64_t size_;
  KElem two_inv_;
};

}  // namespace weilrep
