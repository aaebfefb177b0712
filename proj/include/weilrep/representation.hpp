#pragma once

#include "weilrep/weil_data.hpp"

namespace weilrep {

/// Linear operator on the q^2n-dimensional function space C^{A_n}, acting on
/// column vectors indexed by RingConfig::index_of. Two storage forms:
///   Monomial: e_src -> scal[src] * e_{perm[src]}   (covers diagonals, alpha=1
///             permutations, and their products)
///   Dense:    integer coefficient matrix over a single positive denominator,
///             entries reduced modulo Phi_m. Canonical after each product, so
///             equality is component-wise.
class Operator {
 public:
  enum class Form { Monomial, Dense };

  static Operator identity(std::shared_ptr<const CycloCtx> ctx, uint32_t dim) {
    Operator op;
    op.form_ = Form::Monomial;
    op.ctx_ = std::move(ctx);
    op.dim_ = dim;
    op.perm_.resize(dim);
    for (uint32_t i = 0; i < dim; ++i) op.perm_[i] = i;
    op.scal_.assign(dim, CycloNum::from_int(op.ctx_, 1));
    return op;
  }

  static Operator monomial(std::shared_ptr<const CycloCtx> ctx, std::vector<uint32_t> perm,
                           std::vector<CycloNum> scal) {
    Operator op;
    op.form_ = Form::Monomial;
    op.ctx_ = std::move(ctx);
    op.dim_ = static_cast<uint32_t>(perm.size());
    if (scal.size() != perm.size()) throw std::invalid_argument("Operator::monomial: size mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (uint32_t dst : perm) {
      if (dst >= perm.size() || seen[dst]) throw std::invalid_argument("Operator::monomial: not a permutation");
      seen[dst] = true;
    }
    op.perm_ = std::move(perm);
    op.scal_ = std::move(scal);
    return op;
  }

  static Operator diagonal(std::shared_ptr<const CycloCtx> ctx, std::vector<CycloNum> entries) {
    std::vector<uint32_t> perm(entries.size());
    for (uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    return monomial(std::move(ctx), std::move(perm), std::move(entries));
  }

  /// Dense zero matrix with denominator 1.
  static Operator dense_zero(std::shared_ptr<const CycloCtx> ctx, uint32_t dim) {
    Operator op;
    op.form_ = Form::Dense;
    op.ctx_ = std::move(ctx);
    op.dim_ = dim;
    op.num_.assign(static_cast<std::size_t>(dim) * dim * op.ctx_->degree(), Int(0));
    op.den_ = 1;
    return op;
  }

  Form form() const { return form_; }
  uint32_t dim() const { return dim_; }
  const std::shared_ptr<const CycloCtx>& ctx() const { return ctx_; }
  bool is_monomial() const { return form_ == Form::Monomial; }
  const std::vector<uint32_t>& perm() const { return perm_; }
  const std::vector<CycloNum>& scalars() const { return scal_; }
  const Int& den() const { return den_; }

  /// Mutable access to the numerator polynomial of a dense entry.
  Int* entry_num(uint32_t row, uint32_t col) {
    return num_.data() + (static_cast<std::size_t>(row) * dim_ + col) * ctx_->degree();
  }
  const Int* entry_num(uint32_t row, uint32_t col) const {
    return num_.data() + (static_cast<std::size_t>(row) * dim_ + col) * ctx_->degree();
  }
  void set_den(Int d) {
    den_ = std::move(d);
    canonicalize();
  }

  CycloNum entry(uint32_t row, uint32_t col) const {
    if (form_ == Form::Monomial) {
      if (perm_[col] == row) return scal_[col];
      return CycloNum::zero(ctx_);
    }
    const unsigned deg = ctx_->degree();
    const Int* e = entry_num(row, col);
    CycloNum acc = CycloNum::zero(ctx_);
    CycloNum base = CycloNum::from_int(ctx_, 1);
    for (unsigned i = 0; i < deg; ++i) {
      if (e[i] != 0) {
        Rat q(e[i], den_);
        q.canonicalize();
        acc += CycloNum::from_rational(ctx_, q) * CycloNum::root_of_unity(ctx_, static_cast<long>(i));
      }
    }
    return acc;
  }

  Operator to_dense() const {
    if (form_ == Form::Dense) return *this;
    Operator out = dense_zero(ctx_, dim_);
    const unsigned deg = ctx_->degree();
    Int den_lcm(1);
    for (uint32_t src = 0; src < dim_; ++src)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), scal_[src].den().get_mpz_t());
    for (uint32_t src = 0; src < dim_; ++src) {
      Int scale = den_lcm / scal_[src].den();
      Int* e = out.entry_num(perm_[src], src);
      for (unsigned i = 0; i < deg; ++i) e[i] = scal_[src].num()[i] * scale;
    }
    out.den_ = den_lcm;
    out.canonicalize();
    return out;
  }

  friend Operator operator*(const Operator& A, const Operator& B) {
    if (A.dim_ != B.dim_) throw std::invalid_argument("Operator product: dimension mismatch");
    if (A.ctx_->conductor() != B.ctx_->conductor())
      throw std::invalid_argument("Operator product: conductor mismatch");
    if (A.form_ == Form::Monomial && B.form_ == Form::Monomial) {
      // (A o B)(e_s) = B.scal[s] * A.scal[B.perm[s]] * e_{A.perm[B.perm[s]]}
      std::vector<uint32_t> perm(A.dim_);
      std::vector<CycloNum> scal(A.dim_);
      for (uint32_t s = 0; s < A.dim_; ++s) {
        uint32_t mid = B.perm_[s];
        perm[s] = A.perm_[mid];
        scal[s] = B.scal_[s] * A.scal_[mid];
      }
      return monomial(A.ctx_, std::move(perm), std::move(scal));
    }
    if (A.form_ == Form::Monomial) return A.mono_times_dense(B);
    if (B.form_ == Form::Monomial) return A.dense_times_mono(B);
    return A.dense_times_dense(B);
  }

  friend bool operator==(const Operator& A, const Operator& B) {
    if (A.dim_ != B.dim_ || A.ctx_->conductor() != B.ctx_->conductor()) return false;
    if (A.form_ == Form::Monomial && B.form_ == Form::Monomial)
      return A.perm_ == B.perm_ && A.scal_ == B.scal_;
    if (A.form_ == Form::Monomial) return A.to_dense() == B;
    if (B.form_ == Form::Monomial) return A == B.to_dense();
    return A.den_ == B.den_ && A.num_ == B.num_;
  }
  friend bool operator!=(const Operator& A, const Operator& B) { return !(A == B); }

  /// Entry-wise complex conjugation composed with transposition; the adjoint
  /// for root-of-unity-valued matrices.
  Operator conjugate_transpose() const {
    if (form_ == Form::Monomial) {
      // adjoint of e_s -> c_s e_{p(s)} is e_{p(s)} -> conj(c_s) e_s
      std::vector<uint32_t> perm(dim_);
      std::vector<CycloNum> scal(dim_, CycloNum::zero(ctx_));
      for (uint32_t s = 0; s < dim_; ++s) {
        perm[perm_[s]] = s;
        scal[perm_[s]] = scal_[s].conj();
      }
      return monomial(ctx_, std::move(perm), std::move(scal));
    }
    Operator out = dense_zero(ctx_, dim_);
    const unsigned deg = ctx_->degree();
    const unsigned m = ctx_->conductor();
    std::vector<Int> poly(m);
    for (uint32_t r = 0; r < dim_; ++r) {
      for (uint32_t c = 0; c < dim_; ++c) {
        const Int* src = entry_num(r, c);
        std::fill(poly.begin(), poly.end(), Int(0));
        for (unsigned i = 0; i < deg; ++i) {
          if (src[i] != 0) poly[(m - i) % m] += src[i];
        }
        std::vector<Int> reduced = poly;
        if (reduced.size() < deg) reduced.resize(deg, Int(0));
        ctx_->reduce(reduced);
        Int* dst = out.entry_num(c, r);
        for (unsigned i = 0; i < deg; ++i) dst[i] = reduced[i];
      }
    }
    out.den_ = den_;
    out.canonicalize();
    return out;
  }

  /// Value-preserving lift to a larger conductor (m | m').
  Operator embed(std::shared_ptr<const CycloCtx> big) const {
    const unsigned m = ctx_->conductor();
    const unsigned mp = big->conductor();
    if (mp % m != 0) throw std::invalid_argument("Operator::embed: conductor is not a multiple");
    if (form_ == Form::Monomial) {
      std::vector<CycloNum> scal;
      scal.reserve(dim_);
      for (const CycloNum& s : scal_) scal.push_back(s.embed(big));
      return monomial(std::move(big), perm_, std::move(scal));
    }
    const unsigned k = mp / m;
    const unsigned deg = ctx_->degree();
    Operator out = dense_zero(big, dim_);
    std::vector<Int> poly;
    for (uint32_t r = 0; r < dim_; ++r) {
      for (uint32_t c = 0; c < dim_; ++c) {
        const Int* src = entry_num(r, c);
        poly.assign(static_cast<std::size_t>(deg - 1) * k + 1, Int(0));
        for (unsigned i = 0; i < deg; ++i) poly[i * k] = src[i];
        if (poly.size() < big->degree()) poly.resize(big->degree(), Int(0));
        big->reduce(poly);
        Int* dst = out.entry_num(r, c);
        for (unsigned i = 0; i < big->degree(); ++i) dst[i] = poly[i];
      }
    }
    out.den_ = den_;
    out.canonicalize();
    return out;
  }

  CycloNum trace() const {
    CycloNum acc = CycloNum::zero(ctx_);
    if (form_ == Form::Monomial) {
      for (uint32_t s = 0; s < dim_; ++s)
        if (perm_[s] == s) acc += scal_[s];
      return acc;
    }
    for (uint32_t i = 0; i < dim_; ++i) acc += entry(i, i);
    return acc;
  }

  std::vector<CycloNum> apply(const std::vector<CycloNum>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("Operator::apply: dimension mismatch");
    std::vector<CycloNum> out(dim_, CycloNum::zero(ctx_));
    if (form_ == Form::Monomial) {
      for (uint32_t s = 0; s < dim_; ++s) out[perm_[s]] = scal_[s] * v[s];
      return out;
    }
    for (uint32_t r = 0; r < dim_; ++r) {
      for (uint32_t c = 0; c < dim_; ++c) {
        if (v[c].is_zero()) continue;
        out[r] += entry(r, c) * v[c];
      }
    }
    return out;
  }

  void canonicalize() {
    if (form_ != Form::Dense) return;
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
  }

 private:
  Operator mono_times_dense(const Operator& B) const {
    // (A o B): row r of B moves to row perm[r], scaled by scal[r].
    Operator out = dense_zero(ctx_, dim_);
    const unsigned deg = ctx_->degree();
    Int den_lcm = B.den_;
    for (uint32_t r = 0; r < dim_; ++r) {
      Int cand = scal_[r].den() * B.den_;
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), cand.get_mpz_t());
    }
    std::vector<Int> conv(2 * deg - 1);
    for (uint32_t r = 0; r < dim_; ++r) {
      Int scale = den_lcm / (scal_[r].den() * B.den_);
      const std::vector<Int>& s = scal_[r].num();
      for (uint32_t c = 0; c < dim_; ++c) {
        const Int* b = B.entry_num(r, c);
        std::fill(conv.begin(), conv.end(), Int(0));
        for (unsigned i = 0; i < deg; ++i) {
          if (s[i] == 0) continue;
          for (unsigned j = 0; j < deg; ++j)
            if (b[j] != 0) mpz_addmul(conv[i + j].get_mpz_t(), s[i].get_mpz_t(), b[j].get_mpz_t());
        }
        std::vector<Int> red = conv;
        ctx_->reduce(red);
        Int* dst = out.entry_num(perm_[r], c);
        for (unsigned i = 0; i < deg; ++i) dst[i] = red[i] * scale;
      }
    }
    out.den_ = den_lcm;
    out.canonicalize();
    return out;
  }

  Operator dense_times_mono(const Operator& B) const {
    // (A o B): column B.perm[s] of A moves to column s, scaled by B.scal[s].
    Operator out = dense_zero(ctx_, dim_);
    const unsigned deg = ctx_->degree();
    Int den_lcm = den_;
    for (uint32_t s = 0; s < dim_; ++s) {
      Int cand = B.scal_[s].den() * den_;
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), cand.get_mpz_t());
    }
    std::vector<Int> conv(2 * deg - 1);
    for (uint32_t s = 0; s < dim_; ++s) {
      Int scale = den_lcm / (B.scal_[s].den() * den_);
      const std::vector<Int>& sc = B.scal_[s].num();
      for (uint32_t r = 0; r < dim_; ++r) {
        const Int* a = entry_num(r, B.perm_[s]);
        std::fill(conv.begin(), conv.end(), Int(0));
        for (unsigned i = 0; i < deg; ++i) {
          if (sc[i] == 0) continue;
          for (unsigned j = 0; j < deg; ++j)
            if (a[j] != 0) mpz_addmul(conv[i + j].get_mpz_t(), sc[i].get_mpz_t(), a[j].get_mpz_t());
        }
        std::vector<Int> red = conv;
        ctx_->reduce(red);
        Int* dst = out.entry_num(r, s);
        for (unsigned i = 0; i < deg; ++i) dst[i] = red[i] * scale;
      }
    }
    out.den_ = den_lcm;
    out.canonicalize();
    return out;
  }

  Operator dense_times_dense(const Operator& B) const {
    Operator out = dense_zero(ctx_, dim_);
    const unsigned deg = ctx_->degree();
    const uint32_t dim = dim_;
    const CycloCtx& ctx = *ctx_;
    const Operator& A = *this;
    parallel_for(dim, [&](std::size_t r0, std::size_t r1) {
      std::vector<Int> conv(2 * deg - 1);
      for (std::size_t r = r0; r < r1; ++r) {
        for (uint32_t c = 0; c < dim; ++c) {
          std::fill(conv.begin(), conv.end(), Int(0));
          for (uint32_t k = 0; k < dim; ++k) {
            const Int* a = A.entry_num(static_cast<uint32_t>(r), k);
            const Int* b = B.entry_num(k, c);
            for (unsigned i = 0; i < deg; ++i) {
              if (a[i] == 0) continue;
              for (unsigned j = 0; j < deg; ++j) {
                if (b[j] != 0)
                  mpz_addmul(conv[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
              }
            }
          }
          std::vector<Int> red = conv;
          ctx.reduce(red);
          Int* dst = out.entry_num(static_cast<uint32_t>(r), c);
          for (unsigned i = 0; i < deg; ++i) dst[i] = std::move(red[i]);
        }
      }
    });
    out.den_ = den_ * B.den_;
    out.canonicalize();
    return out;
  }

  Form form_ = Form::Monomial;
  std::shared_ptr<const CycloCtx> ctx_;
  uint32_t dim_ = 0;
  // monomial storage
  std::vector<uint32_t> perm_;
  std::vector<CycloNum> scal_;
  // dense storage
  std::vector<Int> num_;
  Int den_{1};
};

/// rho(u_b): diagonal with entry gamma(b, elem_at(i)).
inline Operator op_u(const WeilDatum& datum, const RingElem& b) {
  const RingConfig& R = datum.ring();
  if (!R.is_antisymmetric(b)) throw std::domain_error("op_u: b must be antisymmetric");
  std::vector<CycloNum> entries;
  entries.reserve(R.size());
  for (uint64_t i = 0; i < R.size(); ++i)
    entries.push_back(CycloNum::root_of_unity(datum.ctx(), datum.gamma_exp(b, R.elem_at(i))));
  return Operator::diagonal(datum.ctx(), std::move(entries));
}

/// rho(h_t): e_a -> e_{a t^-1} (alpha = 1, scalar 1).
inline Operator op_h(const WeilDatum& datum, const RingElem& t) {
  const RingConfig& R = datum.ring();
  if (!R.is_unit(t)) throw std::domain_error("op_h: t must be a unit");
  RingElem ti = R.inv(t);
  std::vector<uint32_t> perm(R.size());
  std::vector<CycloNum> scal(R.size(), CycloNum::from_int(datum.ctx(), 1));
  for (uint64_t i = 0; i < R.size(); ++i)
    perm[i] = static_cast<uint32_t>(R.index_of(R.mul(R.elem_at(i), ti)));
  return Operator::monomial(datum.ctx(), std::move(perm), std::move(scal));
}

/// rho(w): dense with entry c * chi(a, b) at (row index(b), column index(a)).
/// The chi(-a, b) form printed in the source theorem pairs with the opposite
/// gamma sign; with the literal gamma of this datum the +a form satisfies the
/// presentation relations.
inline Operator op_w(const WeilDatum& datum) {
  const RingConfig& R = datum.ring();
  const uint32_t dim = static_cast<uint32_t>(R.size());
  Operator out = Operator::dense_zero(datum.ctx(), dim);
  const unsigned deg = datum.ctx()->degree();
  // numerator sign of c = (-1)^n / q^n
  const bool negative = R.n() % 2 == 1;
  // precomputed reduced powers of zeta
  const long p = datum.p();
  std::vector<std::vector<Int>> zpow(static_cast<std::size_t>(p));
  for (long e = 0; e < p; ++e) {
    std::vector<Int> poly(static_cast<std::size_t>(e) + 1, Int(0));
    poly[static_cast<std::size_t>(e)] = 1;
    if (poly.size() < deg) poly.resize(deg, Int(0));
    datum.ctx()->reduce(poly);
    zpow[static_cast<std::size_t>(e)] = std::move(poly);
  }
  std::vector<RingElem> elems;
  elems.reserve(dim);
  for (uint64_t i = 0; i < dim; ++i) elems.push_back(R.elem_at(i));
  for (uint32_t col = 0; col < dim; ++col) {
    RingElem astar = R.involution(elems[col]);
    for (uint32_t row = 0; row < dim; ++row) {
      long e = datum.psi_exp(R.mul(astar, elems[row]));
      const std::vector<Int>& poly = zpow[static_cast<std::size_t>(e)];
      Int* dst = out.entry_num(row, col);
      for (unsigned i = 0; i < deg; ++i) dst[i] = negative ? -poly[i] : poly[i];
    }
  }
  out.set_den(Int(datum.c().get_den()));
  return out;
}

inline Operator rho_word(const WeilDatum& datum, const BruhatWord& word) {
  Operator acc = Operator::identity(datum.ctx(), static_cast<uint32_t>(datum.ring().size()));
  for (const BruhatToken& tok : word.tokens) {
    if (const TokH* h = std::get_if<TokH>(&tok)) {
      acc = acc * op_h(datum, h->t);
    } else if (const TokU* u = std::get_if<TokU>(&tok)) {
      acc = acc * op_u(datum, u->s);
    } else {
      acc = acc * op_w(datum);
    }
  }
  return acc;
}

inline Operator rho(const WeilDatum& datum, const GroupElem& g) {
  return rho_word(datum, bruhat_factorize(datum.ring(), g));
}

/// Operator-level verification of the six presentation relations.
inline CheckReport verify_operator_relations(const WeilDatum& datum, std::size_t sample_size,
                                             uint64_t seed) {
  CheckReport report;
  report.suite = "operator_relations";
  std::mt19937_64 rng(seed);
  const RingConfig& R = datum.ring();
  auto units = R.enumerate(ElemKind::Units);
  auto asym = R.enumerate(ElemKind::Asym);
  auto asym_units = R.enumerate(ElemKind::AsymUnits);
  Operator W = op_w(datum);
  Operator I = Operator::identity(datum.ctx(), static_cast<uint32_t>(R.size()));

  auto describe1 = [&](const RingElem& t) { return "t index " + std::to_string(R.index_of(t)); };

  {
    std::vector<std::pair<RingElem, RingElem>> dom;
    if (units.size() * units.size() <= sample_size)
      for (const auto& t1 : units)
        for (const auto& t2 : units) dom.emplace_back(t1, t2);
    else
      for (std::size_t i = 0; i < sample_size; ++i)
        dom.emplace_back(R.random_unit(rng), R.random_unit(rng));
    report.items.push_back(detail::run_relation<std::pair<RingElem, RingElem>>(
        "R1 rho(h)rho(h)", dom, sample_size, rng,
        [&](const auto& pr) {
          return op_h(datum, pr.first) * op_h(datum, pr.second) ==
                 op_h(datum, R.mul(pr.first, pr.second));
        },
        [&](const auto& pr) {
          return "t1 index " + std::to_string(R.index_of(pr.first)) + ", t2 index " +
                 std::to_string(R.index_of(pr.second));
        }));
  }
  {
    std::vector<std::pair<RingElem, RingElem>> dom;
    if (asym.size() * asym.size() <= sample_size)
      for (const auto& s1 : asym)
        for (const auto& s2 : asym) dom.emplace_back(s1, s2);
    else
      for (std::size_t i = 0; i < sample_size; ++i)
        dom.emplace_back(R.random_antisym(rng), R.random_antisym(rng));
    report.items.push_back(detail::run_relation<std::pair<RingElem, RingElem>>(
        "R2 rho(u)rho(u)", dom, sample_size, rng,
        [&](const auto& pr) {
          return op_u(datum, pr.first) * op_u(datum, pr.second) ==
                 op_u(datum, R.add(pr.first, pr.second));
        },
        [&](const auto& pr) {
          return "s1 index " + std::to_string(R.index_of(pr.first)) + ", s2 index " +
                 std::to_string(R.index_of(pr.second));
        }));
  }
  {
    std::vector<std::pair<RingElem, RingElem>> dom;
    if (units.size() * asym.size() <= sample_size)
      for (const auto& t : units)
        for (const auto& s : asym) dom.emplace_back(t, s);
    else
      for (std::size_t i = 0; i < sample_size; ++i)
        dom.emplace_back(R.random_unit(rng), R.random_antisym(rng));
    report.items.push_back(detail::run_relation<std::pair<RingElem, RingElem>>(
        "R3 rho(h)rho(u)", dom, sample_size, rng,
        [&](const auto& pr) {
          const auto& [t, s] = pr;
          RingElem tst = R.mul(R.mul(t, s), R.involution(t));
          return op_h(datum, t) * op_u(datum, s) == op_u(datum, tst) * op_h(datum, t);
        },
        [&](const auto& pr) {
          return "t index " + std::to_string(R.index_of(pr.first)) + ", s index " +
                 std::to_string(R.index_of(pr.second));
        }));
  }
  {
    CheckItem item;
    item.name = "R4 rho(w)^2=I";
    item.mode = "exhaustive";
    item.checked = 1;
    item.pass = (W * W) == I;
    report.items.push_back(item);
  }
  report.items.push_back(detail::run_relation<RingElem>(
      "R5 rho(h)rho(w)", units, sample_size, rng,
      [&](const RingElem& t) {
        return op_h(datum, t) * W == W * op_h(datum, R.inv(R.involution(t)));
      },
      describe1));
  report.items.push_back(detail::run_relation<RingElem>(
      "R6 wu wu wu = h", asym_units, sample_size, rng,
      [&](const RingElem& t) {
        RingElem ti = R.inv(t);
        Operator lhs = W * op_u(datum, ti) * W * op_u(datum, R.neg(t)) * W * op_u(datum, ti);
        return lhs == op_h(datum, R.neg(t));
      },
      describe1));

  report.finalize();
  return report;
}

/// Samples pairs of members and checks rho(g1 g2) = rho(g1) rho(g2) exactly.
inline CheckReport verify_homomorphism(const WeilDatum& datum, std::size_t pairs, uint64_t seed) {
  CheckReport report;
  report.suite = "rho_homomorphism";
  std::mt19937_64 rng(seed);
  const RingConfig& R = datum.ring();
  CheckItem item;
  item.name = "rho(g1 g2) = rho(g1) rho(g2)";
  item.mode = "sampled";
  item.pass = true;
  for (std::size_t i = 0; i < pairs; ++i) {
    GroupElem g1 = random_member(R, rng);
    GroupElem g2 = random_member(R, rng);
    ++item.checked;
    if (rho(datum, group_mul(R, g1, g2)) != rho(datum, g1) * rho(datum, g2)) {
      item.pass = false;
      item.counterexample =
          "g1 entries (a,b,c,d) indices (" + std::to_string(R.index_of(g1.a)) + "," +
          std::to_string(R.index_of(g1.b)) + "," + std::to_string(R.index_of(g1.c)) + "," +
          std::to_string(R.index_of(g1.d)) + "), g2 indices (" + std::to_string(R.index_of(g2.a)) +
          "," + std::to_string(R.index_of(g2.b)) + "," + std::to_string(R.index_of(g2.c)) + "," +
          std::to_string(R.index_of(g2.d)) + ")";
      break;
    }
  }
  report.items.push_back(item);
  report.finalize();
  return report;
}

}  // namespace weilrep
