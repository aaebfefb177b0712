#pragma once

#include "weilrep/representation.hpp"
#include "weilrep/unitary.hpp"

namespace weilrep {

inline Operator add_dense(const Operator& A, const Operator& B);

/// Partition of A_n under multiplication by U, with per-orbit stabilizers
/// (stored as positions into the U element list).
struct OrbitTable {
  struct Orbit {
    uint64_t rep_index = 0;
    std::vector<uint64_t> members;           // ring indices
    std::vector<std::size_t> stabilizer;     // U positions
  };
  std::vector<Orbit> orbits;
};

/// Lambda-homogeneous decomposition machinery: orbit data, combinatorial
/// dimensions, isotypic projectors, and invariance verification.
class Decomposition {
 public:
  Decomposition(WeilDatum datum, const UnitaryGroup& unitary)
      : datum_(std::move(datum)), U_(unitary) {
    build_orbits();
    // smallest conductor containing both the rho entries and the Lambda values
    big_ctx_ = CycloCtx::make(static_cast<unsigned>(
        std::lcm<uint64_t>(static_cast<uint64_t>(datum_.p()), U_.exponent())));
  }

  const OrbitTable& orbits() const { return orbits_; }
  const std::shared_ptr<const CycloCtx>& big_ctx() const { return big_ctx_; }
  const WeilDatum& datum() const { return datum_; }
  const UnitaryGroup& unitary() const { return U_; }

  /// dim W_Lambda = number of orbits whose stabilizer lies in ker(Lambda).
  uint64_t dim_W(const UCharacter& lam) const {
    uint64_t dim = 0;
    for (const OrbitTable::Orbit& orbit : orbits_.orbits)
      if (U_.trivial_on(lam, orbit.stabilizer)) ++dim;
    return dim;
  }

  std::vector<std::pair<UCharacter, uint64_t>> dimension_table() const {
    std::vector<std::pair<UCharacter, uint64_t>> out;
    for (const UCharacter& lam : U_.characters()) out.emplace_back(lam, dim_W(lam));
    return out;
  }

  /// P_Lambda = (1/|U|) sum_u Lambda(u)^-1 T_u with (T_u f)(a) = f(u a);
  /// T_u e_b = e_{u^-1 b}, so column index(b) gets Lambda(u)^-1/|U| at row
  /// index(u^-1 b).
  Operator projector(const UCharacter& lam) const {
    const RingConfig& R = datum_.ring();
    const uint32_t dim = static_cast<uint32_t>(R.size());
    Operator out = Operator::dense_zero(big_ctx_, dim);
    const unsigned deg = big_ctx_->degree();
    const unsigned m = big_ctx_->conductor();
    // reduced powers of zeta_m
    std::vector<std::vector<Int>> zpow(m);
    for (unsigned e = 0; e < m; ++e) {
      std::vector<Int> poly(static_cast<std::size_t>(e) + 1, Int(0));
      poly[e] = 1;
      if (poly.size() < deg) poly.resize(deg, Int(0));
      big_ctx_->reduce(poly);
      zpow[e] = std::move(poly);
    }
    for (const RingElem& u : U_.elements()) {
      // Lambda(u)^-1 = zeta_m^{-(m/E) char_exp}
      uint64_t e = U_.char_exp(lam, u);
      unsigned root = static_cast<unsigned>((m - (m / U_.exponent()) * e) % m);
      const std::vector<Int>& poly = zpow[root];
      RingElem ui = R.inv(u);
      for (uint64_t b = 0; b < R.size(); ++b) {
        uint64_t target = R.index_of(R.mul(ui, R.elem_at(b)));
        Int* dst = out.entry_num(static_cast<uint32_t>(target), static_cast<uint32_t>(b));
        for (unsigned i = 0; i < deg; ++i) dst[i] += poly[i];
      }
    }
    out.set_den(Int(static_cast<unsigned long>(U_.order())));
    return out;
  }

  /// rho(g) P = P rho(g) for a generator operator, both lifted to the big
  /// conductor.
  bool commutes_with(const Operator& projector_op, const Operator& generator_op) const {
    Operator lifted = generator_op.embed(big_ctx_);
    return lifted * projector_op == projector_op * lifted;
  }

  /// Full verification: dimension sum, idempotency, trace = dimension,
  /// projector completeness, and generator invariance (w always; h/u
  /// exhaustive or seeded by volume).
  CheckReport verify(std::size_t sample_args, uint64_t seed) const;

 private:
  void build_orbits() {
    const RingConfig& R = datum_.ring();
    std::vector<bool> seen(R.size(), false);
    for (uint64_t i = 0; i < R.size(); ++i) {
      if (seen[i]) continue;
      OrbitTable::Orbit orbit;
      orbit.rep_index = i;
      RingElem rep = R.elem_at(i);
      for (std::size_t pos = 0; pos < U_.order(); ++pos) {
        const RingElem& u = U_.elements()[pos];
        RingElem moved = R.mul(u, rep);
        uint64_t idx = R.index_of(moved);
        if (!seen[idx]) {
          seen[idx] = true;
          orbit.members.push_back(idx);
        }
        if (moved == rep) orbit.stabilizer.push_back(pos);
      }
      orbits_.orbits.push_back(std::move(orbit));
    }
  }

  WeilDatum datum_;
  const UnitaryGroup& U_;
  OrbitTable orbits_;
  std::shared_ptr<const CycloCtx> big_ctx_;
};

inline CheckReport Decomposition::verify(std::size_t sample_args, uint64_t seed) const {
  CheckReport report;
  report.suite = "decomposition";
  const RingConfig& R = datum_.ring();
  std::mt19937_64 rng(seed);
  auto chars = U_.characters();

  {
    CheckItem item;
    item.name = "orbit-stabilizer identity and partition";
    item.mode = "exhaustive";
    item.pass = true;
    uint64_t total = 0;
    for (const OrbitTable::Orbit& orbit : orbits_.orbits) {
      ++item.checked;
      total += orbit.members.size();
      if (orbit.members.size() * orbit.stabilizer.size() != U_.order()) {
        item.pass = false;
        item.counterexample = "orbit of index " + std::to_string(orbit.rep_index);
        break;
      }
    }
    if (item.pass && total != R.size()) {
      item.pass = false;
      item.counterexample = "orbit sizes sum to " + std::to_string(total);
    }
    report.items.push_back(item);
  }
  {
    CheckItem item;
    item.name = "sum of dim W_Lambda = q^(2n)";
    item.mode = "exhaustive";
    item.checked = chars.size();
    uint64_t total = 0;
    for (const UCharacter& lam : chars) total += dim_W(lam);
    item.pass = total == R.size();
    if (!item.pass) item.counterexample = "total " + std::to_string(total);
    report.items.push_back(item);
  }
  {
    CheckItem item;
    item.name = "projectors idempotent with trace = dim, summing to I";
    item.mode = "exhaustive";
    item.pass = true;
    bool first = true;
    Operator acc = Operator::dense_zero(big_ctx_, static_cast<uint32_t>(R.size()));
    for (const UCharacter& lam : chars) {
      ++item.checked;
      Operator P = projector(lam);
      if (P * P != P) {
        item.pass = false;
        item.counterexample = "P^2 != P for a character";
        break;
      }
      if (P.trace() != CycloNum::from_int(big_ctx_, static_cast<long>(dim_W(lam)))) {
        item.pass = false;
        item.counterexample = "trace != combinatorial dimension";
        break;
      }
      if (first) {
        acc = P;
        first = false;
      } else {
        acc = add_dense(acc, P);
      }
    }
    if (item.pass &&
        acc != Operator::identity(big_ctx_, static_cast<uint32_t>(R.size())).to_dense()) {
      item.pass = false;
      item.counterexample = "sum of projectors is not the identity";
    }
    report.items.push_back(item);
  }
  {
    CheckItem item;
    item.name = "generator operators commute with every projector";
    auto units = R.enumerate(ElemKind::Units);
    auto asym = R.enumerate(ElemKind::Asym);
    uint64_t volume = chars.size() * (units.size() + asym.size() + 1);
    bool exhaustive = volume <= sample_args;
    item.mode = exhaustive ? "exhaustive" : "sampled";
    item.pass = true;
    Operator W = op_w(datum_);
    std::vector<RingElem> h_args, u_args;
    if (exhaustive) {
      h_args = units;
      u_args = asym;
    } else {
      std::size_t per = std::max<std::size_t>(1, sample_args / (2 * chars.size()));
      for (std::size_t i = 0; i < per; ++i) {
        h_args.push_back(R.random_unit(rng));
        u_args.push_back(R.random_antisym(rng));
      }
    }
    for (const UCharacter& lam : chars) {
      Operator P = projector(lam);
      ++item.checked;
      if (!commutes_with(P, W)) {
        item.pass = false;
        item.counterexample = "w fails for a character";
        break;
      }
      for (const RingElem& t : h_args) {
        ++item.checked;
        if (!commutes_with(P, op_h(datum_, t))) {
          item.pass = false;
          item.counterexample = "h(t) fails, t index " + std::to_string(R.index_of(t));
          break;
        }
      }
      if (!item.pass) break;
      for (const RingElem& s : u_args) {
        ++item.checked;
        if (!commutes_with(P, op_u(datum_, s))) {
          item.pass = false;
          item.counterexample = "u(s) fails, s index " + std::to_string(R.index_of(s));
          break;
        }
      }
      if (!item.pass) break;
    }
    report.items.push_back(item);
  }

  report.finalize();
  return report;
}

/// Entry-wise sum of two dense operators on the same context.
inline Operator add_dense(const Operator& A, const Operator& B) {
  if (A.dim() != B.dim() || A.ctx()->conductor() != B.ctx()->conductor())
    throw std::invalid_argument("add_dense: shape mismatch");
  Operator a = A.form() == Operator::Form::Dense ? A : A.to_dense();
  Operator b = B.form() == Operator::Form::Dense ? B : B.to_dense();
  Operator out = Operator::dense_zero(a.ctx(), a.dim());
  const unsigned deg = a.ctx()->degree();
  for (uint32_t r = 0; r < a.dim(); ++r) {
    for (uint32_t c = 0; c < a.dim(); ++c) {
      const Int* pa = a.entry_num(r, c);
      const Int* pb = b.entry_num(r, c);
      Int* dst = out.entry_num(r, c);
      for (unsigned i = 0; i < deg; ++i) dst[i] = pa[i] * b.den() + pb[i] * a.den();
    }
  }
  out.set_den(a.den() * b.den());
  return out;
}

}  // namespace weilrep
