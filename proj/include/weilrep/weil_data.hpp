#pragma once

#include <unordered_map>

#include "weilrep/group.hpp"

namespace weilrep {

/// The Weil datum (M, chi, gamma, c) for M = A_n with alpha = 1:
///   psi(a)     = psi_top(a_{n-1}), where psi_top is the additive character of
///                K polarized by the parity of n (trivial on the symmetric
///                top-coefficient space, so that chi(v,m) = chi(m,v)^-1),
///   chi(a,b)   = psi(a* b),
///   gamma(t,m) = chi(-2^-1 t m, m) = psi(2^-1 t m* m),
///   c          = (-1)^n / q^n.
class WeilDatum {
 public:
  explicit WeilDatum(RingConfig ring) : ring_(std::move(ring)) {
    const long n = ring_.n();
    c_ = Rat((n % 2 == 0) ? 1 : -1, int_pow(Int(ring_.field().q()), static_cast<unsigned long>(n)));
    c_.canonicalize();
  }

  const RingConfig& ring() const { return ring_; }
  const Rat& c() const { return c_; }
  const std::shared_ptr<const CycloCtx>& ctx() const { return ring_.field().ctx_p(); }
  long p() const { return ring_.field().p(); }

  /// Exponent e with psi(a) = zeta_p^e.
  long psi_exp(const RingElem& a) const { return psi_top_exp(a.c[ring_.n() - 1]); }

  long chi_exp(const RingElem& a, const RingElem& b) const {
    // only the top coefficient of a* b is needed
    const FieldConfig& F = ring_.field();
    const long n = ring_.n();
    KElem top = F.K_zero();
    for (long i = 0; i < n; ++i) {
      KElem ai = F.K_conj(a.c[i]);
      if (i % 2 == 1) ai = F.K_neg(ai);
      top = F.K_add(top, F.K_mul(ai, b.c[n - 1 - i]));
    }
    return psi_top_exp(top);
  }

  long gamma_exp(const RingElem& t, const RingElem& m) const {
    if (!ring_.is_antisymmetric(t)) throw std::domain_error("gamma: t must be antisymmetric");
    return gamma_exp_unchecked(t, m);
  }

  CycloNum psi(const RingElem& a) const { return CycloNum::root_of_unity(ctx(), psi_exp(a)); }
  CycloNum chi(const RingElem& a, const RingElem& b) const {
    return CycloNum::root_of_unity(ctx(), chi_exp(a, b));
  }
  CycloNum gamma(const RingElem& t, const RingElem& m) const {
    return CycloNum::root_of_unity(ctx(), gamma_exp(t, m));
  }

  /// Exhaustive sum of gamma(t, y) over y in A_n; equals (-1)^n q^n.
  CycloNum gauss_sum(const RingElem& t) const {
    if (!ring_.is_antisymmetric(t) || !ring_.is_unit(t))
      throw std::domain_error("gauss_sum: t must be an antisymmetric unit");
    std::vector<Int> counts(static_cast<std::size_t>(p()), Int(0));
    for (uint64_t i = 0; i < ring_.size(); ++i)
      counts[static_cast<std::size_t>(gamma_exp_unchecked(t, ring_.elem_at(i)))] += 1;
    return CycloNum::from_exponent_counts(ctx(), counts);
  }

  /// alpha(t)/c = 1/c as an exact rational (alpha = 1).
  Rat h_condition_value() const {
    Rat inv_c = Rat(1) / c_;
    inv_c.canonicalize();
    return inv_c;
  }

  /// Verifies the data conditions (a)-(h). A law runs exhaustively when the
  /// configuration passes the element guard (q^2n <= 10^4) and the law's
  /// iteration count stays <= 2*10^7; otherwise it is seeded-sampled with
  /// direct evaluation. Exhaustive laws run on precomputed exponent tables;
  /// the bi-additivity check doubles as the table-vs-direct agreement proof.
  CheckReport check_data_conditions(std::size_t sample_size, uint64_t seed) const;

 private:
  long psi_top_exp(const KElem& top) const {
    return (ring_.n() % 2 == 1) ? ring_.field().psi0_im_exp(top) : ring_.field().psi0_re_exp(top);
  }

  long gamma_exp_unchecked(const RingElem& t, const RingElem& m) const {
    // psi(2^-1 t m* m), the literal expansion of chi(-2^-1 t m, m)
    const FieldConfig& F = ring_.field();
    const long n = ring_.n();
    RingElem mm = ring_.mul(ring_.involution(m), m);
    KElem top = F.K_zero();
    for (long i = 0; i < n; ++i) top = F.K_add(top, F.K_mul(t.c[i], mm.c[n - 1 - i]));
    return psi_top_exp(F.K_mul(ring_.two_inv(), top));
  }

  RingConfig ring_;
  Rat c_;
};

inline CheckReport WeilDatum::check_data_conditions(std::size_t sample_size, uint64_t seed) const {
  CheckReport report;
  report.suite = "data_conditions";
  std::mt19937_64 rng(seed);
  const RingConfig& R = ring_;
  const FieldConfig& F = R.field();
  const uint64_t sz = R.size();
  const bool cfg_exhaustive = sz <= 10000;
  constexpr uint64_t kLawBudget = 20000000;
  const long pr = p();

  std::vector<RingElem> elems;
  elems.reserve(sz);
  for (uint64_t i = 0; i < sz; ++i) elems.push_back(R.elem_at(i));
  auto units = R.enumerate(ElemKind::Units);
  auto asym = R.enumerate(ElemKind::Asym);
  auto asym_units = R.enumerate(ElemKind::AsymUnits);

  // digit tables: every element index in mixed radix base p, D digits
  const unsigned D = static_cast<unsigned>(2 * R.n() * F.t());
  std::vector<uint8_t> digs(sz * D);
  std::vector<uint64_t> pw(D, 1);
  for (unsigned d = 1; d < D; ++d) pw[d] = pw[d - 1] * static_cast<uint64_t>(pr);
  for (uint64_t i = 0; i < sz; ++i) {
    uint64_t x = i;
    for (unsigned d = 0; d < D; ++d) {
      digs[i * D + d] = static_cast<uint8_t>(x % static_cast<uint64_t>(pr));
      x /= static_cast<uint64_t>(pr);
    }
  }
  auto idx_add = [&](uint64_t i, uint64_t j) {
    uint64_t out = 0;
    for (unsigned d = 0; d < D; ++d)
      out += pw[d] * ((digs[i * D + d] + digs[j * D + d]) % pr);
    return out;
  };

  // chi exponents against the digit basis: Bchi[d][j] = chi(e_d, elem_j)
  std::vector<uint8_t> Bchi(static_cast<std::size_t>(D) * sz);
  for (unsigned d = 0; d < D; ++d) {
    const RingElem& basis = elems[pw[d]];
    for (uint64_t j = 0; j < sz; ++j)
      Bchi[static_cast<std::size_t>(d) * sz + j] = static_cast<uint8_t>(chi_exp(basis, elems[j]));
  }
  // bi-additive in the first slot by construction; condition (a) proves the
  // agreement with direct evaluation
  auto chi_idx = [&](uint64_t i, uint64_t j) {
    unsigned acc = 0;
    for (unsigned d = 0; d < D; ++d)
      acc += digs[i * D + d] * Bchi[static_cast<std::size_t>(d) * sz + j];
    return static_cast<long>(acc % static_cast<unsigned>(pr));
  };

  // gamma exponents per antisymmetric t, directly evaluated
  std::unordered_map<uint64_t, std::size_t> asym_pos;
  for (std::size_t a = 0; a < asym.size(); ++a) asym_pos.emplace(R.index_of(asym[a]), a);
  std::vector<uint8_t> gtab(asym.size() * sz);
  for (std::size_t a = 0; a < asym.size(); ++a)
    for (uint64_t m = 0; m < sz; ++m)
      gtab[a * sz + m] = static_cast<uint8_t>(gamma_exp_unchecked(asym[a], elems[m]));

  auto mul_table = [&](const RingElem& t) {
    std::vector<uint32_t> out(sz);
    for (uint64_t m = 0; m < sz; ++m)
      out[m] = static_cast<uint32_t>(R.index_of(R.mul(elems[m], t)));
    return out;
  };

  auto idx = [&](const RingElem& a) { return std::to_string(R.index_of(a)); };

  // Sampled fallback over triples of domains, evaluating the law directly.
  auto sampled_law = [&](CheckItem& item, const std::vector<RingElem>& d1,
                         const std::vector<RingElem>& d2, const std::vector<RingElem>& d3,
                         auto&& law, auto&& describe) {
    std::uniform_int_distribution<std::size_t> p1(0, d1.size() - 1), p2(0, d2.size() - 1),
        p3(0, d3.size() - 1);
    for (std::size_t i = 0; i < sample_size; ++i) {
      const RingElem& x = d1[p1(rng)];
      const RingElem& y = d2[p2(rng)];
      const RingElem& z = d3[p3(rng)];
      ++item.checked;
      if (!law(x, y, z)) {
        item.pass = false;
        item.counterexample = describe(x, y, z);
        return;
      }
    }
  };

  // (a) chi is bi-additive. Exhaustively: table-vs-direct agreement on all
  // pairs settles additivity in the first slot (indices add digit-wise), and
  // per-basis additivity in the second slot settles the rest.
  {
    CheckItem item;
    item.name = "(a) chi bi-additive";
    uint64_t volume = sz * sz * (1 + D);
    bool exhaustive = cfg_exhaustive && volume <= kLawBudget;
    item.mode = exhaustive ? "exhaustive" : "sampled";
    item.pass = true;
    if (exhaustive) {
      for (uint64_t i = 0; i < sz && item.pass; ++i) {
        for (uint64_t j = 0; j < sz; ++j) {
          ++item.checked;
          if (chi_exp(elems[i], elems[j]) != chi_idx(i, j)) {
            item.pass = false;
            item.counterexample = "first-slot additivity fails at m index " + std::to_string(i) +
                                  ", v index " + std::to_string(j);
            break;
          }
        }
      }
      for (unsigned d = 0; d < D && item.pass; ++d) {
        const uint8_t* row = Bchi.data() + static_cast<std::size_t>(d) * sz;
        for (uint64_t m = 0; m < sz && item.pass; ++m) {
          for (uint64_t z = 0; z < sz; ++z) {
            ++item.checked;
            if (row[idx_add(m, z)] != (row[m] + row[z]) % pr) {
              item.pass = false;
              item.counterexample = "second-slot additivity fails at basis digit " +
                                    std::to_string(d) + ", m index " + std::to_string(m) +
                                    ", z index " + std::to_string(z);
              break;
            }
          }
        }
      }
    } else {
      sampled_law(
          item, elems, elems, elems,
          [&](const RingElem& m, const RingElem& z, const RingElem& v) {
            if (chi_exp(R.add(m, z), v) != (chi_exp(m, v) + chi_exp(z, v)) % pr) return false;
            return chi_exp(v, R.add(m, z)) == (chi_exp(v, m) + chi_exp(v, z)) % pr;
          },
          [&](const RingElem& m, const RingElem& z, const RingElem& v) {
            return "m index " + idx(m) + ", z index " + idx(z) + ", v index " + idx(v);
          });
    }
    report.items.push_back(item);
  }

  // (b) chi(mt, v) = chi(m, v t*)  (alpha = 1)
  {
    CheckItem item;
    item.name = "(b) chi(mt,v)=chi(m,vt*)";
    uint64_t volume = units.size() * sz * sz;
    bool exhaustive = cfg_exhaustive && volume <= kLawBudget;
    item.mode = exhaustive ? "exhaustive" : "sampled";
    item.pass = true;
    if (exhaustive) {
      for (const RingElem& t : units) {
        std::vector<uint32_t> pi_t = mul_table(t);
        std::vector<uint32_t> pi_ts = mul_table(R.involution(t));
        for (uint64_t m = 0; m < sz && item.pass; ++m) {
          for (uint64_t v = 0; v < sz; ++v) {
            ++item.checked;
            if (chi_idx(pi_t[m], v) != chi_idx(m, pi_ts[v])) {
              item.pass = false;
              item.counterexample = "t index " + idx(t) + ", m index " + std::to_string(m) +
                                    ", v index " + std::to_string(v);
              break;
            }
          }
        }
        if (!item.pass) break;
      }
    } else {
      sampled_law(
          item, units, elems, elems,
          [&](const RingElem& t, const RingElem& m, const RingElem& v) {
            return chi_exp(R.mul(m, t), v) == chi_exp(m, R.mul(v, R.involution(t)));
          },
          [&](const RingElem& t, const RingElem& m, const RingElem& v) {
            return "t index " + idx(t) + ", m index " + idx(m) + ", v index " + idx(v);
          });
    }
    report.items.push_back(item);
  }

  // (c) chi(v, m) = chi(m, v)^-1
  {
    CheckItem item;
    item.name = "(c) chi(v,m)=chi(m,v)^-1";
    uint64_t volume = sz * sz;
    bool exhaustive = cfg_exhaustive && volume <= kLawBudget;
    item.mode = exhaustive ? "exhaustive" : "sampled";
    item.pass = true;
    if (exhaustive) {
      for (uint64_t i = 0; i < sz && item.pass; ++i) {
        for (uint64_t j = 0; j < sz; ++j) {
          ++item.checked;
          if ((chi_idx(i, j) + chi_idx(j, i)) % pr != 0) {
            item.pass = false;
            item.counterexample = "v index " + std::to_string(i) + ", m index " + std::to_string(j);
            break;
          }
        }
      }
    } else {
      sampled_law(
          item, elems, elems, {R.one()},
          [&](const RingElem& v, const RingElem& m, const RingElem&) {
            return (chi_exp(v, m) + chi_exp(m, v)) % pr == 0;
          },
          [&](const RingElem& v, const RingElem& m, const RingElem&) {
            return "v index " + idx(v) + ", m index " + idx(m);
          });
    }
    report.items.push_back(item);
  }

  // (d) non-degeneracy: every nonzero a has a witness b with chi(a, b) != 1
  {
    CheckItem item;
    item.name = "(d) chi non-degenerate";
    item.mode = cfg_exhaustive ? "exhaustive" : "sampled";
    item.pass = true;
    auto scan = [&](uint64_t i) {
      ++item.checked;
      for (uint64_t j = 0; j < sz; ++j)
        if (chi_idx(i, j) != 0) return true;
      item.pass = false;
      item.counterexample = "a index " + std::to_string(i) + " pairs trivially with every b";
      return false;
    };
    if (cfg_exhaustive) {
      for (uint64_t i = 1; i < sz && item.pass; ++i) scan(i);
    } else {
      std::uniform_int_distribution<uint64_t> pick(1, sz - 1);
      for (std::size_t s = 0; s < sample_size && item.pass; ++s) scan(pick(rng));
    }
    report.items.push_back(item);
  }

  // (e) gamma(b, mt) = gamma(t b t*, m)
  {
    CheckItem item;
    item.name = "(e) gamma(b,mt)=gamma(tbt*,m)";
    uint64_t volume = asym.size() * units.size() * sz;
    bool exhaustive = cfg_exhaustive && volume <= kLawBudget;
    item.mode = exhaustive ? "exhaustive" : "sampled";
    item.pass = true;
    if (exhaustive) {
      for (const RingElem& t : units) {
        std::vector<uint32_t> pi_t = mul_table(t);
        RingElem tstar = R.involution(t);
        for (std::size_t b = 0; b < asym.size() && item.pass; ++b) {
          std::size_t tbt = asym_pos.at(R.index_of(R.mul(R.mul(t, asym[b]), tstar)));
          const uint8_t* lhs = gtab.data() + b * sz;
          const uint8_t* rhs = gtab.data() + tbt * sz;
          for (uint64_t m = 0; m < sz; ++m) {
            ++item.checked;
            if (lhs[pi_t[m]] != rhs[m]) {
              item.pass = false;
              item.counterexample = "b index " + idx(asym[b]) + ", t index " + idx(t) +
                                    ", m index " + std::to_string(m);
              break;
            }
          }
        }
        if (!item.pass) break;
      }
    } else {
      sampled_law(
          item, asym, units, elems,
          [&](const RingElem& b, const RingElem& t, const RingElem& m) {
            RingElem tbt = R.mul(R.mul(t, b), R.involution(t));
            return gamma_exp(b, R.mul(m, t)) == gamma_exp(tbt, m);
          },
          [&](const RingElem& b, const RingElem& t, const RingElem& m) {
            return "b index " + idx(b) + ", t index " + idx(t) + ", m index " + idx(m);
          });
    }
    report.items.push_back(item);
  }

  // (f) gamma(t, m+z) = gamma(t, m) gamma(t, z) chi(m, zt), all antisymmetric t
  {
    CheckItem item;
    item.name = "(f) gamma cocycle";
    uint64_t volume = asym.size() * sz * sz;
    bool exhaustive = cfg_exhaustive && volume <= kLawBudget;
    item.mode = exhaustive ? "exhaustive" : "sampled";
    item.pass = true;
    if (exhaustive) {
      for (std::size_t a = 0; a < asym.size() && item.pass; ++a) {
        std::vector<uint32_t> sig = mul_table(asym[a]);  // z -> z t
        const uint8_t* row = gtab.data() + a * sz;
        for (uint64_t m = 0; m < sz && item.pass; ++m) {
          for (uint64_t z = 0; z < sz; ++z) {
            ++item.checked;
            long rhs = (row[m] + row[z] + chi_idx(m, sig[z])) % pr;
            if (row[idx_add(m, z)] != rhs) {
              item.pass = false;
              item.counterexample = "t index " + idx(asym[a]) + ", m index " + std::to_string(m) +
                                    ", z index " + std::to_string(z);
              break;
            }
          }
        }
      }
    } else {
      sampled_law(
          item, asym, elems, elems,
          [&](const RingElem& t, const RingElem& m, const RingElem& z) {
            long rhs = (gamma_exp(t, m) + gamma_exp(t, z) + chi_exp(m, R.mul(z, t))) % pr;
            return gamma_exp(t, R.add(m, z)) == rhs;
          },
          [&](const RingElem& t, const RingElem& m, const RingElem& z) {
            return "t index " + idx(t) + ", m index " + idx(m) + ", z index " + idx(z);
          });
    }
    report.items.push_back(item);
  }

  // (f) scalar constraint: c^2 |M| = 1
  {
    CheckItem item;
    item.name = "(f) c^2 |M| = 1";
    item.mode = "exhaustive";
    item.checked = 1;
    Rat v = c_ * c_ * Rat(Int(sz));
    v.canonicalize();
    item.pass = v == 1;
    report.items.push_back(item);
  }

  // (g) gamma(b + b', m) = gamma(b, m) gamma(b', m)
  {
    CheckItem item;
    item.name = "(g) gamma additive in t";
    uint64_t volume = asym.size() * asym.size() * sz;
    bool exhaustive = cfg_exhaustive && volume <= kLawBudget;
    item.mode = exhaustive ? "exhaustive" : "sampled";
    item.pass = true;
    if (exhaustive) {
      for (std::size_t a = 0; a < asym.size() && item.pass; ++a) {
        for (std::size_t b = 0; b < asym.size() && item.pass; ++b) {
          std::size_t ab =
              asym_pos.at(idx_add(R.index_of(asym[a]), R.index_of(asym[b])));
          for (uint64_t m = 0; m < sz; ++m) {
            ++item.checked;
            if (gtab[ab * sz + m] != (gtab[a * sz + m] + gtab[b * sz + m]) % pr) {
              item.pass = false;
              item.counterexample = "b index " + idx(asym[a]) + ", b' index " + idx(asym[b]) +
                                    ", m index " + std::to_string(m);
              break;
            }
          }
        }
      }
    } else {
      sampled_law(
          item, asym, asym, elems,
          [&](const RingElem& b, const RingElem& b2, const RingElem& m) {
            return gamma_exp(R.add(b, b2), m) == (gamma_exp(b, m) + gamma_exp(b2, m)) % pr;
          },
          [&](const RingElem& b, const RingElem& b2, const RingElem& m) {
            return "b index " + idx(b) + ", b' index " + idx(b2) + ", m index " + idx(m);
          });
    }
    report.items.push_back(item);
  }

  // (h) sum_m gamma(t, m) = alpha(t)/c for every antisymmetric unit t
  {
    CheckItem item;
    item.name = "(h) gauss sum = alpha(t)/c";
    item.mode = cfg_exhaustive ? "exhaustive" : "sampled";
    item.pass = true;
    CycloNum expect = CycloNum::from_rational(ctx(), h_condition_value());
    std::vector<RingElem> dom;
    if (cfg_exhaustive) {
      dom = asym_units;
    } else {
      for (std::size_t s = 0; s < std::min<std::size_t>(sample_size, 32); ++s)
        dom.push_back(R.random_antisym_unit(rng));
    }
    for (const RingElem& t : dom) {
      ++item.checked;
      CycloNum total = [&] {
        auto it = asym_pos.find(R.index_of(t));
        if (it == asym_pos.end()) return gauss_sum(t);
        std::vector<Int> counts(static_cast<std::size_t>(pr), Int(0));
        const uint8_t* row = gtab.data() + it->second * sz;
        for (uint64_t m = 0; m < sz; ++m) counts[row[m]] += 1;
        return CycloNum::from_exponent_counts(ctx(), counts);
      }();
      if (total != expect) {
        item.pass = false;
        item.counterexample = "t index " + idx(t);
        break;
      }
    }
    report.items.push_back(item);
  }

  report.finalize();
  return report;
}

}  // namespace weilrep
