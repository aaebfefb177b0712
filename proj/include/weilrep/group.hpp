#pragma once

#include <optional>
#include <variant>

#include "weilrep/report.hpp"
#include "weilrep/ring.hpp"

namespace weilrep {

/// 2x2 matrix [[a,b],[c,d]] over A_n; members satisfy det_* = 1 and the entry
/// relations a*c = -c*a, ab* = -ba*, b*d = -d*b, cd* = -dc*.
struct GroupElem {
  RingElem a, b, c, d;
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

struct TokH {
  RingElem t;
  friend bool operator==(const TokH&, const TokH&) = default;
};
struct TokU {
  RingElem s;
  friend bool operator==(const TokU&, const TokU&) = default;
};
struct TokW {
  friend bool operator==(const TokW&, const TokW&) = default;
};
using BruhatToken = std::variant<TokH, TokU, TokW>;

struct BruhatWord {
  std::vector<BruhatToken> tokens;
  friend bool operator==(const BruhatWord&, const BruhatWord&) = default;
};

/// det_*(g) = a d* + b c*.
inline RingElem det_star(const RingConfig& ring, const GroupElem& g) {
  return ring.add(ring.mul(g.a, ring.involution(g.d)), ring.mul(g.b, ring.involution(g.c)));
}

inline bool is_member(const RingConfig& ring, const GroupElem& g) {
  if (det_star(ring, g) != ring.one()) return false;
  auto anti = [&](const RingElem& x, const RingElem& y) {
    // x y* = -y x*  <=>  x y* antisymmetric
    return ring.mul(x, ring.involution(y)) ==
           ring.neg(ring.mul(y, ring.involution(x)));
  };
  return anti(ring.involution(g.a), ring.involution(g.c)) &&  // a*c = -c*a
         anti(g.a, g.b) && anti(ring.involution(g.b), ring.involution(g.d)) && anti(g.c, g.d);
}

inline GroupElem group_identity(const RingConfig& ring) {
  return GroupElem{ring.one(), ring.zero(), ring.zero(), ring.one()};
}

/// h(t) = [[t, 0], [0, t*^-1]] for a unit t.
inline GroupElem gen_h(const RingConfig& ring, const RingElem& t) {
  if (!ring.is_unit(t)) throw std::domain_error("gen_h: t must be a unit");
  return GroupElem{t, ring.zero(), ring.zero(), ring.inv(ring.involution(t))};
}

/// u(s) = [[1, s], [0, 1]] for an antisymmetric s.
inline GroupElem gen_u(const RingConfig& ring, const RingElem& s) {
  if (!ring.is_antisymmetric(s)) throw std::domain_error("gen_u: s must be antisymmetric");
  return GroupElem{ring.one(), s, ring.zero(), ring.one()};
}

/// w = [[0, 1], [1, 0]].
inline GroupElem gen_w(const RingConfig& ring) {
  return GroupElem{ring.zero(), ring.one(), ring.one(), ring.zero()};
}

inline GroupElem group_mul(const RingConfig& ring, const GroupElem& g, const GroupElem& h) {
  return GroupElem{
      ring.add(ring.mul(g.a, h.a), ring.mul(g.b, h.c)),
      ring.add(ring.mul(g.a, h.b), ring.mul(g.b, h.d)),
      ring.add(ring.mul(g.c, h.a), ring.mul(g.d, h.c)),
      ring.add(ring.mul(g.c, h.b), ring.mul(g.d, h.d)),
  };
}

/// Inverse of a member: g^-1 = J g* J = [[d*, b*], [c*, a*]].
inline GroupElem group_inv(const RingConfig& ring, const GroupElem& g) {
  GroupElem inv{ring.involution(g.d), ring.involution(g.b), ring.involution(g.c),
                ring.involution(g.a)};
  if (group_mul(ring, g, inv) != group_identity(ring))
    throw std::domain_error("group_inv: matrix is not a member of SL*1(2, A_n)");
  return inv;
}

inline GroupElem eval_word(const RingConfig& ring, const BruhatWord& word) {
  GroupElem g = group_identity(ring);
  for (const BruhatToken& tok : word.tokens) {
    if (const TokH* h = std::get_if<TokH>(&tok)) {
      g = group_mul(ring, g, gen_h(ring, h->t));
    } else if (const TokU* u = std::get_if<TokU>(&tok)) {
      g = group_mul(ring, g, gen_u(ring, u->s));
    } else {
      g = group_mul(ring, g, gen_w(ring));
    }
  }
  return g;
}

/// Canonical Bruhat factorization, case order: c = 0, c a unit, c a nonzero
/// non-unit (where a is necessarily a unit and s = 0 suffices).
inline BruhatWord bruhat_factorize(const RingConfig& ring, const GroupElem& g) {
  if (!is_member(ring, g)) throw std::domain_error("bruhat_factorize: not a member");
  BruhatWord word;
  if (ring.is_zero(g.c)) {
    word.tokens = {TokH{g.a}, TokU{ring.mul(ring.inv(g.a), g.b)}};
    return word;
  }
  if (ring.is_unit(g.c)) {
    RingElem cstar = ring.involution(g.c);
    word.tokens = {TokH{ring.inv(cstar)}, TokU{ring.mul(cstar, g.a)}, TokW{},
                   TokU{ring.mul(ring.inv(g.c), g.d)}};
    return word;
  }
  // w*g = [[c, d], [a, b]] has invertible (2,1) entry a; apply the unit case
  // there and pull the w across (w^2 = 1).
  RingElem astar = ring.involution(g.a);
  word.tokens = {TokW{}, TokH{ring.inv(astar)}, TokU{ring.mul(astar, g.c)}, TokW{},
                 TokU{ring.mul(ring.inv(g.a), g.b)}};
  return word;
}

/// |SL*1(2, A_n)| = (q^2 - 1) q^(4n-3) (q + 1).
inline Int group_order(const RingConfig& ring) {
  Int q(ring.field().q());
  return (q * q - 1) * int_pow(q, static_cast<unsigned long>(4 * ring.n() - 3)) * (q + 1);
}

/// Exhaustive scan of all 2x2 matrices filtered by is_member. Guarded: the
/// scan needs (q^2n)^4 matrix tests.
inline std::vector<GroupElem> enumerate_group(const RingConfig& ring) {
  if (ring.size() > 100) throw resource_error("enumerate_group: q^(2n) > 100");
  std::vector<GroupElem> out;
  const uint64_t sz = ring.size();
  for (uint64_t ia = 0; ia < sz; ++ia) {
    RingElem a = ring.elem_at(ia);
    for (uint64_t ic = 0; ic < sz; ++ic) {
      RingElem c = ring.elem_at(ic);
      // first-column pruning: a*c = -c*a and the column is unimodular
      if (!ring.is_unit(a) && !ring.is_unit(c)) continue;
      RingElem astar_c = ring.mul(ring.involution(a), c);
      if (astar_c != ring.neg(ring.involution(astar_c))) continue;
      for (uint64_t ib = 0; ib < sz; ++ib) {
        RingElem b = ring.elem_at(ib);
        for (uint64_t id = 0; id < sz; ++id) {
          GroupElem g{a, b, ring.elem_at(ic), ring.elem_at(id)};
          g.c = c;
          if (is_member(ring, g)) out.push_back(std::move(g));
        }
      }
    }
  }
  return out;
}

/// Counts the unimodular first columns (a, c) with a*c = -c*a, split into the
/// two orbit shapes O1 (a a unit) and O2 (a a non-unit, c a unit).
struct ColumnOrbitCounts {
  Int o1, o2;
  Int total() const { return o1 + o2; }
};

inline ColumnOrbitCounts count_column_orbits(const RingConfig& ring) {
  if (ring.size() * ring.size() > (uint64_t{1} << 26))
    throw resource_error("count_column_orbits: scan too large");
  ColumnOrbitCounts counts{0, 0};
  const uint64_t sz = ring.size();
  for (uint64_t ia = 0; ia < sz; ++ia) {
    RingElem a = ring.elem_at(ia);
    bool a_unit = ring.is_unit(a);
    for (uint64_t ic = 0; ic < sz; ++ic) {
      RingElem c = ring.elem_at(ic);
      if (!a_unit && !ring.is_unit(c)) continue;
      RingElem astar_c = ring.mul(ring.involution(a), c);
      if (astar_c != ring.neg(ring.involution(astar_c))) continue;
      if (a_unit)
        counts.o1 += 1;
      else
        counts.o2 += 1;
    }
  }
  return counts;
}

/// Seeded random member: a word of length <= max_len with uniform token kinds
/// and uniform arguments.
inline GroupElem random_member(const RingConfig& ring, std::mt19937_64& rng, int max_len = 8) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> kind_dist(0, 2);
  GroupElem g = group_identity(ring);
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    switch (kind_dist(rng)) {
      case 0: g = group_mul(ring, g, gen_h(ring, ring.random_unit(rng))); break;
      case 1: g = group_mul(ring, g, gen_u(ring, ring.random_antisym(rng))); break;
      default: g = group_mul(ring, g, gen_w(ring));
    }
  }
  return g;
}

namespace detail {

template <typename Domain, typename Check>
CheckItem run_relation(const std::string& name, const std::vector<Domain>& domain,
                       std::size_t sample_size, std::mt19937_64& rng, Check&& check,
                       const std::function<std::string(const Domain&)>& describe) {
  CheckItem item;
  item.name = name;
  bool exhaustive = domain.size() <= sample_size;
  item.mode = exhaustive ? "exhaustive" : "sampled";
  item.pass = true;
  if (exhaustive) {
    for (const Domain& d : domain) {
      ++item.checked;
      if (!check(d)) {
        item.pass = false;
        item.counterexample = describe(d);
        return item;
      }
    }
  } else {
    std::uniform_int_distribution<std::size_t> dist(0, domain.size() - 1);
    for (std::size_t i = 0; i < sample_size; ++i) {
      const Domain& d = domain[dist(rng)];
      ++item.checked;
      if (!check(d)) {
        item.pass = false;
        item.counterexample = describe(d);
        return item;
      }
    }
  }
  return item;
}

}  // namespace detail

/// Checks the six presentation relations at the matrix level; exhaustive when
/// the relevant argument set has at most sample_size tuples, else seeded.
inline CheckReport verify_presentation(const RingConfig& ring, std::size_t sample_size,
                                       uint64_t seed) {
  CheckReport report;
  report.suite = "presentation";
  std::mt19937_64 rng(seed);
  auto units = ring.enumerate(ElemKind::Units);
  auto asym = ring.enumerate(ElemKind::Asym);
  auto asym_units = ring.enumerate(ElemKind::AsymUnits);
  GroupElem I = group_identity(ring);
  GroupElem W = gen_w(ring);

  auto describe1 = [&](const RingElem& t) { return "t index " + std::to_string(ring.index_of(t)); };

  // R1: h(t1) h(t2) = h(t1 t2)
  {
    std::vector<std::pair<RingElem, RingElem>> dom;
    if (units.size() * units.size() <= sample_size)
      for (const auto& t1 : units)
        for (const auto& t2 : units) dom.emplace_back(t1, t2);
    else
      for (std::size_t i = 0; i < sample_size; ++i)
        dom.emplace_back(ring.random_unit(rng), ring.random_unit(rng));
    report.items.push_back(detail::run_relation<std::pair<RingElem, RingElem>>(
        "R1 h(t1)h(t2)=h(t1t2)", dom, sample_size, rng,
        [&](const auto& pr) {
          return group_mul(ring, gen_h(ring, pr.first), gen_h(ring, pr.second)) ==
                 gen_h(ring, ring.mul(pr.first, pr.second));
        },
        [&](const auto& pr) {
          return "t1 index " + std::to_string(ring.index_of(pr.first)) + ", t2 index " +
                 std::to_string(ring.index_of(pr.second));
        }));
  }
  // R2: u(s1) u(s2) = u(s1 + s2)
  {
    std::vector<std::pair<RingElem, RingElem>> dom;
    if (asym.size() * asym.size() <= sample_size)
      for (const auto& s1 : asym)
        for (const auto& s2 : asym) dom.emplace_back(s1, s2);
    else
      for (std::size_t i = 0; i < sample_size; ++i)
        dom.emplace_back(ring.random_antisym(rng), ring.random_antisym(rng));
    report.items.push_back(detail::run_relation<std::pair<RingElem, RingElem>>(
        "R2 u(s1)u(s2)=u(s1+s2)", dom, sample_size, rng,
        [&](const auto& pr) {
          return group_mul(ring, gen_u(ring, pr.first), gen_u(ring, pr.second)) ==
                 gen_u(ring, ring.add(pr.first, pr.second));
        },
        [&](const auto& pr) {
          return "s1 index " + std::to_string(ring.index_of(pr.first)) + ", s2 index " +
                 std::to_string(ring.index_of(pr.second));
        }));
  }
  // R3: h(t) u(s) = u(t s t*) h(t)
  {
    std::vector<std::pair<RingElem, RingElem>> dom;
    if (units.size() * asym.size() <= sample_size)
      for (const auto& t : units)
        for (const auto& s : asym) dom.emplace_back(t, s);
    else
      for (std::size_t i = 0; i < sample_size; ++i)
        dom.emplace_back(ring.random_unit(rng), ring.random_antisym(rng));
    report.items.push_back(detail::run_relation<std::pair<RingElem, RingElem>>(
        "R3 h(t)u(s)=u(tst*)h(t)", dom, sample_size, rng,
        [&](const auto& pr) {
          const auto& [t, s] = pr;
          RingElem tst = ring.mul(ring.mul(t, s), ring.involution(t));
          return group_mul(ring, gen_h(ring, t), gen_u(ring, s)) ==
                 group_mul(ring, gen_u(ring, tst), gen_h(ring, t));
        },
        [&](const auto& pr) {
          return "t index " + std::to_string(ring.index_of(pr.first)) + ", s index " +
                 std::to_string(ring.index_of(pr.second));
        }));
  }
  // R4: w^2 = 1
  {
    CheckItem item;
    item.name = "R4 w^2=1";
    item.mode = "exhaustive";
    item.checked = 1;
    item.pass = group_mul(ring, W, W) == I;
    report.items.push_back(item);
  }
  // R5: h(t) w = w h(t*^-1)
  report.items.push_back(detail::run_relation<RingElem>(
      "R5 h(t)w=wh(t*^-1)", units, sample_size, rng,
      [&](const RingElem& t) {
        return group_mul(ring, gen_h(ring, t), W) ==
               group_mul(ring, W, gen_h(ring, ring.inv(ring.involution(t))));
      },
      describe1));
  // R6: w u(t^-1) w u(-t) w u(t^-1) = h(-t), for antisymmetric units t
  report.items.push_back(detail::run_relation<RingElem>(
      "R6 wu(t^-1)wu(-t)wu(t^-1)=h(-t)", asym_units, sample_size, rng,
      [&](const RingElem& t) {
        RingElem ti = ring.inv(t);
        GroupElem lhs = gen_w(ring);
        lhs = group_mul(ring, lhs, gen_u(ring, ti));
        lhs = group_mul(ring, lhs, W);
        lhs = group_mul(ring, lhs, gen_u(ring, ring.neg(t)));
        lhs = group_mul(ring, lhs, W);
        lhs = group_mul(ring, lhs, gen_u(ring, ti));
        return lhs == gen_h(ring, ring.neg(t));
      },
      describe1));

  report.finalize();
  return report;
}

}  // namespace weilrep
