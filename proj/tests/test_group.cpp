#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "weilrep/group.hpp"

using namespace weilrep;

namespace {
RingConfig make_ring(long p, long t, long n) { return RingConfig(FieldConfig(p, t), n); }

int factorization_case(const RingConfig& ring, const GroupElem& g) {
  if (ring.is_zero(g.c)) return 0;
  if (ring.is_unit(g.c)) return 1;
  return 2;
}
}  // namespace

TEST_CASE("det_star", "[group]") {
  RingConfig r = make_ring(3, 1, 2);
  CHECK(det_star(r, group_identity(r)) == r.one());
  CHECK(det_star(r, gen_w(r)) == r.one());
  for (const RingElem& t : r.enumerate(ElemKind::Units)) {
    CHECK(det_star(r, gen_h(r, t)) == r.one());
  }
}

TEST_CASE("membership", "[group]") {
  RingConfig r = make_ring(3, 1, 2);
  CHECK(is_member(r, group_identity(r)));
  CHECK(is_member(r, gen_w(r)));
  for (const RingElem& t : r.enumerate(ElemKind::Units)) CHECK(is_member(r, gen_h(r, t)));
  for (const RingElem& s : r.enumerate(ElemKind::Asym)) CHECK(is_member(r, gen_u(r, s)));

  // u(s) with s symmetric nonzero is not a member
  RingElem s_sym = r.add(r.one(), r.monomial(r.field().K_delta(), 1));
  REQUIRE(r.is_symmetric(s_sym));
  GroupElem fake{r.one(), s_sym, r.zero(), r.one()};
  CHECK_FALSE(is_member(r, fake));
}

TEST_CASE("generator identities", "[group]") {
  RingConfig r = make_ring(3, 1, 2);
  CHECK(gen_h(r, r.one()) == group_identity(r));
  CHECK(gen_u(r, r.zero()) == group_identity(r));
  CHECK(group_mul(r, gen_w(r), gen_w(r)) == group_identity(r));
  CHECK_THROWS_AS(gen_h(r, r.monomial(r.field().K_one(), 1)), std::domain_error);
  CHECK_THROWS_AS(gen_u(r, r.one()), std::domain_error);
}

TEST_CASE("mul and inv", "[group]") {
  RingConfig r = make_ring(3, 1, 2);
  std::mt19937_64 rng(14);
  for (int it = 0; it < 100; ++it) {
    GroupElem g = random_member(r, rng);
    REQUIRE(is_member(r, g));
    REQUIRE(group_mul(r, g, group_inv(r, g)) == group_identity(r));
  }
  for (int it = 0; it < 50; ++it) {
    RingElem t1 = r.random_unit(rng), t2 = r.random_unit(rng);
    REQUIRE(group_mul(r, gen_h(r, t1), gen_h(r, t2)) == gen_h(r, r.mul(t1, t2)));
    RingElem s = r.random_antisym(rng);
    REQUIRE(group_inv(r, gen_u(r, s)) == gen_u(r, r.neg(s)));
  }
}

TEST_CASE("eval_word", "[group]") {
  RingConfig r = make_ring(3, 1, 2);
  CHECK(eval_word(r, BruhatWord{}) == group_identity(r));
  CHECK(eval_word(r, BruhatWord{{TokW{}, TokW{}}}) == group_identity(r));
  for (const RingElem& t : r.enumerate(ElemKind::Units)) {
    GroupElem lhs = eval_word(r, BruhatWord{{TokH{t}, TokW{}}});
    GroupElem rhs = eval_word(r, BruhatWord{{TokW{}, TokH{r.inv(r.involution(t))}}});
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("canonical factorizations of the generators", "[group]") {
  RingConfig r = make_ring(3, 1, 2);
  BruhatWord id_word = bruhat_factorize(r, group_identity(r));
  CHECK(id_word == BruhatWord{{TokH{r.one()}, TokU{r.zero()}}});
  BruhatWord w_word = bruhat_factorize(r, gen_w(r));
  CHECK(w_word == BruhatWord{{TokH{r.one()}, TokU{r.zero()}, TokW{}, TokU{r.zero()}}});
  CHECK_THROWS_AS(bruhat_factorize(r, GroupElem{r.one(), r.one(), r.zero(), r.one()}),
                  std::domain_error);
}

TEST_CASE("factorization round-trip exhaustive at (3,1,1)", "[group]") {
  RingConfig r = make_ring(3, 1, 1);
  auto members = enumerate_group(r);
  REQUIRE(members.size() == 96);
  for (const GroupElem& g : members) {
    REQUIRE(eval_word(r, bruhat_factorize(r, g)) == g);
  }
}

TEST_CASE("factorization round-trip sampled at (3,1,2) with case coverage", "[group]") {
  RingConfig r = make_ring(3, 1, 2);
  std::mt19937_64 rng(7);
  int case_count[3] = {0, 0, 0};
  for (int it = 0; it < 1000; ++it) {
    GroupElem g = random_member(r, rng);
    case_count[factorization_case(r, g)]++;
    BruhatWord word = bruhat_factorize(r, g);
    REQUIRE(word.tokens.size() <= 5);
    REQUIRE(eval_word(r, word) == g);
  }
  CHECK(case_count[0] > 0);
  CHECK(case_count[1] > 0);
  CHECK(case_count[2] > 0);

  // constructed case-(iii) member: [[1, 0], [x, 1]] has c = x nonzero non-unit
  GroupElem g{r.one(), r.zero(), r.monomial(r.field().K_one(), 1), r.one()};
  REQUIRE(is_member(r, g));
  REQUIRE(factorization_case(r, g) == 2);
  CHECK(eval_word(r, bruhat_factorize(r, g)) == g);
}

TEST_CASE("presentation relations", "[group]") {
  for (long n : {1L, 2L}) {
    RingConfig r = make_ring(3, 1, n);
    CheckReport report = verify_presentation(r, 100000, 1);
    INFO("n = " << n);
    for (const CheckItem& item : report.items) {
      INFO(item.name << " mode=" << item.mode << " checked=" << item.checked
                     << " counterexample=" << item.counterexample);
      CHECK(item.pass);
      CHECK(item.mode == "exhaustive");
    }
    REQUIRE(report.pass);
  }
}

TEST_CASE("R6 both sides at t = Delta, (3,1,1)", "[group]") {
  RingConfig r = make_ring(3, 1, 1);
  RingElem t = r.from_K_const(r.field().K_delta());
  RingElem ti = r.inv(t);
  GroupElem lhs = gen_w(r);
  lhs = group_mul(r, lhs, gen_u(r, ti));
  lhs = group_mul(r, lhs, gen_w(r));
  lhs = group_mul(r, lhs, gen_u(r, r.neg(t)));
  lhs = group_mul(r, lhs, gen_w(r));
  lhs = group_mul(r, lhs, gen_u(r, ti));
  CHECK(lhs == gen_h(r, r.neg(t)));
}

TEST_CASE("group order", "[group]") {
  RingConfig r1 = make_ring(3, 1, 1);
  CHECK(group_order(r1) == 96);
  CHECK(Int(enumerate_group(r1).size()) == 96);
  RingConfig r2 = make_ring(3, 1, 2);
  CHECK(group_order(r2) == 7776);
  RingConfig r4 = make_ring(3, 1, 4);
  CHECK_THROWS_AS(enumerate_group(r4), resource_error);
}

TEST_CASE("column orbit decomposition", "[group]") {
  for (long n : {1L, 2L}) {
    RingConfig r = make_ring(3, 1, n);
    ColumnOrbitCounts counts = count_column_orbits(r);
    Int q(3);
    Int expected = (q * q - 1) * int_pow(q, static_cast<unsigned long>(3 * n - 3)) * (q + 1);
    CHECK(counts.total() == expected);
    // O1 = units x asym; O2 = units x (asym non-units)
    Int o1 = r.unit_count() * r.sym_count();
    CHECK(counts.o1 == o1);
  }
}

TEST_CASE("antisymmetric shift lemma with v = Delta", "[group]") {
  // For non-invertible antisymmetric a, b: a - v^-1 and b + v are
  // antisymmetric units when v = Delta.
  RingConfig r = make_ring(3, 1, 2);
  RingElem v = r.from_K_const(r.field().K_delta());
  RingElem vi = r.inv(v);
  REQUIRE(r.is_antisymmetric(vi));
  for (const RingElem& a : r.enumerate(ElemKind::Asym)) {
    if (r.is_unit(a)) continue;
    for (const RingElem& b : r.enumerate(ElemKind::Asym)) {
      if (r.is_unit(b)) continue;
      RingElem x = r.sub(a, vi), y = r.add(b, v);
      REQUIRE((r.is_antisymmetric(x) && r.is_unit(x)));
      REQUIRE((r.is_antisymmetric(y) && r.is_unit(y)));
    }
  }
}
