#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "weilrep/io.hpp"

using namespace weilrep;

TEST_CASE("cyclo json round-trip", "[io]") {
  auto ctx = CycloCtx::make(12);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> coeff(-20, 20);
  for (int it = 0; it < 50; ++it) {
    CycloNum v = CycloNum::zero(ctx);
    for (unsigned i = 0; i < ctx->degree(); ++i) {
      Rat q(coeff(rng), 1 + std::abs(coeff(rng)));
      q.canonicalize();
      v += CycloNum::from_rational(ctx, q) * CycloNum::root_of_unity(ctx, static_cast<long>(i));
    }
    REQUIRE(cyclo_from_json(cyclo_to_json(v)) == v);
  }
  // big numerators survive the decimal-string path
  CycloNum big = CycloNum::from_rational(ctx, Rat(Int("123456789012345678901234567890"), Int(7)));
  CHECK(cyclo_from_json(cyclo_to_json(big)) == big);
}

TEST_CASE("cyclo display string", "[io]") {
  auto ctx = CycloCtx::make(3);
  CHECK(cyclo_to_string(CycloNum::from_int(ctx, 9)) == "9");
  CHECK(cyclo_to_string(CycloNum::from_rational(ctx, Rat(-1, 3))) == "-1/3");
  CHECK(cyclo_to_string(CycloNum::root_of_unity(ctx, 1)) == "z");
}

TEST_CASE("float rendering", "[io]") {
  auto ctx = CycloCtx::make(4);
  Json j = cyclo_to_float_json(CycloNum::root_of_unity(ctx, 1));  // i
  CHECK(std::abs(j["re"].get<double>()) < 1e-12);
  CHECK(std::abs(j["im"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("ring element json round-trip", "[io]") {
  RingConfig r(FieldConfig(3, 2), 2);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 50; ++it) {
    RingElem a = r.random_elem(rng);
    REQUIRE(ring_from_json(r, ring_to_json(a)) == a);
  }
  CHECK_THROWS_AS(ring_from_json(r, Json{{"coeffs", Json::array()}}), std::invalid_argument);
}

TEST_CASE("polynomial text parser, t = 1", "[io]") {
  RingConfig r(FieldConfig(3, 1), 3);
  const FieldConfig& f = r.field();
  CHECK(parse_ring_elem(r, "1") == r.one());
  CHECK(parse_ring_elem(r, "D") == r.from_K_const(f.K_delta()));
  CHECK(parse_ring_elem(r, "x") == r.monomial(f.K_one(), 1));
  CHECK(parse_ring_elem(r, "x^2") == r.monomial(f.K_one(), 2));

  RingElem expect = r.add(r.one(), r.monomial(f.K_scalar_mul(2, f.K_delta()), 1));
  expect = r.add(expect, r.monomial(f.K_one(), 2));
  CHECK(parse_ring_elem(r, "1+2*D*x+x^2") == expect);
  CHECK(parse_ring_elem(r, " 1 + 2*D*x + x^2 ") == expect);

  // subtraction and reduction mod p
  CHECK(parse_ring_elem(r, "4") == r.one());
  CHECK(parse_ring_elem(r, "-1") == r.neg(r.one()));
  CHECK(parse_ring_elem(r, "1-x") == r.sub(r.one(), r.monomial(f.K_one(), 1)));
  // D*D = delta = 2 at q = 3
  CHECK(parse_ring_elem(r, "D*D") == r.from_K_const(f.K_from_parts(f.from_int(2), f.zero())));
  // truncation: x^3 = 0 at n = 3
  CHECK(r.is_zero(parse_ring_elem(r, "x^3")));

  CHECK_THROWS_AS(parse_ring_elem(r, "1+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring_elem(r, "y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring_elem(r, "x^-1"), std::invalid_argument);
}

TEST_CASE("polynomial text parser, t = 2 digit lists", "[io]") {
  RingConfig r(FieldConfig(3, 2), 2);
  const FieldConfig& f = r.field();
  FqElem y = f.fq_element(3);  // digits (0,1)
  CHECK(parse_ring_elem(r, "[0,1]") == r.from_K_const(KElem{y, f.zero()}));
  CHECK(parse_ring_elem(r, "[1,2]+[0,1]*x") ==
        r.add(r.from_K_const(KElem{f.fq_element(7), f.zero()}),
              r.monomial(KElem{y, f.zero()}, 1)));
  CHECK(parse_ring_elem(r, "[0,1]*D*x") == r.monomial(KElem{f.zero(), y}, 1));
  CHECK_THROWS_AS(parse_ring_elem(r, "[1]"), std::invalid_argument);
}

TEST_CASE("group and word json", "[io]") {
  RingConfig r(FieldConfig(3, 1), 2);
  std::mt19937_64 rng(12);
  for (int it = 0; it < 20; ++it) {
    GroupElem g = random_member(r, rng);
    REQUIRE(group_from_json(r, group_to_json(g)) == g);
    BruhatWord word = bruhat_factorize(r, g);
    REQUIRE(word_from_json(r, word_to_json(word)) == word);
  }
  CHECK_THROWS_AS(word_from_json(r, Json::array({"Q"})), std::invalid_argument);
}

TEST_CASE("operator json forms", "[io]") {
  WeilDatum d(RingConfig(FieldConfig(3, 1), 1));
  const RingConfig& r = d.ring();
  Json diag = operator_to_json(op_u(d, r.from_K_const(r.field().K_delta())));
  CHECK(diag["form"] == "diagonal");
  CHECK(diag["entries"].size() == 9);

  Json mono = operator_to_json(op_h(d, r.from_K_const(r.field().K_delta())));
  CHECK(mono["form"] == "monomial");
  CHECK(mono["perm"].size() == 9);

  Json dense = operator_to_json(op_w(d));
  CHECK(dense["form"] == "dense");
  CHECK(dense["rows"].size() == 9);
  // column a = 0 entries are all -1/3
  CHECK(dense["rows"][4][0] == cyclo_to_json(CycloNum::from_rational(d.ctx(), Rat(-1, 3))));

  Json dense_float = operator_to_json(op_w(d), true);
  CHECK(dense_float["rows"][0][0].contains("re"));
}

TEST_CASE("report json", "[io]") {
  CheckReport report;
  report.suite = "demo";
  report.items.push_back(CheckItem{"law", "exhaustive", 10, true, ""});
  report.items.push_back(CheckItem{"law2", "sampled", 5, false, "witness"});
  report.finalize();
  Json j = report_to_json(report);
  CHECK(j["suite"] == "demo");
  CHECK(j["pass"] == false);
  CHECK(j["items"][1]["counterexample"] == "witness");
  CHECK_FALSE(j["items"][0].contains("counterexample"));
}
