#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "weilrep/decomposition.hpp"

using namespace weilrep;

TEST_CASE("orbits at (3,1,1)", "[decomposition]") {
  RingConfig r(FieldConfig(3, 1), 1);
  WeilDatum d(r);
  UnitaryGroup U(r);
  Decomposition dec(d, U);
  const OrbitTable& table = dec.orbits();
  REQUIRE(table.orbits.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& orbit : table.orbits) sizes.push_back(orbit.members.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 4, 4});
  // orbit of 0 has stabilizer all of U
  CHECK(table.orbits[0].rep_index == 0);
  CHECK(table.orbits[0].stabilizer.size() == U.order());
  for (const auto& orbit : table.orbits) {
    CHECK(orbit.members.size() * orbit.stabilizer.size() == U.order());
  }
}

TEST_CASE("dimensions at (3,1,1): {3,2,2,2}", "[decomposition]") {
  RingConfig r(FieldConfig(3, 1), 1);
  WeilDatum d(r);
  UnitaryGroup U(r);
  Decomposition dec(d, U);
  std::vector<uint64_t> dims;
  for (const auto& [lam, dim] : dec.dimension_table()) dims.push_back(dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<uint64_t>{2, 2, 2, 3});
  // trivial character counts every orbit
  CHECK(dec.dim_W(U.characters()[0]) == 3);
}

TEST_CASE("dimension sums", "[decomposition]") {
  struct Cfg { long p, t, n; };
  for (Cfg cfg : {Cfg{3, 1, 1}, Cfg{3, 1, 2}, Cfg{3, 2, 1}}) {
    RingConfig r(FieldConfig(cfg.p, cfg.t), cfg.n);
    WeilDatum d(r);
    UnitaryGroup U(r);
    Decomposition dec(d, U);
    uint64_t total = 0;
    for (const auto& [lam, dim] : dec.dimension_table()) total += dim;
    INFO("config (" << cfg.p << "," << cfg.t << "," << cfg.n << ")");
    REQUIRE(total == r.size());
  }
}

TEST_CASE("frozen dimension multiset at (3,1,2)", "[decomposition]") {
  RingConfig r(FieldConfig(3, 1), 2);
  WeilDatum d(r);
  UnitaryGroup U(r);
  Decomposition dec(d, U);
  std::map<uint64_t, int> hist;
  for (const auto& [lam, dim] : dec.dimension_table()) hist[dim]++;
  // derived by independent orbit/stabilizer enumeration
  CHECK(hist == std::map<uint64_t, int>{{6, 8}, {8, 3}, {9, 1}});
}

TEST_CASE("dimensions are independent of orbit enumeration order", "[decomposition]") {
  RingConfig r(FieldConfig(3, 1), 2);
  WeilDatum d(r);
  UnitaryGroup U(r);
  Decomposition dec(d, U);
  // recompute each dimension from reversed orbit data
  auto orbits = dec.orbits().orbits;
  std::reverse(orbits.begin(), orbits.end());
  for (const UCharacter& lam : U.characters()) {
    uint64_t dim = 0;
    for (const auto& orbit : orbits)
      if (U.trivial_on(lam, orbit.stabilizer)) ++dim;
    REQUIRE(dim == dec.dim_W(lam));
  }
}

TEST_CASE("projectors at (3,1,1)", "[decomposition]") {
  RingConfig r(FieldConfig(3, 1), 1);
  WeilDatum d(r);
  UnitaryGroup U(r);
  Decomposition dec(d, U);
  CHECK(dec.big_ctx()->conductor() == 12);  // lcm(p = 3, exp U = 4)
  auto chars = U.characters();
  Operator sum = Operator::dense_zero(dec.big_ctx(), 9);
  bool first = true;
  for (const UCharacter& lam : chars) {
    Operator P = dec.projector(lam);
    REQUIRE(P * P == P);
    REQUIRE(P.trace() == CycloNum::from_int(dec.big_ctx(), static_cast<long>(dec.dim_W(lam))));
    sum = first ? P : add_dense(sum, P);
    first = false;
  }
  CHECK(sum == Operator::identity(dec.big_ctx(), 9).to_dense());
}

TEST_CASE("invariance at (3,1,1), exhaustive generators", "[decomposition]") {
  RingConfig r(FieldConfig(3, 1), 1);
  WeilDatum d(r);
  UnitaryGroup U(r);
  Decomposition dec(d, U);
  Operator W = op_w(d);
  for (const UCharacter& lam : U.characters()) {
    Operator P = dec.projector(lam);
    REQUIRE(dec.commutes_with(P, W));
    for (const RingElem& t : r.enumerate(ElemKind::Units))
      REQUIRE(dec.commutes_with(P, op_h(d, t)));
    for (const RingElem& s : r.enumerate(ElemKind::Asym))
      REQUIRE(dec.commutes_with(P, op_u(d, s)));
  }
}

TEST_CASE("verification report", "[decomposition]") {
  RingConfig r(FieldConfig(3, 1), 1);
  WeilDatum d(r);
  UnitaryGroup U(r);
  Decomposition dec(d, U);
  CheckReport report = dec.verify(100000, 2);
  for (const CheckItem& item : report.items) {
    INFO(item.name << " " << item.counterexample);
    CHECK(item.pass);
  }
  REQUIRE(report.pass);
}

TEST_CASE("sampled invariance at (3,1,2)", "[decomposition]") {
  RingConfig r(FieldConfig(3, 1), 2);
  WeilDatum d(r);
  UnitaryGroup U(r);
  Decomposition dec(d, U);
  CHECK(dec.big_ctx()->conductor() == 12);  // lcm(3, 12)
  std::mt19937_64 rng(11);
  Operator W = op_w(d);
  auto chars = U.characters();
  // all characters against w plus a couple of sampled torus/unipotent args
  for (const UCharacter& lam : chars) {
    Operator P = dec.projector(lam);
    REQUIRE(dec.commutes_with(P, W));
    REQUIRE(dec.commutes_with(P, op_h(d, r.random_unit(rng))));
    REQUIRE(dec.commutes_with(P, op_u(d, r.random_antisym(rng))));
  }
}
