// Acceptance suite: one pass/fail line per criterion, exact checks only.
// Usage: acceptance [path-to-weilrep-cli]   (the CLI path enables the
// byte-identical reproducibility criterion; it is also read from WEILREP_CLI).

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "weilrep/decomposition.hpp"
#include "weilrep/io.hpp"

using namespace weilrep;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string description;
  double limit_seconds;
  bool pass = false;
  double elapsed = 0;
  std::string detail;
};

RingConfig make_ring(long p, long t, long n) { return RingConfig(FieldConfig(p, t), n); }

std::string run_cli(const std::string& cli, const std::string& args, int& exit_code) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

bool criterion_cardinalities(std::string& detail) {
  struct Cfg { long p, t, n; };
  for (Cfg cfg : {Cfg{3, 1, 1}, Cfg{3, 1, 2}, Cfg{3, 1, 3}, Cfg{3, 2, 1}, Cfg{3, 2, 2}}) {
    RingConfig r = make_ring(cfg.p, cfg.t, cfg.n);
    Int units(static_cast<unsigned long>(r.enumerate(ElemKind::Units).size()));
    Int sym(static_cast<unsigned long>(r.enumerate(ElemKind::Sym).size()));
    Int asym(static_cast<unsigned long>(r.enumerate(ElemKind::Asym).size()));
    if (units != r.unit_count() || sym != r.sym_count() || asym != r.sym_count()) {
      detail = "mismatch at (" + std::to_string(cfg.p) + "," + std::to_string(cfg.t) + "," +
               std::to_string(cfg.n) + ")";
      return false;
    }
  }
  detail = "exhaustive at (3,1,1..3), (3,2,1..2)";
  return true;
}

bool criterion_group_order(std::string& detail) {
  RingConfig r = make_ring(3, 1, 1);
  std::size_t brute = enumerate_group(r).size();
  if (brute != 96 || group_order(r) != 96) {
    detail = "brute-force count " + std::to_string(brute);
    return false;
  }
  std::ostringstream os;
  os << "brute-force 96 at (3,1,1); formulas:";
  struct Cfg { long p, t, n; };
  for (Cfg cfg : {Cfg{3, 1, 1}, Cfg{3, 1, 2}, Cfg{3, 1, 3}, Cfg{3, 2, 1}, Cfg{3, 2, 2}}) {
    os << " (" << cfg.p << "," << cfg.t << "," << cfg.n
       << ")=" << group_order(make_ring(cfg.p, cfg.t, cfg.n)).get_str();
  }
  detail = os.str();
  return true;
}

bool criterion_bruhat(std::string& detail) {
  RingConfig r1 = make_ring(3, 1, 1);
  for (const GroupElem& g : enumerate_group(r1)) {
    if (eval_word(r1, bruhat_factorize(r1, g)) != g) {
      detail = "round-trip failed at (3,1,1)";
      return false;
    }
  }
  RingConfig r2 = make_ring(3, 1, 2);
  std::mt19937_64 rng(7);
  int cases[3] = {0, 0, 0};
  for (int it = 0; it < 1000; ++it) {
    GroupElem g = random_member(r2, rng);
    int c = r2.is_zero(g.c) ? 0 : (r2.is_unit(g.c) ? 1 : 2);
    ++cases[c];
    if (eval_word(r2, bruhat_factorize(r2, g)) != g) {
      detail = "round-trip failed at (3,1,2), case " + std::to_string(c);
      return false;
    }
  }
  if (cases[0] == 0 || cases[1] == 0 || cases[2] == 0) {
    detail = "case coverage hole";
    return false;
  }
  detail = "96 exhaustive + 1000 seeded (cases " + std::to_string(cases[0]) + "/" +
           std::to_string(cases[1]) + "/" + std::to_string(cases[2]) + ")";
  return true;
}

bool criterion_presentation(std::string& detail) {
  for (long n : {1L, 2L}) {
    CheckReport report = verify_presentation(make_ring(3, 1, n), 1000000, 1);
    for (const CheckItem& item : report.items) {
      if (!item.pass || item.mode != "exhaustive") {
        detail = "n=" + std::to_string(n) + " " + item.name + " " + item.counterexample;
        return false;
      }
    }
  }
  detail = "all six relations exhaustive at (3,1,1) and (3,1,2)";
  return true;
}

bool criterion_data_conditions(std::string& detail) {
  for (long n : {1L, 2L}) {
    WeilDatum datum(make_ring(3, 1, n));
    CheckReport report = datum.check_data_conditions(1000, 1);
    for (const CheckItem& item : report.items) {
      if (!item.pass || item.mode != "exhaustive") {
        detail = "n=" + std::to_string(n) + " " + item.name + " " + item.counterexample;
        return false;
      }
    }
  }
  detail = "(a)-(h) exhaustive at (3,1,1) and (3,1,2), witnesses for every nonzero a";
  return true;
}

bool criterion_norm_character(std::string& detail) {
  for (long t : {1L, 2L}) {
    FieldConfig f(3, t);
    Int q(f.q());
    for (uint64_t i = 0; i < static_cast<uint64_t>(f.q()); ++i) {
      FqElem lam = f.fq_element(i);
      CycloNum expect = CycloNum::from_rational(
          f.ctx_p(), i == 0 ? Rat(q * q) : Rat(-q));
      if (f.norm_character_sum(lam) != expect) {
        detail = "q=" + std::to_string(f.q()) + ", lambda index " + std::to_string(i);
        return false;
      }
    }
  }
  detail = "q^2 at lambda=0 and -q otherwise, every lambda, q in {3,9}";
  return true;
}

bool criterion_gauss(std::string& detail) {
  for (long n : {1L, 2L}) {
    WeilDatum datum(make_ring(3, 1, n));
    long expect = n % 2 == 1 ? -3 : 9;
    auto asym_units = datum.ring().enumerate(ElemKind::AsymUnits);
    for (const RingElem& t : asym_units) {
      if (datum.gauss_sum(t) != CycloNum::from_int(datum.ctx(), expect)) {
        detail = "n=" + std::to_string(n) + ", t index " +
                 std::to_string(datum.ring().index_of(t));
        return false;
      }
    }
  }
  detail = "-3 over 2 units at (3,1,1); 9 over 6 units at (3,1,2)";
  return true;
}

bool criterion_representation(std::string& detail) {
  // operator relations
  {
    WeilDatum d1(make_ring(3, 1, 1));
    CheckReport rel1 = verify_operator_relations(d1, 1000000, 1);
    for (const CheckItem& item : rel1.items)
      if (!item.pass || item.mode != "exhaustive") {
        detail = "(3,1,1) " + item.name;
        return false;
      }
    WeilDatum d2(make_ring(3, 1, 2));
    CheckReport rel2 = verify_operator_relations(d2, 60, 2);
    for (const CheckItem& item : rel2.items)
      if (!item.pass) {
        detail = "(3,1,2) " + item.name + " " + item.counterexample;
        return false;
      }
    // rho_w^2 = I and c^2 q^2n = 1
    for (const WeilDatum* d : {&d1, &d2}) {
      Operator W = op_w(*d);
      if (W * W != Operator::identity(d->ctx(), static_cast<uint32_t>(d->ring().size()))) {
        detail = "rho_w^2 != I";
        return false;
      }
      Rat v = d->c() * d->c() * Rat(Int(d->ring().size()));
      v.canonicalize();
      if (v != 1) {
        detail = "c^2 q^2n != 1";
        return false;
      }
    }
  }
  // homomorphism, exhaustive over all 96^2 pairs at (3,1,1)
  {
    WeilDatum d(make_ring(3, 1, 1));
    const RingConfig& r = d.ring();
    std::vector<GroupElem> members = enumerate_group(r);
    std::map<std::array<uint64_t, 4>, std::size_t> index;
    std::vector<Operator> ops;
    ops.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const GroupElem& g = members[i];
      index[{r.index_of(g.a), r.index_of(g.b), r.index_of(g.c), r.index_of(g.d)}] = i;
      ops.push_back(rho(d, g).to_dense());
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        GroupElem gh = group_mul(r, members[i], members[j]);
        std::size_t k = index.at({r.index_of(gh.a), r.index_of(gh.b), r.index_of(gh.c),
                                  r.index_of(gh.d)});
        if (ops[i] * ops[j] != ops[k]) {
          detail = "homomorphism failed on pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
          return false;
        }
      }
    }
  }
  // 200 seeded pairs at (3,1,2)
  {
    WeilDatum d(make_ring(3, 1, 2));
    CheckReport hom = verify_homomorphism(d, 200, 7);
    if (!hom.pass) {
      detail = "(3,1,2) " + hom.items[0].counterexample;
      return false;
    }
  }
  detail = "relations + 96^2 exhaustive pairs at (3,1,1) + 200 seeded pairs at (3,1,2)";
  return true;
}

bool criterion_unitary(std::string& detail) {
  struct Cfg { long p, t, n; uint64_t order; };
  for (Cfg cfg : {Cfg{3, 1, 1, 4}, Cfg{3, 1, 2, 12}, Cfg{3, 1, 4, 108}, Cfg{3, 2, 2, 90}}) {
    RingConfig r = make_ring(cfg.p, cfg.t, cfg.n);
    WeilDatum datum(r);
    UnitaryGroup U(r);
    if (U.order() != cfg.order) {
      detail = "|U| mismatch at n=" + std::to_string(cfg.n);
      return false;
    }
    CheckReport report = U.verify(datum, 20000, 1);
    for (const CheckItem& item : report.items) {
      if (!item.pass) {
        detail = "(" + std::to_string(cfg.p) + "," + std::to_string(cfg.t) + "," +
                 std::to_string(cfg.n) + ") " + item.name + " " + item.counterexample;
        return false;
      }
      if (item.name.rfind("gamma", 0) == 0 && cfg.n <= 2 && cfg.t == 1 &&
          item.mode != "exhaustive") {
        detail = "gamma invariance not exhaustive at (3,1," + std::to_string(cfg.n) + ")";
        return false;
      }
    }
  }
  detail = "|U|, reconstruction, H-orders, intersections at (3,1,{1,2,4}) and (3,2,2)";
  return true;
}

bool criterion_decomposition(std::string& detail) {
  {
    RingConfig r = make_ring(3, 1, 1);
    WeilDatum datum(r);
    UnitaryGroup U(r);
    Decomposition dec(datum, U);
    std::multiset<uint64_t> dims;
    uint64_t total = 0;
    for (const auto& [lam, dim] : dec.dimension_table()) {
      dims.insert(dim);
      total += dim;
    }
    if (total != 9 || dims != std::multiset<uint64_t>{2, 2, 2, 3}) {
      detail = "(3,1,1) dims are not {3,2,2,2}";
      return false;
    }
    CheckReport report = dec.verify(1000000, 1);
    for (const CheckItem& item : report.items)
      if (!item.pass || item.mode != "exhaustive") {
        detail = "(3,1,1) " + item.name + " " + item.counterexample;
        return false;
      }
  }
  {
    RingConfig r = make_ring(3, 1, 2);
    WeilDatum datum(r);
    UnitaryGroup U(r);
    Decomposition dec(datum, U);
    uint64_t total = 0;
    for (const auto& [lam, dim] : dec.dimension_table()) total += dim;
    if (total != 81) {
      detail = "(3,1,2) dimension sum " + std::to_string(total);
      return false;
    }
    CheckReport report = dec.verify(40, 2);  // sampled generators
    for (const CheckItem& item : report.items)
      if (!item.pass) {
        detail = "(3,1,2) " + item.name + " " + item.counterexample;
        return false;
      }
  }
  detail = "dims {3,2,2,2} + exhaustive invariance at (3,1,1); sum 81 + sampled at (3,1,2)";
  return true;
}

bool criterion_reproducibility(const std::string& cli, std::string& detail) {
  if (cli.empty()) {
    detail = "CLI path not provided (argv[1] or WEILREP_CLI)";
    return false;
  }
  int rc1 = 0, rc2 = 0;
  std::string out1 = run_cli(cli, "verify all --p 3 --t 1 --n 1 --seed 7", rc1);
  std::string out2 = run_cli(cli, "verify all --p 3 --t 1 --n 1 --seed 7", rc2);
  if (rc1 != 0 || rc2 != 0) {
    detail = "verify all exited with " + std::to_string(rc1) + "/" + std::to_string(rc2);
    return false;
  }
  if (out1.empty() || out1 != out2) {
    detail = "outputs differ or are empty";
    return false;
  }
  detail = "two runs, " + std::to_string(out1.size()) + " bytes, byte-identical";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  if (argc > 1) cli = argv[1];
  if (cli.empty()) {
    if (const char* env = std::getenv("WEILREP_CLI")) cli = env;
  }

  std::vector<Criterion> criteria = {
      {1, "cardinalities |A^x|, |A^sym|, |A^asym|", 10},
      {2, "group order: brute force 96 and formula values", 5},
      {3, "Bruhat round-trip with case coverage", 30},
      {4, "presentation relations, exhaustive", 60},
      {5, "data conditions (a)-(h), exhaustive", 120},
      {6, "norm character sums at q in {3,9}", 60},
      {7, "gauss sums over all antisymmetric units", 60},
      {8, "representation: relations + homomorphism", 600},
      {9, "unitary group structure and decomposition", 600},
      {10, "Lambda-homogeneous decomposition", 600},
      {11, "byte-identical verify all reports", 120},
  };

  bool all_pass = true;
  for (Criterion& crit : criteria) {
    auto start = Clock::now();
    try {
      switch (crit.id) {
        case 1: crit.pass = criterion_cardinalities(crit.detail); break;
        case 2: crit.pass = criterion_group_order(crit.detail); break;
        case 3: crit.pass = criterion_bruhat(crit.detail); break;
        case 4: crit.pass = criterion_presentation(crit.detail); break;
        case 5: crit.pass = criterion_data_conditions(crit.detail); break;
        case 6: crit.pass = criterion_norm_character(crit.detail); break;
        case 7: crit.pass = criterion_gauss(crit.detail); break;
        case 8: crit.pass = criterion_representation(crit.detail); break;
        case 9: crit.pass = criterion_unitary(crit.detail); break;
        case 10: crit.pass = criterion_decomposition(crit.detail); break;
        case 11: crit.pass = criterion_reproducibility(cli, crit.detail); break;
      }
    } catch (const std::exception& e) {
      crit.pass = false;
      crit.detail = std::string("exception: ") + e.what();
    }
    crit.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (crit.pass && crit.elapsed > crit.limit_seconds) {
      crit.pass = false;
      crit.detail += " [runtime limit " + std::to_string(crit.limit_seconds) + " s exceeded]";
    }
    all_pass = all_pass && crit.pass;
    std::printf("[%s] %2d. %s (%.2f s) %s\n", crit.pass ? "PASS" : "FAIL", crit.id,
                crit.description.c_str(), crit.elapsed, crit.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
