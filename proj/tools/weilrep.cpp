// weilrep: exact construction and verification of the Weil representation of
// SL*1(2, K[x]/<x^n>) with a second class involution, plus its decomposition
// under the unitary group.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "weilrep/io.hpp"

namespace {

using namespace weilrep;

struct CommonOpts {
  long p = 3;
  long t = 1;
  long n = 1;
  std::string modulus;   // comma-separated coefficients, low degree first
  std::string delta_sq;  // comma-separated digits
  uint64_t seed = 0;
  std::size_t sample_size = 200;
  std::string output;
  bool float_render = false;
  unsigned threads = 0;  // 0: keep default / env
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--p", opts.p, "odd prime p");
  cmd->add_option("--t", opts.t, "extension degree t of k over F_p");
  cmd->add_option("--n", opts.n, "truncation level n of A_n = K[x]/<x^n>");
  cmd->add_option("--modulus", opts.modulus,
                  "modulus of k over F_p, comma-separated coefficients low degree first");
  cmd->add_option("--delta-sq", opts.delta_sq, "nonsquare delta with Delta^2 = delta, digit list");
  cmd->add_option("--seed", opts.seed, "PRNG seed for sampled checks");
  cmd->add_option("--sample-size", opts.sample_size, "sample size for non-exhaustive checks");
  cmd->add_option("--output", opts.output, "write the JSON result to this path instead of stdout");
  cmd->add_flag("--float", opts.float_render, "additionally render values as complex floats");
  cmd->add_option("--threads", opts.threads, "worker cap for dense products (default 1 or WEILREP_THREADS)");
  cmd->add_flag("--force", opts.force, "override resource guards");
}

std::vector<int32_t> parse_int_list(const std::string& text) {
  std::vector<int32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<int32_t>(std::stol(item)));
  return out;
}

FieldConfig make_field(const CommonOpts& opts) {
  std::optional<std::vector<int32_t>> modulus;
  if (!opts.modulus.empty()) modulus = parse_int_list(opts.modulus);
  std::optional<FqElem> delta;
  if (!opts.delta_sq.empty()) {
    std::vector<int32_t> digits = parse_int_list(opts.delta_sq);
    if (static_cast<long>(digits.size()) != opts.t)
      throw std::invalid_argument("--delta-sq needs exactly t digits");
    delta = FqElem{digits};
  }
  return FieldConfig(opts.p, opts.t, modulus, delta);
}

RingConfig make_ring(const CommonOpts& opts) { return RingConfig(make_field(opts), opts.n); }

void apply_threads(const CommonOpts& opts) {
  if (opts.threads > 0) {
    set_worker_count(opts.threads);
  } else if (const char* env = std::getenv("WEILREP_THREADS")) {
    set_worker_count(static_cast<unsigned>(std::strtoul(env, nullptr, 10)));
  }
}

void guard_operator_dim(const CommonOpts& opts, const RingConfig& ring) {
  if (!opts.force && ring.size() > 256)
    throw resource_error(
        "dense operators need q^(2n) <= 256 (dim " + std::to_string(ring.size()) +
        " requested); pass --force to override");
}

Json config_json(const CommonOpts& opts, const RingConfig& ring) {
  Json j;
  j["p"] = opts.p;
  j["t"] = opts.t;
  j["n"] = opts.n;
  Json mod = Json::array();
  for (int32_t c : ring.field().modulus()) mod.push_back(c);
  j["modulus"] = mod;
  j["delta_sq"] = fq_to_json(ring.field().delta_sq());
  j["seed"] = opts.seed;
  j["sample_size"] = opts.sample_size;
  return j;
}

void emit(const CommonOpts& opts, const Json& payload) {
  std::string text = payload.dump(2);
  text.push_back('\n');
  if (opts.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path " + opts.output);
    out << text;
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input path " + path);
  Json j;
  in >> j;
  return j;
}

int cmd_info(const CommonOpts& opts) {
  RingConfig ring = make_ring(opts);
  UnitaryGroup U(ring);
  Json out;
  out["config"] = config_json(opts, ring);
  Json card;
  card["ring"] = std::to_string(ring.size());
  card["units"] = ring.unit_count().get_str();
  card["sym"] = ring.sym_count().get_str();
  card["asym"] = ring.sym_count().get_str();
  out["cardinalities"] = card;
  out["group_order"] = group_order(ring).get_str();
  out["unitary_order"] = std::to_string(U.order());
  out["unitary_exponent"] = std::to_string(U.exponent());
  emit(opts, out);
  return 0;
}

int cmd_factorize(const CommonOpts& opts, const std::string& matrix_path) {
  RingConfig ring = make_ring(opts);
  GroupElem g = group_from_json(ring, read_json_file(matrix_path));
  BruhatWord word = bruhat_factorize(ring, g);
  Json out;
  out["config"] = config_json(opts, ring);
  out["word"] = word_to_json(word);
  emit(opts, out);
  return 0;
}

int cmd_rho(const CommonOpts& opts, const std::string& word_path, const std::string& matrix_path) {
  if (word_path.empty() == matrix_path.empty())
    throw std::invalid_argument("rho needs exactly one of --word or --matrix");
  RingConfig ring = make_ring(opts);
  guard_operator_dim(opts, ring);
  WeilDatum datum(ring);
  Operator op = word_path.empty()
                    ? rho(datum, group_from_json(ring, read_json_file(matrix_path)))
                    : rho_word(datum, word_from_json(ring, read_json_file(word_path)));
  Json out;
  out["config"] = config_json(opts, ring);
  out["operator"] = operator_to_json(op, opts.float_render);
  emit(opts, out);
  return 0;
}

int cmd_gauss(const CommonOpts& opts, const std::string& t_elem) {
  RingConfig ring = make_ring(opts);
  WeilDatum datum(ring);
  RingElem t = parse_ring_elem(ring, t_elem);
  CycloNum value = datum.gauss_sum(t);
  Json out;
  out["config"] = config_json(opts, ring);
  out["t"] = ring_to_json(t);
  out["exact"] = cyclo_to_string(value);
  out["float"] = cyclo_to_float_json(value);
  emit(opts, out);
  return 0;
}

int cmd_unitary(const CommonOpts& opts, bool characters) {
  RingConfig ring = make_ring(opts);
  WeilDatum datum(ring);
  UnitaryGroup U(ring);
  Json out;
  out["config"] = config_json(opts, ring);
  out["order"] = std::to_string(U.order());
  out["generic_fallback"] = U.used_generic_fallback();
  Json factors = Json::array();
  for (const CyclicFactor& fac : U.factors()) {
    Json f;
    switch (fac.label) {
      case FactorLabel::Circle: f["label"] = "circle"; break;
      case FactorLabel::H:
        f["label"] = "H(" + std::to_string(fac.i) + "," + std::to_string(fac.l) + ")";
        break;
      case FactorLabel::Generic: f["label"] = "generic"; break;
    }
    f["order"] = fac.order;
    f["generator"] = ring_to_json(fac.generator);
    factors.push_back(f);
  }
  out["factors"] = factors;
  out["verify"] = report_to_json(U.verify(datum, opts.sample_size, opts.seed));
  if (characters) {
    Json table = Json::array();
    for (const UCharacter& lam : U.characters()) {
      Json exps = Json::array();
      for (uint64_t e : lam.exponents) exps.push_back(e);
      table.push_back(exps);
    }
    out["characters"] = table;
  }
  emit(opts, out);
  return out["verify"]["pass"].get<bool>() ? 0 : 1;
}

int cmd_decompose(const CommonOpts& opts, bool verify, const std::string& projector_spec) {
  RingConfig ring = make_ring(opts);
  WeilDatum datum(ring);
  UnitaryGroup U(ring);
  Decomposition dec(datum, U);
  Json out;
  out["config"] = config_json(opts, ring);
  Json table = Json::array();
  uint64_t total = 0;
  for (const auto& [lam, dim] : dec.dimension_table()) {
    Json row;
    Json exps = Json::array();
    for (uint64_t e : lam.exponents) exps.push_back(e);
    row["lambda"] = exps;
    row["dim"] = dim;
    table.push_back(row);
    total += dim;
  }
  out["dims"] = table;
  out["total"] = total;
  out["space_dim"] = ring.size();
  bool pass = total == ring.size();
  if (verify) {
    guard_operator_dim(opts, ring);
    CheckReport report = dec.verify(opts.sample_size, opts.seed);
    out["verify"] = report_to_json(report);
    pass = pass && report.pass;
  }
  if (!projector_spec.empty()) {
    guard_operator_dim(opts, ring);
    std::vector<int32_t> exps = parse_int_list(projector_spec);
    if (exps.size() != U.factors().size())
      throw std::invalid_argument("--projector needs one exponent per cyclic factor");
    UCharacter lam;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      long order = static_cast<long>(U.factors()[j].order);
      lam.exponents.push_back(static_cast<uint64_t>(((exps[j] % order) + order) % order));
    }
    out["projector"] = operator_to_json(dec.projector(lam), opts.float_render);
  }
  emit(opts, out);
  return pass ? 0 : 1;
}

int cmd_verify(const CommonOpts& opts, const std::string& what, std::size_t pairs) {
  RingConfig ring = make_ring(opts);
  Json out;
  out["config"] = config_json(opts, ring);
  Json reports = Json::array();
  bool pass = true;
  auto run = [&](const CheckReport& report) {
    reports.push_back(report_to_json(report));
    pass = pass && report.pass;
  };
  if (what == "presentation" || what == "all") {
    run(verify_presentation(ring, opts.sample_size, opts.seed));
  }
  if (what == "data" || what == "all") {
    WeilDatum datum(ring);
    run(datum.check_data_conditions(opts.sample_size, opts.seed));
  }
  if (what == "rho" || what == "all") {
    guard_operator_dim(opts, ring);
    WeilDatum datum(ring);
    run(verify_operator_relations(datum, opts.sample_size, opts.seed));
    run(verify_homomorphism(datum, pairs, opts.seed));
  }
  if (what == "unitary" || what == "all") {
    WeilDatum datum(ring);
    UnitaryGroup U(ring);
    run(U.verify(datum, opts.sample_size, opts.seed));
  }
  out["reports"] = reports;
  out["pass"] = pass;
  emit(opts, out);
  return pass ? 0 : 1;
}

int cmd_export(const CommonOpts& opts, const std::string& what, const std::string& arg) {
  RingConfig ring = make_ring(opts);
  Json out;
  out["config"] = config_json(opts, ring);
  if (what == "w" || what == "h" || what == "u") {
    guard_operator_dim(opts, ring);
    WeilDatum datum(ring);
    Operator op = [&] {
      if (what == "w") return op_w(datum);
      if (arg.empty()) throw std::invalid_argument("export --what h|u needs --arg <element>");
      RingElem e = parse_ring_elem(ring, arg);
      return what == "h" ? op_h(datum, e) : op_u(datum, e);
    }();
    out["operator"] = operator_to_json(op, opts.float_render);
  } else if (what == "char-table") {
    UnitaryGroup U(ring);
    Json rows = Json::array();
    for (const UCharacter& lam : U.characters()) {
      Json exps = Json::array();
      for (uint64_t e : lam.exponents) exps.push_back(e);
      rows.push_back(exps);
    }
    out["orders"] = Json::array();
    for (const CyclicFactor& fac : U.factors()) out["orders"].push_back(fac.order);
    out["characters"] = rows;
  } else if (what == "dims") {
    WeilDatum datum(ring);
    UnitaryGroup U(ring);
    Decomposition dec(datum, U);
    Json rows = Json::array();
    for (const auto& [lam, dim] : dec.dimension_table()) {
      Json exps = Json::array();
      for (uint64_t e : lam.exponents) exps.push_back(e);
      rows.push_back(Json{{"lambda", exps}, {"dim", dim}});
    }
    out["dims"] = rows;
  } else {
    throw std::invalid_argument("export --what must be one of w, h, u, char-table, dims");
  }
  emit(opts, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Weil representation of SL*1(2, K[x]/<x^n>): construction, verification, decomposition"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts opts;
  std::string matrix_path, word_path, t_elem, verify_what, export_what, export_arg, projector_spec;
  std::size_t pairs = 200;
  bool characters = false, decompose_verify = false;

  CLI::App* info = app.add_subcommand("info", "cardinalities, group order, |U|");
  add_common(info, opts);

  CLI::App* factorize = app.add_subcommand("factorize", "Bruhat factorization of a member matrix");
  add_common(factorize, opts);
  factorize->add_option("--matrix", matrix_path, "path to a GroupElem JSON file")->required();

  CLI::App* rho_cmd = app.add_subcommand("rho", "operator of a word or member matrix");
  add_common(rho_cmd, opts);
  rho_cmd->add_option("--word", word_path, "path to a BruhatWord JSON file");
  rho_cmd->add_option("--matrix", matrix_path, "path to a GroupElem JSON file");

  CLI::App* gauss = app.add_subcommand("gauss", "exact Gauss sum over the ring");
  add_common(gauss, opts);
  gauss->add_option("--t-elem", t_elem, "antisymmetric unit, polynomial syntax (D for Delta)")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  add_common(verify, opts);
  verify->add_option("what", verify_what, "presentation | data | rho | unitary | all")
      ->required()
      ->check(CLI::IsMember({"presentation", "data", "rho", "unitary", "all"}));
  verify->add_option("--pairs", pairs, "sampled homomorphism pairs for the rho suite");

  CLI::App* unitary = app.add_subcommand("unitary", "unitary group structure and factors");
  add_common(unitary, opts);
  unitary->add_flag("--characters", characters, "dump the character table as exponent tuples");

  CLI::App* decompose = app.add_subcommand("decompose", "Lambda-homogeneous dimensions");
  add_common(decompose, opts);
  decompose->add_flag("--verify", decompose_verify, "add projector and invariance verification");
  decompose->add_option("--projector", projector_spec,
                        "export the projector for this character (comma-separated exponents)");

  CLI::App* export_cmd = app.add_subcommand("export", "write operators or tables to a file");
  add_common(export_cmd, opts);
  export_cmd->add_option("--what", export_what, "w | h | u | char-table | dims")->required();
  export_cmd->add_option("--arg", export_arg, "generator argument for h or u (polynomial syntax)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    apply_threads(opts);
    if (info->parsed()) return cmd_info(opts);
    if (factorize->parsed()) return cmd_factorize(opts, matrix_path);
    if (rho_cmd->parsed()) return cmd_rho(opts, word_path, matrix_path);
    if (gauss->parsed()) return cmd_gauss(opts, t_elem);
    if (verify->parsed()) return cmd_verify(opts, verify_what, pairs);
    if (unitary->parsed()) return cmd_unitary(opts, characters);
    if (decompose->parsed()) return cmd_decompose(opts, decompose_verify, projector_spec);
    if (export_cmd->parsed()) return cmd_export(opts, export_what, export_arg);
    std::cerr << app.help() << std::endl;
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "resource guard: " << e.what() << std::endl;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
