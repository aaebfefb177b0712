#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include <json.hpp>

#include "weilrep/decomposition.hpp"

namespace weilrep {

using Json = nlohmann::ordered_json;

// --- scalars ---

inline Json cyclo_to_json(const CycloNum& v) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < v.ctx()->degree(); ++i) {
    Rat q = v.coeff(i);
    coeffs.push_back(Json::array({q.get_num().get_str(), q.get_den().get_str()}));
  }
  return Json{{"m", v.ctx()->conductor()}, {"coeffs", coeffs}};
}

inline Json cyclo_to_float_json(const CycloNum& v) {
  auto z = v.to_complex();
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

inline CycloNum cyclo_from_json(const Json& j) {
  auto ctx = CycloCtx::make(j.at("m").get<unsigned>());
  const Json& coeffs = j.at("coeffs");
  if (coeffs.size() != ctx->degree())
    throw std::invalid_argument("cyclo_from_json: wrong coefficient count");
  CycloNum acc = CycloNum::zero(ctx);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Rat q(Int(coeffs[i].at(0).get<std::string>()), Int(coeffs[i].at(1).get<std::string>()));
    q.canonicalize();
    acc += CycloNum::from_rational(ctx, q) * CycloNum::root_of_unity(ctx, static_cast<long>(i));
  }
  return acc;
}

/// Compact display: the rational itself when the value is rational, else a
/// polynomial in z (= primitive root) over Q.
inline std::string cyclo_to_string(const CycloNum& v) {
  if (v.is_rational()) {
    return v.rational_value().get_str();
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.ctx()->degree(); ++i) {
    Rat q = v.coeff(i);
    if (q == 0) continue;
    if (!first) os << (q > 0 ? " + " : " - ");
    if (first && q < 0) os << "-";
    Rat a = q > 0 ? q : Rat(-q);
    a.canonicalize();
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// --- field and ring elements ---

inline Json fq_to_json(const FqElem& a) {
  Json out = Json::array();
  for (int32_t d : a.d) out.push_back(d);
  return out;
}

inline FqElem fq_from_json(const FieldConfig& f, const Json& j) {
  if (!j.is_array() || static_cast<long>(j.size()) != f.t())
    throw std::invalid_argument("fq_from_json: expected an array of t digits");
  FqElem e = f.zero();
  for (long i = 0; i < f.t(); ++i) {
    long v = j[i].get<long>();
    e.d[i] = static_cast<int32_t>(((v % f.p()) + f.p()) % f.p());
  }
  return e;
}

inline Json k_to_json(const KElem& z) {
  return Json{{"re", fq_to_json(z.re)}, {"im", fq_to_json(z.im)}};
}

inline KElem k_from_json(const FieldConfig& f, const Json& j) {
  return KElem{fq_from_json(f, j.at("re")), fq_from_json(f, j.at("im"))};
}

inline Json ring_to_json(const RingElem& a) {
  Json coeffs = Json::array();
  for (const KElem& z : a.c) coeffs.push_back(k_to_json(z));
  return Json{{"coeffs", coeffs}};
}

inline RingElem ring_from_json(const RingConfig& r, const Json& j) {
  const Json& coeffs = j.at("coeffs");
  if (static_cast<long>(coeffs.size()) != r.n())
    throw std::invalid_argument("ring_from_json: expected n coefficients");
  RingElem a = r.zero();
  for (long i = 0; i < r.n(); ++i) a.c[i] = k_from_json(r.field(), coeffs[i]);
  return a;
}

// --- polynomial text form: "1+2*D*x+x^2", digits bracketed for t > 1 ---

namespace detail {

class ElemParser {
 public:
  ElemParser(const RingConfig& ring, std::string text) : ring_(ring), text_(std::move(text)) {}

  RingElem parse() {
    RingElem acc = ring_.zero();
    skip_ws();
    bool negative = consume('-');
    for (;;) {
      RingElem term = parse_term();
      acc = negative ? ring_.sub(acc, term) : ring_.add(acc, term);
      skip_ws();
      if (consume('+')) {
        negative = false;
      } else if (consume('-')) {
        negative = true;
      } else {
        break;
      }
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return acc;
  }

 private:
  RingElem parse_term() {
    const FieldConfig& f = ring_.field();
    KElem coeff = f.K_one();
    long power = 0;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unexpected end of input");
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = f.K_scalar_mul(parse_int(), coeff);
      } else if (c == '[') {
        coeff = f.K_mul(coeff, KElem{parse_digit_list(), f.zero()});
      } else if (c == 'D') {
        ++pos_;
        coeff = f.K_mul(coeff, f.K_delta());
      } else if (c == 'x') {
        ++pos_;
        long e = 1;
        skip_ws();
        if (consume('^')) {
          skip_ws();
          e = parse_int();
          if (e < 0) fail("negative exponent");
        }
        power += e;
      } else {
        fail("unexpected character");
      }
      skip_ws();
      expect_factor = consume('*');
    }
    if (power >= ring_.n()) return ring_.zero();  // x^m = 0 for m >= n
    return ring_.monomial(coeff, power);
  }

  FqElem parse_digit_list() {
    const FieldConfig& f = ring_.field();
    if (!consume('[')) fail("expected '['");
    FqElem e = f.zero();
    for (long i = 0; i < f.t(); ++i) {
      skip_ws();
      long v = parse_int();
      e.d[i] = static_cast<int32_t>(((v % f.p()) + f.p()) % f.p());
      skip_ws();
      if (i + 1 < f.t() && !consume(',')) fail("expected ','");
    }
    if (!consume(']')) fail("expected ']'");
    return e;
  }

  long parse_int() {
    skip_ws();
    bool neg = consume('-');
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000) fail("integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("element parse error at position " + std::to_string(pos_) + ": " +
                                why + " in \"" + text_ + "\"");
  }

  const RingConfig& ring_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RingElem parse_ring_elem(const RingConfig& ring, const std::string& text) {
  return detail::ElemParser(ring, text).parse();
}

// --- group elements and words ---

inline Json group_to_json(const GroupElem& g) {
  return Json{{"a", ring_to_json(g.a)},
              {"b", ring_to_json(g.b)},
              {"c", ring_to_json(g.c)},
              {"d", ring_to_json(g.d)}};
}

inline GroupElem group_from_json(const RingConfig& r, const Json& j) {
  return GroupElem{ring_from_json(r, j.at("a")), ring_from_json(r, j.at("b")),
                   ring_from_json(r, j.at("c")), ring_from_json(r, j.at("d"))};
}

inline Json word_to_json(const BruhatWord& word) {
  Json out = Json::array();
  for (const BruhatToken& tok : word.tokens) {
    if (const TokH* h = std::get_if<TokH>(&tok)) {
      out.push_back(Json{{"H", ring_to_json(h->t)}});
    } else if (const TokU* u = std::get_if<TokU>(&tok)) {
      out.push_back(Json{{"U", ring_to_json(u->s)}});
    } else {
      out.push_back("W");
    }
  }
  return out;
}

inline BruhatWord word_from_json(const RingConfig& r, const Json& j) {
  BruhatWord word;
  for (const Json& tok : j) {
    if (tok.is_string()) {
      if (tok.get<std::string>() != "W") throw std::invalid_argument("word_from_json: bad token");
      word.tokens.push_back(TokW{});
    } else if (tok.contains("H")) {
      word.tokens.push_back(TokH{ring_from_json(r, tok.at("H"))});
    } else if (tok.contains("U")) {
      word.tokens.push_back(TokU{ring_from_json(r, tok.at("U"))});
    } else {
      throw std::invalid_argument("word_from_json: bad token");
    }
  }
  return word;
}

// --- operators ---

inline Json operator_to_json(const Operator& op, bool float_render = false) {
  auto render = [&](const CycloNum& v) {
    return float_render ? cyclo_to_float_json(v) : cyclo_to_json(v);
  };
  Json out;
  out["dim"] = op.dim();
  if (op.is_monomial()) {
    bool diagonal = true;
    for (uint32_t i = 0; i < op.dim(); ++i) diagonal = diagonal && op.perm()[i] == i;
    if (diagonal) {
      out["form"] = "diagonal";
      Json entries = Json::array();
      for (const CycloNum& s : op.scalars()) entries.push_back(render(s));
      out["entries"] = entries;
    } else {
      out["form"] = "monomial";
      Json perm = Json::array();
      for (uint32_t dst : op.perm()) perm.push_back(dst);
      out["perm"] = perm;
      Json scal = Json::array();
      for (const CycloNum& s : op.scalars()) scal.push_back(render(s));
      out["scalars"] = scal;
    }
    return out;
  }
  out["form"] = "dense";
  Json rows = Json::array();
  for (uint32_t r = 0; r < op.dim(); ++r) {
    Json row = Json::array();
    for (uint32_t c = 0; c < op.dim(); ++c) row.push_back(render(op.entry(r, c)));
    rows.push_back(row);
  }
  out["rows"] = rows;
  return out;
}

// --- reports ---

inline Json report_to_json(const CheckReport& report) {
  Json items = Json::array();
  for (const CheckItem& item : report.items) {
    Json j{{"name", item.name}, {"mode", item.mode}, {"checked", item.checked}, {"pass", item.pass}};
    if (!item.pass) j["counterexample"] = item.counterexample;
    items.push_back(j);
  }
  return Json{{"suite", report.suite}, {"items", items}, {"pass", report.pass}};
}

}  // namespace weilrep
