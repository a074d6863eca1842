#include "symdeg/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symdeg::io {

namespace {

Rational coeff_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("coefficient must be a \"p/q\" string");
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(std::string("missing array field '") + key + "'");
  }
  return j.at(key);
}

void expect_namespace(const Json& j, const char* ns) {
  if (!j.is_object()) throw std::invalid_argument("polynomial document must be a JSON object");
  if (j.contains("namespace") && j.at("namespace") != ns) {
    throw std::invalid_argument(std::string("expected a polynomial in namespace '") + ns + "'");
  }
}

std::vector<int> int_array(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
  std::vector<int> out;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

template <typename Fn>
auto wrap(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON document: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(e.what());
  }
}

Json eps_table(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const Rational& r : values) arr.push_back(r.str());
  return arr;
}

}  // namespace

Json to_json(const YPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json factors = Json::array();
    for (const Factor& y : mono.factors()) factors.push_back({y.row, y.col});
    terms.push_back({{"factors", factors}, {"coeff", c.str()}});
  }
  return {{"namespace", "y"}, {"n", p.dims().n}, {"m", p.dims().m}, {"terms", terms}};
}

Json to_json(const XPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) terms.push_back({{"factors", mono.vars()}, {"coeff", c.str()}});
  return {{"namespace", "x"}, {"n", p.n()}, {"terms", terms}};
}

Json to_json(const SymPolynomial& q) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : q.coeffs()) terms.push_back({{"partition", lambda.parts()}, {"coeff", c.str()}});
  return {{"namespace", "z"}, {"m", q.m()}, {"terms", terms}};
}

YPolynomial y_polynomial_from_json(const Json& j) {
  return wrap([&] {
    expect_namespace(j, "y");
    YPolynomial p({int_field(j, "n"), int_field(j, "m")});
    for (const Json& term : array_field(j, "terms")) {
      std::vector<Factor> factors;
      for (const Json& pair : array_field(term, "factors")) {
        const auto ij = int_array(pair);
        if (ij.size() != 2) throw std::invalid_argument("y factor must be [i, j]");
        factors.push_back({ij[0], ij[1]});
      }
      p.add_term(YMonomial(std::move(factors)), coeff_from_json(term.at("coeff")));
    }
    return p;
  });
}

XPolynomial x_polynomial_from_json(const Json& j) {
  return wrap([&] {
    expect_namespace(j, "x");
    XPolynomial p(int_field(j, "n"));
    for (const Json& term : array_field(j, "terms")) {
      p.add_term(XMonomial(int_array(array_field(term, "factors"))), coeff_from_json(term.at("coeff")));
    }
    return p;
  });
}

SymPolynomial sym_polynomial_from_json(const Json& j) {
  return wrap([&] {
    expect_namespace(j, "z");
    SymPolynomial q(int_field(j, "m"));
    for (const Json& term : array_field(j, "terms")) {
      Partition lambda(int_array(array_field(term, "partition")));
      if (lambda.length() > static_cast<std::size_t>(q.m())) {
        throw std::invalid_argument("partition " + to_string(lambda) + " is longer than m");
      }
      q.add_term(lambda, coeff_from_json(term.at("coeff")));
    }
    return q;
  });
}

AnyPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("namespace") || !j.at("namespace").is_string()) {
    throw std::invalid_argument("polynomial document needs a \"namespace\" of \"x\", \"y\" or \"z\"");
  }
  const auto ns = j.at("namespace").get<std::string>();
  if (ns == "y") return y_polynomial_from_json(j);
  if (ns == "x") return x_polynomial_from_json(j);
  if (ns == "z") return sym_polynomial_from_json(j);
  throw std::invalid_argument("unknown polynomial namespace '" + ns + "'");
}

PropertySpec property_from_json(const Json& j) {
  return wrap([&] {
    if (!j.is_object()) throw std::invalid_argument("property file must be a JSON object");
    const int n = int_field(j, "n");
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string("custom");
    std::vector<std::pair<Partition, Label>> classes;
    for (const Json& cls : array_field(j, "classes")) {
      Partition p(int_array(array_field(cls, "partition")));
      if (p.length() > static_cast<std::size_t>(n)) {
        throw std::invalid_argument("class " + to_string(p) + " has more than n parts");
      }
      classes.emplace_back(std::move(p), parse_label(cls.at("label").get<std::string>()));
    }
    return PropertySpec::from_classes(std::move(name), n, classes);
  });
}

Json to_json(const DegreeCertificate& cert) {
  Json table = Json::array();
  for (const DegreeRecord& rec : cert.records) table.push_back({{"d", rec.degree}, {"eps_min", rec.eps_min.str()}});
  return {{"property", cert.property},
          {"n", cert.n},
          {"m", cert.m},
          {"epsilon", cert.epsilon.str()},
          {"degree", cert.degree},
          {"query_lower_bound", cert.query_lower_bound},
          {"eps_min", table},
          {"optimal", to_json(cert.optimal().optimum)}};
}

Json to_json(const Report& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"kind", v.kind == Violation::Kind::Class ? "class" : "function"},
                          {"input", v.input},
                          {"label", std::string(label_name(v.label))},
                          {"value", v.value.str()},
                          {"bound", v.bound == Bound::Lower ? "lower" : "upper"},
                          {"limit", v.limit.str()}});
  }
  Json table = Json::array();
  for (const RangeRow& row : report.table) {
    table.push_back({{"m", row.m}, {"degree", row.degree}, {"eps_min", eps_table(row.eps_min)}});
  }
  return {{"pass", report.pass}, {"violations", violations}, {"table", table}};
}

Json to_json(const AndOrBound& bound) {
  return {{"n", bound.n},
          {"variables", bound.variables},
          {"epsilon", bound.epsilon.str()},
          {"element_distinctness_degree", bound.element_distinctness_degree},
          {"andor_degree_lower_bound", bound.andor_degree_lower_bound}};
}

Json to_json(const TransferResult& result) {
  const char* status = result.status == TransferStatus::Verified ? "verified"
                       : result.status == TransferStatus::Failed ? "failed"
                                                                 : "unverified";
  Json j = {{"status", status}, {"polynomial", to_json(result.polynomial)}};
  if (result.report) j["report"] = to_json(*result.report);
  return j;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace symdeg::io
