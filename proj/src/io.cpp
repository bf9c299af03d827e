#include "leafspec/io.hpp"

#include <fstream>

#include "leafspec/errors.hpp"

namespace leafspec {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

unsigned get_unsigned(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    bad(std::string("expected non-negative integer field \"") + key + "\"");
  }
  return j[key].get<unsigned>();
}

std::vector<unsigned> get_unsigned_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    bad(std::string("expected array field \"") + key + "\"");
  }
  std::vector<unsigned> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_unsigned()) {
      bad(std::string("non-integer entry in \"") + key + "\"");
    }
    out.push_back(v.get<unsigned>());
  }
  return out;
}

Poly<Rational> poly_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of \"p/q\" strings");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Poly<Rational>(std::move(c));
}

Json poly_json(const Poly<Rational>& p) {
  Json a = Json::array();
  for (const auto& x : p.c) a.push_back(rational_str(x));
  if (a.empty()) a.push_back("0");
  return a;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

std::string rational_str(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Rational(static_cast<long>(j.get<unsigned long>()));
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long>()));
  if (!j.is_string()) bad("expected a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error&) {
    bad("malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Json cyclotomic_json(const CyclotomicElement& x) {
  Json a = Json::array();
  for (const auto& c : x.coeffs()) a.push_back(rational_str(c));
  return a;
}

CyclotomicElement cyclotomic_from_json(const Json& j, unsigned conductor) {
  if (j.is_string() || j.is_number()) {
    return CyclotomicElement(conductor, {rational_from_json(j)});
  }
  if (!j.is_array()) bad("matrix entry must be a string or an array of strings");
  const unsigned width = euler_phi(conductor);
  if (j.size() > width) bad("matrix entry has more coefficients than the conductor allows");
  std::vector<Rational> coeffs;
  for (const auto& v : j) coeffs.push_back(rational_from_json(v));
  return CyclotomicElement(conductor, std::move(coeffs));
}

Json ratfunc_json(const RationalFunction<Rational>& f) {
  Json out;
  out["numerator"] = poly_json(f.num);
  if (f.factored_denominator) {
    Json factors = Json::array();
    for (const auto& [d, mult] : *f.factored_denominator) {
      factors.push_back(Json::array({d, mult}));
    }
    out["denominator_factors"] = factors;
  } else {
    out["denominator"] = poly_json(f.den);
  }
  return out;
}

RationalFunction<Rational> ratfunc_from_json(const Json& j) {
  if (!j.contains("numerator")) bad("series input needs a \"numerator\" field");
  Poly<Rational> num = poly_from_json(j["numerator"], "\"numerator\"");
  if (j.contains("denominator_factors")) {
    const Json& jf = j["denominator_factors"];
    if (!jf.is_array()) bad("\"denominator_factors\" must be an array of [degree, multiplicity] pairs");
    FactoredDenominator factors;
    for (const auto& pair : jf) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number_unsigned()) {
        bad("each denominator factor must be a [degree, multiplicity] pair");
      }
      unsigned d = pair[0].get<unsigned>();
      unsigned mult = pair[1].get<unsigned>();
      if (d == 0) bad("denominator factor degree must be positive");
      factors.emplace_back(d, mult);
    }
    return RationalFunction<Rational>(std::move(num), std::move(factors));
  }
  if (!j.contains("denominator")) bad("series input needs \"denominator\" or \"denominator_factors\"");
  Poly<Rational> den = poly_from_json(j["denominator"], "\"denominator\"");
  if (den.is_zero()) bad("denominator is zero");
  return RationalFunction<Rational>(std::move(num), std::move(den));
}

GroupDocument group_from_json(const Json& j) {
  GroupDocument doc;
  doc.conductor = get_unsigned(j, "conductor");
  if (doc.conductor == 0) bad("\"conductor\" must be positive");
  doc.dim = get_unsigned(j, "dim");
  if (doc.dim == 0) bad("\"dim\" must be positive");
  if (j.contains("cap")) doc.cap = get_unsigned(j, "cap");
  if (!j.contains("generators") || !j["generators"].is_array()) {
    bad("expected array field \"generators\"");
  }
  for (const auto& jm : j["generators"]) {
    if (!jm.is_array() || jm.size() != doc.dim) {
      bad("each generator must be an array of " + std::to_string(doc.dim) + " rows");
    }
    GroupElement g(doc.dim);
    for (unsigned i = 0; i < doc.dim; ++i) {
      const Json& row = jm[i];
      if (!row.is_array() || row.size() != doc.dim) {
        bad("each generator row must have " + std::to_string(doc.dim) + " entries");
      }
      for (unsigned k = 0; k < doc.dim; ++k) {
        g.at(i, k) = cyclotomic_from_json(row[k], doc.conductor);
      }
    }
    doc.generators.push_back(std::move(g));
  }
  return doc;
}

HironakaData hironaka_from_json(const Json& j) {
  HironakaData data;
  data.hsop_degrees = get_unsigned_array(j, "hsop_degrees");
  data.generator_degrees = j.contains("generator_degrees")
                               ? get_unsigned_array(j, "generator_degrees")
                               : std::vector<unsigned>{0};
  return data;
}

InputKind detect_input(const Json& j) {
  if (!j.is_object()) bad("input must be a JSON object");
  if (j.contains("generators")) return InputKind::Group;
  if (j.contains("hsop_degrees")) return InputKind::Hironaka;
  if (j.contains("numerator")) return InputKind::RawSeries;
  bad("input has none of \"generators\", \"hsop_degrees\", \"numerator\"");
}

Json volume_report_json(const VolumeReport& report) {
  Json out;
  out["m"] = report.m;
  out["krull_dim"] = report.krull_dim;
  out["ratio"] = rational_str(report.ratio);
  out["leading_laurent"] = rational_str(report.leading_laurent);
  out["weyl_constant"] = rational_str(report.weyl_constant);
  out["absolute_volume"] = Json{{"rational", rational_str(report.absolute_volume.rational_part)},
                                {"pi_power", report.absolute_volume.pi_power}};
  out["cm_warning"] = report.cm_warning;
  return out;
}

Json cm_report_json(const CMPoleReport& report) {
  Json out;
  out["m"] = report.m;
  out["roots_of_unity_ok"] = report.roots_of_unity_ok;
  out["minus_one_ok"] = report.minus_one_ok;
  out["others_ok"] = report.others_ok;
  out["pass"] = report.pass;
  Json off = Json::array();
  for (const auto& o : report.offenders) {
    off.push_back(Json{{"root_order", o.root_order}, {"order", o.order}, {"allowed", o.allowed}});
  }
  out["offenders"] = off;
  return out;
}

Json weyl_rows_json(const std::vector<WeylRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["k"] = row.k;
    r["lambda"] = row.t;
    r["count"] = row.count.get_str();
    r["ratio"] = row.ratio;
    out.push_back(std::move(r));
  }
  return out;
}

Json entry_check_json(const EntryCheck& check) {
  Json out;
  out["name"] = check.name;
  out["m"] = check.m;
  out["ratio"] = rational_str(check.ratio);
  out["ratio_ok"] = check.ratio_ok;
  out["consistency_ok"] = check.consistency_ok;
  out["group_order_ok"] = check.group_order_ok;
  out["divisibility_ok"] = check.divisibility_ok;
  out["cm_ok"] = check.cm_ok;
  out["pass"] = check.pass;
  if (!check.detail.empty()) out["detail"] = check.detail;
  return out;
}

}  // namespace leafspec
