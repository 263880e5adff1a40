#include "foxh/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "foxh/error.hpp"

namespace foxh {

namespace {

[[noreturn]] void schema_error(const std::string& msg) { throw Error(ErrorCode::SchemaViolation, msg); }

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) schema_error(where + ": expected an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) schema_error(where + ": unknown key \"" + key + "\"");
}

void check_schema_tag(const Json& j, const char* expected) {
  if (!j.contains("schema")) return;
  if (!j["schema"].is_string() || j["schema"].get<std::string>() != expected)
    schema_error(std::string("schema must be \"") + expected + "\"");
}

std::size_t index_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) schema_error(std::string("params: missing \"") + key + "\"");
  const Json& v = j[key];
  if (!v.is_number_integer() || v.get<long long>() < 0)
    schema_error(std::string("params: \"") + key + "\" must be a nonnegative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

std::vector<std::vector<Number>> tuples(const Json& j, const std::string& key, std::size_t width) {
  std::vector<std::vector<Number>> out;
  if (!j.contains(key)) return out;
  const Json& arr = j[key];
  if (!arr.is_array()) schema_error(key + ": expected an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = key + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != width)
      schema_error(where + ": expected " + std::to_string(width) + " numbers");
    std::vector<Number> row;
    for (std::size_t k = 0; k < width; ++k) row.push_back(number_from_json(arr[i][k], where));
    out.push_back(std::move(row));
  }
  return out;
}

Json pairs_to_json(const std::vector<GammaPair>& pairs) {
  Json arr = Json::array();
  for (const auto& g : pairs) arr.push_back(Json::array({number_to_json(g.shift), number_to_json(g.slope)}));
  return arr;
}

}  // namespace

Json number_to_json(const Number& x) { return x.to_string(); }

Number number_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return Number::parse(j.get<std::string>());
  if (j.is_number_integer()) return Number::parse(std::to_string(j.get<long long>()));
  // The shortest round-trip text of a JSON double is what the user wrote.
  if (j.is_number_float()) return Number::parse(j.dump());
  schema_error(where + ": expected a number or decimal string");
}

Json spec_to_json(const ConvolutionSpec& spec) {
  Json j;
  j["schema"] = kSpecSchema;
  auto rows = [](const std::vector<Kernel>& ks, bool two) {
    Json arr = Json::array();
    for (const auto& k : ks) {
      Json row = Json::array({number_to_json(k.a), number_to_json(k.b)});
      if (!two) row.push_back(number_to_json(k.c));
      arr.push_back(row);
    }
    return arr;
  };
  j["varphi"] = rows(spec.varphi, true);
  j["phi"] = rows(spec.phi, false);
  j["psi"] = rows(spec.psi, false);
  j["eta"] = rows(spec.eta, false);
  return j;
}

ConvolutionSpec spec_from_json(const Json& j) {
  check_keys(j, {"schema", "varphi", "phi", "psi", "eta"}, "spec");
  check_schema_tag(j, kSpecSchema);
  ConvolutionSpec spec;
  for (auto& r : tuples(j, "varphi", 2)) spec.varphi.push_back(Kernel::varphi(r[0], r[1]));
  for (auto& r : tuples(j, "phi", 3)) spec.phi.push_back(Kernel::phi(r[0], r[1], r[2]));
  for (auto& r : tuples(j, "psi", 3)) spec.psi.push_back(Kernel::psi(r[0], r[1], r[2]));
  for (auto& r : tuples(j, "eta", 3)) spec.eta.push_back(Kernel::eta(r[0], r[1], r[2]));
  return spec;
}

Json params_to_json(const ParamsDoc& doc) {
  Json j = params_to_json(doc.params);
  j["derivation"] = doc.derivation;
  return j;
}

Json params_to_json(const FoxHParams& h) {
  Json j;
  j["schema"] = kParamsSchema;
  j["m"] = h.m;
  j["n"] = h.n;
  j["p"] = h.p;
  j["q"] = h.q;
  j["upper"] = pairs_to_json(h.upper);
  j["lower"] = pairs_to_json(h.lower);
  return j;
}

ParamsDoc params_from_json(const Json& j) {
  check_keys(j, {"schema", "m", "n", "p", "q", "upper", "lower", "derivation", "ep_report"}, "params");
  check_schema_tag(j, kParamsSchema);
  ParamsDoc doc;
  FoxHParams& h = doc.params;
  h.m = index_from_json(j, "m");
  h.n = index_from_json(j, "n");
  h.p = index_from_json(j, "p");
  h.q = index_from_json(j, "q");
  for (auto& r : tuples(j, "upper", 2)) h.upper.push_back({r[0], r[1]});
  for (auto& r : tuples(j, "lower", 2)) h.lower.push_back({r[0], r[1]});
  if (h.upper.size() != h.p) schema_error("params: upper has " + std::to_string(h.upper.size()) + " pairs, p = " +
                                          std::to_string(h.p));
  if (h.lower.size() != h.q) schema_error("params: lower has " + std::to_string(h.lower.size()) + " pairs, q = " +
                                          std::to_string(h.q));
  if (j.contains("derivation")) {
    if (!j["derivation"].is_array()) schema_error("params: derivation must be an array");
    doc.derivation = j["derivation"];
  }
  return doc;
}

Json strip_to_json(const MellinStrip& s) { return Json::array({s.lo.to_string(), s.hi.to_string()}); }

Json ep_report_to_json(const EpReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  j["chi_prime"] = number_to_json(rep.chi_prime);
  j["strip"] = strip_to_json(rep.strip);
  j["pole_check"] = rep.pole_check_mode == PoleCheckMode::Exact ? "exact" : "bounded";
  Json v = Json::array();
  for (const auto& x : rep.violations) v.push_back({{"rule", x.rule}, {"message", x.message}});
  j["violations"] = v;
  return j;
}

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open " + path);
  return read_json(in);
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_eval_csv(std::ostream& out, const std::vector<GridPoint>& points) {
  out << "t,value,abs_err_est,height_used,panels\n";
  for (const auto& gp : points) {
    out << format_double(gp.t) << ',';
    if (gp.result)
      out << format_double(gp.result->value) << ',' << format_double(gp.result->abs_err_est) << ','
          << format_double(gp.result->height_used) << ',' << gp.result->panels << '\n';
    else
      out << "nan,nan,nan,0\n";
  }
}

void write_oracle_csv(std::ostream& out, const std::vector<OraclePoint>& points) {
  out << "t,value,abs_err_est\n";
  for (const auto& p : points)
    out << format_double(p.t) << ',' << format_double(p.q.value) << ',' << format_double(p.q.abs_err) << '\n';
}

}  // namespace foxh
