#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "foxh/construct.hpp"
#include "foxh/mbquad.hpp"
#include "foxh/oracle.hpp"
#include "foxh/params.hpp"

namespace foxh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSpecSchema = "foxh.spec.v1";
inline constexpr const char* kParamsSchema = "foxh.params.v1";

// Numbers are written as decimal strings; readers also accept JSON numbers
// and "p/q" strings. Every reader throws Error(SchemaViolation).

Json number_to_json(const Number& x);
Number number_from_json(const Json& j, const std::string& where);

Json spec_to_json(const ConvolutionSpec& spec);
ConvolutionSpec spec_from_json(const Json& j);

/// A parameter set plus the chain of steps that produced it, e.g.
/// [{"op":"build","spec":{...}}, {"op":"laplace","omega":"1","lambda":"1"}].
struct ParamsDoc {
  FoxHParams params;
  Json derivation = Json::array();
};

Json params_to_json(const ParamsDoc& doc);
Json params_to_json(const FoxHParams& h);
ParamsDoc params_from_json(const Json& j);

Json strip_to_json(const MellinStrip& s);
Json ep_report_to_json(const EpReport& rep);

/// Parses a whole file or stream; syntax errors become SchemaViolation.
Json read_json(std::istream& in);
Json read_json_file(const std::string& path);

/// 17 significant digits, "nan"/"inf" spelled out.
std::string format_double(double x);

/// Header t,value,abs_err_est,height_used,panels. Failed points keep their
/// row with value nan.
void write_eval_csv(std::ostream& out, const std::vector<GridPoint>& points);

struct OraclePoint {
  double t = 0.0;
  Quadrature q;
};

/// Header t,value,abs_err_est.
void write_oracle_csv(std::ostream& out, const std::vector<OraclePoint>& points);

}  // namespace foxh
