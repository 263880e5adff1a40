// foxh: batch front end. Reads spec/params JSON, writes JSON or CSV.
// Exit status: 0 ok, 1 schema violation, 2 precondition failure, 3 numeric
// non-convergence; errors are also written to stderr as JSON.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "foxh/construct.hpp"
#include "foxh/corpus.hpp"
#include "foxh/error.hpp"
#include "foxh/io.hpp"
#include "foxh/mbquad.hpp"
#include "foxh/oracle.hpp"
#include "foxh/rewrite.hpp"
#include "foxh/special.hpp"

using namespace foxh;

namespace {

struct Config {
  std::string in = "-";
  std::string out = "-";
  std::string grid = "0.01:100:25:log";
  double tol = 1e-10;
  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::size_t max_kernels = 4;
  std::string op;
  std::string omega, lambda, omega2, lambda2, weight;
  std::string variant = "direct";
  std::string with;
  std::string specs_out;
};

Json read_input(const std::string& path) {
  if (path == "-") return read_json(std::cin);
  return read_json_file(path);
}

// Writes to a file, or stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::InvalidOptions, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4 || (parts[3] != "log" && parts[3] != "lin"))
    throw Error(ErrorCode::InvalidOptions, "--grid expects min:max:count:log|lin, got \"" + text + "\"");
  try {
    const double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
    const long count = std::stol(parts[2]);
    if (count < 1 || !(lo < hi) || (parts[3] == "log" && !(lo > 0.0)))
      throw Error(ErrorCode::InvalidOptions, "--grid needs min < max, count >= 1 and min > 0 for log");
    return make_grid(lo, hi, static_cast<std::size_t>(count), parts[3] == "log");
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidOptions, "--grid has a non-numeric field: \"" + text + "\"");
  }
}

Number required_number(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::InvalidOptions, std::string(flag) + " is required for this --op");
  return Number::parse(text);
}

bool is_params(const Json& j) { return j.is_object() && j.contains("m"); }

// Params from either schema; a spec is built first and recorded as such.
ParamsDoc params_from_any(const Json& j) {
  if (is_params(j)) return params_from_json(j);
  const ConvolutionSpec spec = spec_from_json(j);
  ParamsDoc doc;
  doc.params = build_foxh(spec);
  doc.derivation.push_back({{"op", "build"}, {"spec", spec_to_json(spec)}});
  return doc;
}

int report_point_errors(const std::vector<GridPoint>& pts) {
  int status = 0;
  for (const auto& gp : pts) {
    if (!gp.error) continue;
    Json e{{"error", std::string(to_string(*gp.error))}, {"message", gp.message}, {"t", gp.t}};
    std::cerr << e.dump() << '\n';
    status = std::max(status, exit_status(*gp.error));
  }
  return status;
}

EvalOptions eval_options(const Config& cfg) {
  EvalOptions o;
  o.tol = cfg.tol;
  return o;
}

int cmd_build(const Config& cfg) {
  const ConvolutionSpec spec = spec_from_json(read_input(cfg.in));
  ParamsDoc doc;
  doc.params = build_foxh(spec);
  doc.derivation.push_back({{"op", "build"}, {"spec", spec_to_json(spec)}});
  Json j = params_to_json(doc);
  j["ep_report"] = ep_report_to_json(ep_report(spec));
  Output(cfg.out).stream() << j.dump(2) << '\n';
  return 0;
}

int cmd_check(const Config& cfg) {
  const ConvolutionSpec spec = spec_from_json(read_input(cfg.in));
  Output(cfg.out).stream() << ep_report_to_json(ep_report(spec)).dump(2) << '\n';
  return 0;
}

int cmd_eval(const Config& cfg) {
  const ParamsDoc doc = params_from_any(read_input(cfg.in));
  const std::vector<double> grid = parse_grid(cfg.grid);
  const EvalOptions opts = eval_options(cfg);
  HEvaluator check(doc.params, opts);  // surfaces StripEmpty and friends before any output
  const std::vector<GridPoint> pts = eval_h_grid(doc.params, grid, opts);
  Output out(cfg.out);
  write_eval_csv(out.stream(), pts);
  return report_point_errors(pts);
}

int cmd_oracle(const Config& cfg) {
  const ConvolutionSpec spec = spec_from_json(read_input(cfg.in));
  if (auto rep = check_spec(spec); !rep.ok())
    throw Error(ErrorCode::SpecInvalid, rep.violations.front().message);
  const std::vector<double> grid = parse_grid(cfg.grid);
  std::vector<OraclePoint> pts(grid.size());
  const long n = static_cast<long>(grid.size());
  std::vector<std::string> errors(grid.size());
  std::vector<int> codes(grid.size(), -1);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    pts[i].t = grid[i];
    try {
      pts[i].q = eval_f(spec, grid[i], std::min(cfg.tol, 1e-11));
    } catch (const Error& e) {
      pts[i].q.value = pts[i].q.abs_err = std::numeric_limits<double>::quiet_NaN();
      errors[i] = e.what();
      codes[i] = static_cast<int>(e.code());
    }
  }
  // Kernel-count limits apply to the whole spec, not to single points.
  for (long i = 0; i < n; ++i)
    if (codes[i] == static_cast<int>(ErrorCode::TooManyKernels)) throw Error(ErrorCode::TooManyKernels, errors[i]);
  Output out(cfg.out);
  write_oracle_csv(out.stream(), pts);
  int status = 0;
  for (long i = 0; i < n; ++i) {
    if (codes[i] < 0) continue;
    const auto code = static_cast<ErrorCode>(codes[i]);
    std::cerr << Json{{"error", std::string(to_string(code))}, {"message", errors[i]}, {"t", grid[i]}}.dump() << '\n';
    status = std::max(status, exit_status(code));
  }
  return status;
}

VerifyOptions verify_options(const Config& cfg) {
  VerifyOptions v;
  v.grid = parse_grid(cfg.grid);
  v.eval = eval_options(cfg);
  return v;
}

int cmd_verify(const Config& cfg) {
  const ConvolutionSpec spec = spec_from_json(read_input(cfg.in));
  const VerifyReport r = verify_spec(spec, verify_options(cfg));
  Output(cfg.out).stream() << verify_to_json(r).dump(2) << '\n';
  return 0;
}

int cmd_transform(const Config& cfg) {
  ParamsDoc doc = params_from_any(read_input(cfg.in));
  Json step{{"op", cfg.op}};
  const FoxHParams& h = doc.params;
  if (cfg.op == "reciprocal") {
    doc.params = reciprocal(h);
  } else if (cfg.op == "power-arg") {
    const Number omega = required_number(cfg.omega, "--omega");
    const WeightedH w = power_arg(h, omega);
    doc.params = w.params;
    step["omega"] = number_to_json(omega);
    step["scalar"] = number_to_json(w.scalar);
    step["arg_power"] = number_to_json(w.arg_power);
    step["t_power"] = number_to_json(w.t_power);
  } else if (cfg.op == "power-weight") {
    const Number w = required_number(cfg.weight.empty() ? cfg.omega : cfg.weight, "--weight");
    doc.params = power_weight(h, w);
    step["weight"] = number_to_json(w);
  } else if (cfg.op == "laplace") {
    const Number omega = required_number(cfg.omega, "--omega"), lambda = required_number(cfg.lambda, "--lambda");
    doc.params = laplace_extend(h, omega, lambda);
    step["omega"] = number_to_json(omega);
    step["lambda"] = number_to_json(lambda);
  } else if (cfg.op == "euler") {
    const Number w1 = required_number(cfg.omega, "--omega"), l1 = required_number(cfg.lambda, "--lambda");
    const Number w2 = required_number(cfg.omega2, "--omega2"), l2 = required_number(cfg.lambda2, "--lambda2");
    doc.params = euler_extend(h, w1, l1, w2, l2);
    step["omega1"] = number_to_json(w1);
    step["lambda1"] = number_to_json(l1);
    step["omega2"] = number_to_json(w2);
    step["lambda2"] = number_to_json(l2);
  } else if (cfg.op == "product") {
    if (cfg.with.empty()) throw Error(ErrorCode::InvalidOptions, "--with is required for --op product");
    if (cfg.variant != "direct" && cfg.variant != "reciprocal")
      throw Error(ErrorCode::InvalidOptions, "--variant must be direct or reciprocal");
    const ParamsDoc other = params_from_any(read_json_file(cfg.with));
    const Number omega = required_number(cfg.omega, "--omega"), lambda = required_number(cfg.lambda, "--lambda");
    const auto variant = cfg.variant == "direct" ? ProductVariant::Direct : ProductVariant::Reciprocal;
    doc.params = product_extend(h, other.params, omega, lambda, variant);
    step["omega"] = number_to_json(omega);
    step["lambda"] = number_to_json(lambda);
    step["variant"] = cfg.variant;
    step["with"] = params_to_json(other);
  } else {
    throw Error(ErrorCode::InvalidOptions,
                "--op must be reciprocal, power-arg, power-weight, laplace, euler or product");
  }
  doc.derivation.push_back(step);
  Output(cfg.out).stream() << params_to_json(doc).dump(2) << '\n';
  return 0;
}

Json numbers_to_json(const std::vector<Number>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(number_to_json(x));
  return arr;
}

Json pairs_json(const std::vector<GammaPair>& ps) {
  Json arr = Json::array();
  for (const auto& g : ps) arr.push_back(Json::array({number_to_json(g.shift), number_to_json(g.slope)}));
  return arr;
}

int cmd_reduce(const Config& cfg) {
  const ParamsDoc doc = params_from_any(read_input(cfg.in));
  Json j;
  if (auto w = as_wright(doc.params))
    j["wright"] = {{"upper", pairs_json(w->upper)}, {"lower", pairs_json(w->lower)}, {"mu", number_to_json(w->mu)}};
  else
    j["wright"] = nullptr;
  if (auto e = as_macrobert(doc.params))
    j["macrobert"] = {{"betas", numbers_to_json(e->betas)}, {"alphas", numbers_to_json(e->alphas)}};
  else
    j["macrobert"] = nullptr;
  if (auto g = as_meijer(doc.params))
    j["meijer"] = {{"m", g->m},
                   {"n", g->n},
                   {"alphas", numbers_to_json(g->alphas)},
                   {"betas", numbers_to_json(g->betas)},
                   {"lambda", number_to_json(g->lambda)}};
  else
    j["meijer"] = nullptr;
  Output(cfg.out).stream() << j.dump(2) << '\n';
  return 0;
}

int cmd_corpus(const Config& cfg) {
  const std::vector<ConvolutionSpec> specs = generate_corpus(cfg.seed, cfg.count, cfg.max_kernels);
  const VerifyOptions vopts = verify_options(cfg);
  if (!cfg.specs_out.empty()) {
    Json arr = Json::array();
    for (const auto& s : specs) arr.push_back(spec_to_json(s));
    Output(cfg.specs_out).stream() << arr.dump(2) << '\n';
  }
  Output out(cfg.out);
  std::ostream& os = out.stream();
  os << "index,n1,n2,n3,n4,max_abs_diff,min_value,positivity_ok,mellin_roundtrip_max_rel_err,status\n";
  int status = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const ConvolutionSpec& s = specs[i];
    os << i << ',' << s.varphi.size() << ',' << s.phi.size() << ',' << s.psi.size() << ',' << s.eta.size() << ',';
    try {
      const VerifyReport r = verify_spec(s, vopts);
      os << (r.oracle_used ? format_double(r.max_abs_diff) : "na") << ',' << format_double(r.min_value) << ','
         << (r.positivity_ok ? "true" : "false") << ',' << format_double(r.mellin_roundtrip_max_rel_err) << ",ok\n";
    } catch (const Error& e) {
      os << "nan,nan,false,nan," << to_string(e.code()) << '\n';
      std::cerr << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"index", i}}.dump()
                << '\n';
      status = std::max(status, exit_status(e.code()));
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fox H-function construction, evaluation and rewriting"};
  app.require_subcommand(1);
  Config cfg;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", cfg.in, "input JSON file, - for stdin");
    sub->add_option("--out", cfg.out, "output file, - for stdout");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid, "min:max:count:log|lin");
    sub->add_option("--tol", cfg.tol, "absolute tolerance");
  };

  auto* build = app.add_subcommand("build", "spec JSON -> params JSON with e.p. report");
  add_io(build);
  auto* check = app.add_subcommand("check", "spec JSON -> e.p. report JSON");
  add_io(check);
  auto* eval = app.add_subcommand("eval", "params (or spec) JSON -> CSV of H on a grid");
  add_io(eval);
  add_grid(eval);
  auto* oracle = app.add_subcommand("oracle", "spec JSON -> CSV of the convolution f on a grid");
  add_io(oracle);
  add_grid(oracle);
  auto* verify = app.add_subcommand("verify", "spec JSON -> agreement and positivity report");
  add_io(verify);
  add_grid(verify);
  auto* transform = app.add_subcommand("transform", "params JSON -> rewritten params JSON");
  add_io(transform);
  transform->add_option("--op", cfg.op, "reciprocal|power-arg|power-weight|laplace|euler|product")->required();
  transform->add_option("--omega", cfg.omega, "omega (omega1 for euler)");
  transform->add_option("--lambda", cfg.lambda, "lambda (lambda1 for euler)");
  transform->add_option("--omega2", cfg.omega2, "omega2 for euler");
  transform->add_option("--lambda2", cfg.lambda2, "lambda2 for euler");
  transform->add_option("--weight", cfg.weight, "exponent w for power-weight");
  transform->add_option("--variant", cfg.variant, "direct|reciprocal for product");
  transform->add_option("--with", cfg.with, "second params JSON for product");
  auto* reduce = app.add_subcommand("reduce", "params JSON -> recognised special cases");
  add_io(reduce);
  auto* corpus = app.add_subcommand("corpus", "seeded random e.p. specs, verified one by one");
  corpus->add_option("--out", cfg.out, "summary CSV, - for stdout");
  add_grid(corpus);
  corpus->add_option("--seed", cfg.seed, "generator seed");
  corpus->add_option("--count", cfg.count, "number of specs");
  corpus->add_option("--max-kernels", cfg.max_kernels, "kernels per spec, at most");
  corpus->add_option("--specs-out", cfg.specs_out, "also write the generated specs as a JSON array");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "InvalidOptions"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  try {
    if (cfg.tol <= 0.0) throw Error(ErrorCode::InvalidOptions, "--tol must be positive");
    if (*build) return cmd_build(cfg);
    if (*check) return cmd_check(cfg);
    if (*eval) return cmd_eval(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*transform) return cmd_transform(cfg);
    if (*reduce) return cmd_reduce(cfg);
    if (*corpus) return cmd_corpus(cfg);
  } catch (const Error& e) {
    std::cerr << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 0;
}
