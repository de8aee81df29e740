#include "handlecalc/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "handlecalc/json_io.hpp"

namespace hcalc {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(fmt::format("cannot write '{}'", out_path));
  f << text;
}

// Census of either input kind.
ChartStats census_of(const Input& input) {
  if (const auto* cfg = std::get_if<HandleConfig>(&input)) return handle_chart_stats(*cfg);
  return std::get<ChartStats>(input);
}

int cmd_validate(const std::string& path, const std::string& out_path, std::ostream& out) {
  ValidateResult r = validate_document(read_json_file(path));
  emit(r.document, out_path, out);
  return r.valid ? kExitOk : kExitViolations;
}

int cmd_simplify(const std::string& path, const std::string& mode, const std::string& epsilon,
                 const SimplifyOptions& options, const std::string& out_path, std::ostream& out) {
  SimplifyRequest request{mode, 0, options};
  if (epsilon == "+1" || epsilon == "1") request.epsilon = 1;
  else if (epsilon == "-1") request.epsilon = -1;
  else throw ParseError(fmt::format("--epsilon must be +1 or -1, got '{}'", epsilon));
  emit(simplify_document(read_json_file(path), request), out_path, out);
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& out_path, std::ostream& out, std::ostream& err) {
  TraceVerdict v = verify_document(read_json_file(path));
  emit(to_json(v), out_path, out);
  if (v.accepted) return kExitOk;
  if (v.failed_step)
    err << "trace rejected at step " << *v.failed_step << " (" << v.rule << "): " << v.reason << "\n";
  else
    err << "trace rejected: " << v.reason << "\n";
  return kExitPrecondition;
}

}  // namespace

ValidateResult validate_document(const json& input_json) {
  Input input = input_from_json(input_json);
  std::vector<Violation> violations;
  if (const auto* cfg = std::get_if<HandleConfig>(&input)) {
    for (std::size_t idx = 0; idx < cfg->handles.size(); ++idx)
      if (!cfg->handles[idx].crossing_only())
        violations.push_back({"not_crossing_only",
                              fmt::format("handle {} = {} is not crossing-only", idx, cfg->handles[idx].to_string())});
    if (violations.empty()) violations = validate_chart(handle_chart_stats(*cfg));
  } else {
    violations = validate_chart(std::get<ChartStats>(input));
  }
  return {{{"valid", violations.empty()}, {"violations", to_json(violations)}}, violations.empty()};
}

json stats_document(const json& input) {
  ChartStats ch = census_of(input_from_json(input));
  return {{"census", to_json(ch)}, {"totals", to_json(stats_of_chart(ch))}};
}

json bound_document(const json& input) { return to_json(bounds_report(census_of(input_from_json(input)))); }

json plan_document(const json& input) { return to_json(plan_weak_simplify_stats(census_of(input_from_json(input)))); }

json simplify_document(const json& input_json, const SimplifyRequest& r) {
  Input input = input_from_json(input_json);
  const auto* cfg = std::get_if<HandleConfig>(&input);
  if (!cfg) throw PreconditionError("simplify", "input must be a handle configuration");
  if (r.mode == "weak") return to_json(weak_simplify_config(*cfg, r.options));
  if (r.mode == "strong") return to_json(strong_normal_form(*cfg, r.options));
  if (r.mode == "parity") return to_json(parity_normal_form(*cfg, r.options));
  if (r.mode == "simplified") return to_json(simplified_form(*cfg, r.options));
  if (r.mode == "epsilon") return to_json(epsilon_uniform_form(*cfg, r.epsilon, r.options));
  throw ParseError(fmt::format("unknown mode '{}'", r.mode));
}

TraceVerdict verify_document(const json& j) {
  // A report embeds its trace under "trace".
  RewriteTrace trace = (j.is_object() && j.contains("trace")) ? trace_from_json(j.at("trace"), "/trace")
                                                             : trace_from_json(j);
  return verify_trace(trace);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rewriting engine for 1-handle configurations labelled by braid words"};
  app.name("handlecalc");
  app.require_subcommand(1);

  std::string input, out_path;
  auto add_io = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", input, what)->required();
    sub->add_option("--out", out_path, "Write JSON here instead of standard output");
  };
  auto* validate = app.add_subcommand("validate", "Check census constraints of a config or chart");
  add_io(validate, "Config or chart JSON file");
  auto* stats = app.add_subcommand("stats", "Print the census and the totals b, w, c, s, c_alg");
  add_io(stats, "Config or chart JSON file");
  auto* bound = app.add_subcommand("bound", "Print the handle-count upper bounds");
  add_io(bound, "Config or chart JSON file");
  auto* plan = app.add_subcommand("plan", "Print the census-level weak simplification plan");
  add_io(plan, "Config or chart JSON file");
  auto* simplify = app.add_subcommand("simplify", "Run a normal-form strategy and emit a report with its trace");
  add_io(simplify, "Config JSON file");
  std::string mode, epsilon = "+1";
  SimplifyOptions options;
  simplify->add_option("--mode", mode, "Strategy")
      ->required()
      ->check(CLI::IsMember({"weak", "strong", "parity", "epsilon", "simplified"}));
  simplify->add_option("--epsilon", epsilon, "Sign for --mode epsilon (+1 or -1)");
  simplify->add_option("--seed", options.seed, "Seed recorded in the report");
  simplify->add_option("--max-steps", options.max_steps, "Step budget");
  simplify->add_flag("--fixed-disk", options.fixed_disk, "Weak mode: always add the full set");
  simplify->add_flag("--shifted", options.shifted, "Strong and parity modes: start from h(s1, s3^-1)");
  auto* verify = app.add_subcommand("verify", "Replay a trace (or the trace of a report)");
  add_io(verify, "Trace or report JSON file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (validate->parsed()) return cmd_validate(input, out_path, out);
    if (simplify->parsed()) return cmd_simplify(input, mode, epsilon, options, out_path, out);
    if (verify->parsed()) return cmd_verify(input, out_path, out, err);
    if (stats->parsed()) emit(stats_document(read_json_file(input)), out_path, out);
    if (bound->parsed()) emit(bound_document(read_json_file(input)), out_path, out);
    if (plan->parsed()) emit(plan_document(read_json_file(input)), out_path, out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

}  // namespace hcalc
