#include "handlecalc/json_io.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cstdlib>
#include <limits>

namespace hcalc {

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

const json& field(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw ParseError("expected an object", ptr.empty() ? "/" : ptr);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(fmt::format("missing field '{}'", key), child(ptr, key));
  return *it;
}

const json* optional_field(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw ParseError("expected an object", ptr.empty() ? "/" : ptr);
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

long as_long(const json& j, const std::string& ptr, long lo = std::numeric_limits<long>::min(),
             long hi = std::numeric_limits<long>::max()) {
  if (!j.is_number_integer()) throw ParseError("expected an integer", ptr);
  long v = j.get<long>();
  if (v < lo || v > hi) throw ParseError(fmt::format("value {} outside {}..{}", v, lo, hi), ptr);
  return v;
}

int as_int(const json& j, const std::string& ptr, long lo = std::numeric_limits<int>::min(),
           long hi = std::numeric_limits<int>::max()) {
  return static_cast<int>(as_long(j, ptr, lo, hi));
}

const std::string& as_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw ParseError("expected a string", ptr);
  return j.get_ref<const std::string&>();
}

bool as_bool(const json& j, const std::string& ptr) {
  if (!j.is_boolean()) throw ParseError("expected a boolean", ptr);
  return j.get<bool>();
}

const json& as_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw ParseError("expected an array", ptr);
  return j;
}

int parse_label_key(const std::string& key, const std::string& ptr) {
  int v = 0;
  auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (ec != std::errc{} || p != key.data() + key.size()) throw ParseError("label key must be an integer", ptr);
  return v;
}

BraidWord word_from_json(const json& j, int degree, const std::string& ptr) {
  try {
    return BraidWord::parse(as_string(j, ptr), degree);
  } catch (const ParseError& e) {
    if (!e.where().empty()) throw;
    throw ParseError(e.what(), ptr);
  }
}

void check_kind(const json& j, const std::string& expected, const std::string& ptr, bool required) {
  const json* k = optional_field(j, "kind", ptr);
  if (!k) {
    if (required) throw ParseError("missing field 'kind'", child(ptr, "kind"));
    return;
  }
  if (as_string(*k, child(ptr, "kind")) != expected)
    throw ParseError(fmt::format("expected kind '{}'", expected), child(ptr, "kind"));
}

Handle handle_from_json(const json& j, int degree, const std::string& ptr) {
  BraidWord cocore = word_from_json(field(j, "cocore", ptr), degree, child(ptr, "cocore"));
  BraidWord core = word_from_json(field(j, "core", ptr), degree, child(ptr, "core"));
  try {
    return Handle(std::move(cocore), std::move(core));
  } catch (const InvariantError& e) {
    throw ParseError(fmt::format("Handle invariant violated: {}", e.what()), ptr);
  }
}

template <class Map>
json label_map(const Map& m) {
  json out = json::object();
  for (const auto& [label, count] : m) out[std::to_string(label)] = count;
  return out;
}

std::optional<EdgeDir> dir_from_string(const std::string& s) {
  if (s == "in") return EdgeDir::In;
  if (s == "out") return EdgeDir::Out;
  return std::nullopt;
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("invalid JSON: {}", e.what()), "/");
  }
}

// ---------------------------------------------------------------------------

json to_json(const Handle& h) { return {{"cocore", h.cocore().to_string()}, {"core", h.core().to_string()}}; }

json to_json(const HandleConfig& cfg) {
  json handles = json::array();
  for (const Handle& h : cfg.handles) handles.push_back(to_json(h));
  return {{"kind", "config"}, {"degree", cfg.degree}, {"free_edges", label_map(cfg.free_edges)}, {"handles", handles}};
}

HandleConfig config_from_json(const json& j, const std::string& ptr) {
  check_kind(j, "config", ptr, false);
  HandleConfig cfg;
  cfg.degree = as_int(field(j, "degree", ptr), child(ptr, "degree"), 1, 4096);
  if (const json* fe = optional_field(j, "free_edges", ptr)) {
    const std::string fp = child(ptr, "free_edges");
    if (!fe->is_object()) throw ParseError("expected an object", fp);
    for (const auto& [key, value] : fe->items()) {
      const int label = parse_label_key(key, child(fp, key));
      if (label < 1 || label > cfg.degree - 1)
        throw ParseError(fmt::format("free edge label {} outside 1..{}", label, cfg.degree - 1), child(fp, key));
      const int count = as_int(value, child(fp, key), 0);
      if (count > 0) cfg.free_edges[label] = count;
    }
  }
  const std::string hp = child(ptr, "handles");
  const json& hs = as_array(field(j, "handles", ptr), hp);
  for (std::size_t t = 0; t < hs.size(); ++t) cfg.handles.push_back(handle_from_json(hs[t], cfg.degree, child(hp, t)));
  return cfg;
}

// ---------------------------------------------------------------------------

json to_json(const ChartStats& ch) {
  json black_edges = json::array();
  for (const auto& [key, count] : ch.black_edge_labels)
    black_edges.push_back({{"label", key.first}, {"dir", to_string(key.second)}, {"count", count}});
  json white = json::array();
  for (const auto& [key, count] : ch.white) white.push_back({{"i", key.first}, {"j", key.second}, {"count", count}});
  json crossings = json::array();
  for (const auto& [key, count] : ch.crossings)
    crossings.push_back({{"i", key.first}, {"j", key.second}, {"count", count}});
  return {{"kind", "chart"},
          {"degree", ch.degree},
          {"black", ch.black},
          {"black_edges", black_edges},
          {"white", white},
          {"crossings", crossings},
          {"free_edges", label_map(ch.free_edges)},
          {"loops", label_map(ch.loops)}};
}

ChartStats chart_from_json(const json& j, const std::string& ptr) {
  check_kind(j, "chart", ptr, false);
  ChartStats ch;
  ch.degree = as_int(field(j, "degree", ptr), child(ptr, "degree"), 1, 4096);
  if (const json* b = optional_field(j, "black", ptr)) ch.black = as_long(*b, child(ptr, "black"), 0);

  auto typed = [&](const std::string& key, std::map<std::pair<int, int>, long>& out, bool white) {
    const json* arr = optional_field(j, key, ptr);
    if (!arr) return;
    const std::string ap = child(ptr, key);
    as_array(*arr, ap);
    for (std::size_t t = 0; t < arr->size(); ++t) {
      const std::string ep = child(ap, t);
      const json& e = (*arr)[t];
      int i = as_int(field(e, "i", ep), child(ep, "i"));
      int k = as_int(field(e, "j", ep), child(ep, "j"));
      long count = as_long(field(e, "count", ep), child(ep, "count"), 0);
      for (int label : {i, k})
        if (label < 1 || label >= ch.degree)
          throw ParseError(fmt::format("label {} is outside 1..{}", label, ch.degree - 1), ep);
      if (white && std::abs(i - k) != 1)
        throw ParseError(fmt::format("white vertex w_{{{},{}}} needs |i-j| = 1", i, k), ep);
      if (!white && std::abs(i - k) <= 1)
        throw ParseError(fmt::format("crossing c_{{{},{}}} needs |i-j| > 1", i, k), ep);
      if (count > 0) out[{i, k}] += count;
    }
  };
  typed("white", ch.white, true);
  typed("crossings", ch.crossings, false);

  if (const json* arr = optional_field(j, "black_edges", ptr)) {
    const std::string ap = child(ptr, "black_edges");
    as_array(*arr, ap);
    for (std::size_t t = 0; t < arr->size(); ++t) {
      const std::string ep = child(ap, t);
      const json& e = (*arr)[t];
      int label = as_int(field(e, "label", ep), child(ep, "label"));
      auto dir = dir_from_string(as_string(field(e, "dir", ep), child(ep, "dir")));
      if (!dir) throw ParseError("dir must be \"in\" or \"out\"", child(ep, "dir"));
      long count = as_long(field(e, "count", ep), child(ep, "count"), 0);
      if (count > 0) ch.black_edge_labels[{label, *dir}] += count;
    }
  }

  auto labels = [&](const std::string& key, std::map<int, long>& out) {
    const json* obj = optional_field(j, key, ptr);
    if (!obj) return;
    const std::string op = child(ptr, key);
    if (!obj->is_object()) throw ParseError("expected an object", op);
    for (const auto& [k, v] : obj->items()) {
      long count = as_long(v, child(op, k), 0);
      if (count > 0) out[parse_label_key(k, child(op, k))] += count;
    }
  };
  labels("free_edges", ch.free_edges);
  labels("loops", ch.loops);

  auto violations = range_violations(ch);
  if (!violations.empty()) throw ParseError(violations.front().detail, ptr.empty() ? "/" : ptr);
  return ch;
}

// ---------------------------------------------------------------------------

json to_json(const RewriteStep& step) {
  json params = json::object();
  const StepParams& p = step.params;
  if (p.sign != 0) params["sign"] = p.sign;
  if (p.site) params["site"] = to_string(*p.site);
  if (p.mode) params["mode"] = to_string(*p.mode);
  if (p.position) params["position"] = *p.position;
  if (p.alphabet) params["alphabet"] = to_string(*p.alphabet);
  if (step.rule == Rule::AddHandles) {
    json hs = json::array();
    for (const Handle& h : p.handles) hs.push_back(to_json(h));
    params["handles"] = hs;
  }
  return {{"rule", rule_name(step.rule)}, {"operands", step.operands}, {"params", params}, {"inverse", step.inverse}};
}

RewriteStep step_from_json(const json& j, int degree, const std::string& ptr) {
  RewriteStep step;
  const std::string rp = child(ptr, "rule");
  auto rule = rule_from_name(as_string(field(j, "rule", ptr), rp));
  if (!rule) throw ParseError("unknown rule", rp);
  step.rule = *rule;
  const std::string op = child(ptr, "operands");
  const json& ops = as_array(field(j, "operands", ptr), op);
  for (std::size_t t = 0; t < ops.size(); ++t) step.operands.push_back(as_int(ops[t], child(op, t)));
  if (const json* inv = optional_field(j, "inverse", ptr)) step.inverse = as_bool(*inv, child(ptr, "inverse"));

  const std::string pp = child(ptr, "params");
  const json* params = optional_field(j, "params", ptr);
  if (!params) return step;
  if (!params->is_object()) throw ParseError("expected an object", pp);
  StepParams& p = step.params;
  for (const auto& [key, value] : params->items()) {
    const std::string kp = child(pp, key);
    if (key == "sign") {
      p.sign = as_int(value, kp);
    } else if (key == "site") {
      const std::string& s = as_string(value, kp);
      if (s == "handle") p.site = LoopSite::Handle;
      else if (s == "letter") p.site = LoopSite::Letter;
      else throw ParseError("site must be \"handle\" or \"letter\"", kp);
    } else if (key == "mode") {
      const std::string& s = as_string(value, kp);
      if (s == "core") p.mode = SlideMode::Core;
      else if (s == "cocore") p.mode = SlideMode::Cocore;
      else throw ParseError("mode must be \"core\" or \"cocore\"", kp);
    } else if (key == "position") {
      p.position = as_int(value, kp);
    } else if (key == "alphabet") {
      const std::string& s = as_string(value, kp);
      if (s == "weak") p.alphabet = Alphabet::Weak;
      else if (s == "extended") p.alphabet = Alphabet::Extended;
      else throw ParseError("alphabet must be \"weak\" or \"extended\"", kp);
    } else if (key == "handles") {
      as_array(value, kp);
      for (std::size_t t = 0; t < value.size(); ++t) p.handles.push_back(handle_from_json(value[t], degree, child(kp, t)));
    } else {
      throw ParseError(fmt::format("unknown parameter '{}'", key), kp);
    }
  }
  return step;
}

json to_json(const RewriteTrace& trace) {
  json steps = json::array();
  for (const RewriteStep& s : trace.steps) steps.push_back(to_json(s));
  return {{"initial", to_json(trace.initial)},
          {"steps", steps},
          {"final", to_json(trace.final_config)},
          {"handles_added", trace.handles_added}};
}

RewriteTrace trace_from_json(const json& j, const std::string& ptr) {
  RewriteTrace t;
  t.initial = config_from_json(field(j, "initial", ptr), child(ptr, "initial"));
  t.final_config = config_from_json(field(j, "final", ptr), child(ptr, "final"));
  const std::string sp = child(ptr, "steps");
  const json& steps = as_array(field(j, "steps", ptr), sp);
  for (std::size_t k = 0; k < steps.size(); ++k)
    t.steps.push_back(step_from_json(steps[k], t.initial.degree, child(sp, k)));
  t.handles_added = as_long(field(j, "handles_added", ptr), child(ptr, "handles_added"), 0);
  return t;
}

// ---------------------------------------------------------------------------

json to_json(const NormalFormReport& r) {
  return {{"form", to_string(r.form)},
          {"exponent", r.exponent ? json(*r.exponent) : json(nullptr)},
          {"handles_added", r.handles_added},
          {"seed", r.seed},
          {"trace", to_json(r.trace)}};
}

NormalFormReport report_from_json(const json& j, const std::string& ptr) {
  NormalFormReport r;
  const std::string fp = child(ptr, "form");
  const std::string& form = as_string(field(j, "form", ptr), fp);
  bool found = false;
  for (NormalForm f : {NormalForm::WeakSimplified, NormalForm::Simplified, NormalForm::Strong,
                       NormalForm::EpsilonUniform, NormalForm::ParityDichotomy})
    if (to_string(f) == form) {
      r.form = f;
      found = true;
    }
  if (!found) throw ParseError("unknown form", fp);
  const json& e = field(j, "exponent", ptr);
  if (!e.is_null()) r.exponent = as_int(e, child(ptr, "exponent"));
  r.handles_added = as_long(field(j, "handles_added", ptr), child(ptr, "handles_added"), 0);
  if (const json* s = optional_field(j, "seed", ptr)) {
    if (!s->is_number_unsigned() && !(s->is_number_integer() && s->get<long>() >= 0))
      throw ParseError("expected an unsigned integer", child(ptr, "seed"));
    r.seed = s->get<std::uint64_t>();
  }
  r.trace = trace_from_json(field(j, "trace", ptr), child(ptr, "trace"));
  return r;
}

json to_json(const ChartTotals& t) {
  return {{"b", t.b}, {"w", t.w}, {"c", t.c}, {"s", t.s}, {"c_alg", t.c_alg}};
}

json to_json(const BoundsReport& r) {
  auto opt = [](const std::optional<long>& v) { return v ? json(*v) : json(nullptr); };
  return {{"degree", r.degree},
          {"totals", to_json(r.totals)},
          {"weak_bound", r.weak_bound},
          {"crossing_only_weak_upper", opt(r.crossing_only_weak_upper)},
          {"crossing_only_simplifying_upper", opt(r.crossing_only_simplifying_upper)},
          {"weak_bound_at_least_one", r.weak_bound_at_least_one},
          {"weak_bound_no_black", opt(r.weak_bound_no_black)},
          {"weak_upper", r.weak_upper},
          {"simplifying_from_weak", r.simplifying_from_weak}};
}

json to_json(const StatsPlan& plan) {
  json steps = json::array();
  for (const PlanStep& s : plan.steps) {
    json e = {{"kind", to_string(s.kind)}, {"added", s.added}, {"w", s.w},
              {"b", s.b},                  {"c", s.c},         {"handles", s.handles},
              {"free_bridges", s.free_bridges}};
    if (s.label_a) e["label_a"] = s.label_a;
    if (s.label_b) e["label_b"] = s.label_b;
    if (s.dir) e["dir"] = to_string(*s.dir);
    steps.push_back(e);
  }
  return {{"degree", plan.degree},
          {"initial", {{"w", plan.w0}, {"b", plan.b0}, {"c", plan.c0}}},
          {"steps", steps},
          {"handles_added", plan.handles_added}};
}

json to_json(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const Violation& v : violations) out.push_back({{"kind", v.kind}, {"detail", v.detail}});
  return out;
}

json to_json(const TraceVerdict& v) {
  return {{"accepted", v.accepted},
          {"failed_step", v.failed_step ? json(*v.failed_step) : json(nullptr)},
          {"rule", v.rule.empty() ? json(nullptr) : json(v.rule)},
          {"reason", v.reason}};
}

Input input_from_json(const json& j) {
  const json& kind = field(j, "kind", "");
  const std::string& k = as_string(kind, "/kind");
  if (k == "config") return config_from_json(j);
  if (k == "chart") return chart_from_json(j);
  throw ParseError("kind must be \"config\" or \"chart\"", "/kind");
}

}  // namespace hcalc
