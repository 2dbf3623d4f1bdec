#include "wordperc/serialize.hpp"

#include <stdexcept>
#include <string>

namespace wordperc {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string digits(const std::vector<std::uint8_t>& word) {
  std::string s;
  s.reserve(word.size());
  for (auto d : word) s.push_back(d ? '1' : '0');
  return s;
}

std::vector<std::uint8_t> parse_digits(const std::string& s) {
  std::vector<std::uint8_t> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("word prefix must contain only 0 and 1");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

}  // namespace

json to_json(const Site& s) { return json::array({s.x, s.y, s.z}); }

Site site_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("site must be [x, y, z]");
  return {j[0].get<Coord>(), j[1].get<Coord>(), j[2].get<Coord>()};
}

json to_json(const Path& path) {
  json out = json::array();
  for (const auto& s : path) out.push_back(to_json(s));
  return out;
}

Path path_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("path must be an array of sites");
  Path out;
  out.reserve(j.size());
  for (const auto& s : j) out.push_back(site_from_json(s));
  return out;
}

json to_json(const OutletVertices& o) {
  json out;
  out["center"] = to_json(o.center);
  out["b_pp"] = to_json(o.b_pp);
  out["b_mp"] = to_json(o.b_mp);
  out["b_pm"] = to_json(o.b_pm);
  out["b_mm"] = to_json(o.b_mm);
  out["w_pp"] = to_json(o.w_pp);
  out["w_mp"] = to_json(o.w_mp);
  out["w_pm"] = to_json(o.w_pm);
  out["w_mm"] = to_json(o.w_mm);
  return out;
}

json to_json(const OutletChain& chain) {
  json out;
  out["L"] = chain.L;
  out["outlets"] = json::array();
  for (const auto& o : chain.outlets) out["outlets"].push_back(to_json(o));
  out["b_paths"] = json::array();
  for (const auto& p : chain.b_paths) out["b_paths"].push_back(to_json(p));
  out["w_paths"] = json::array();
  for (const auto& p : chain.w_paths) out["w_paths"].push_back(to_json(p));
  out["lambda_b"] = chain.lambda_b;
  out["lambda_w"] = chain.lambda_w;
  out["ell_eff"] = chain.ell_eff;
  return out;
}

json to_json(const SplicePlan& plan) {
  json out;
  out["run_length"] = plan.run_length;
  out["I"] = plan.count;
  out["lambda_sum"] = plan.lambda_sum;
  out["base_length"] = plan.base_length;
  out["parity_pad"] = plan.parity_pad;
  out["detours"] = plan.detours;
  out["start_extra"] = plan.start_extra;
  return out;
}

SplicePlan plan_from_json(const json& j) {
  SplicePlan plan;
  plan.run_length = field(j, "run_length").get<std::int64_t>();
  plan.count = field(j, "I").get<std::int64_t>();
  plan.lambda_sum = field(j, "lambda_sum").get<std::int64_t>();
  plan.base_length = field(j, "base_length").get<std::int64_t>();
  plan.parity_pad = field(j, "parity_pad").get<int>();
  plan.detours = field(j, "detours").get<std::int64_t>();
  plan.start_extra = field(j, "start_extra").get<int>();
  return plan;
}

json to_json(const EmbeddingResult& result) {
  json out;
  out["start"] = to_json(result.start);
  out["length"] = result.path.size();
  out["word_prefix"] = digits(result.word_prefix);
  out["outlet_index_per_run"] = result.outlet_index_per_run;
  out["plans"] = json::array();
  for (const auto& p : result.plans) out["plans"].push_back(to_json(p));
  out["path"] = to_json(result.path);
  return out;
}

EmbeddingResult embedding_from_json(const json& j) {
  EmbeddingResult r;
  r.start = site_from_json(field(j, "start"));
  r.path = path_from_json(field(j, "path"));
  r.word_prefix = parse_digits(field(j, "word_prefix").get<std::string>());
  if (j.contains("outlet_index_per_run")) {
    r.outlet_index_per_run = j.at("outlet_index_per_run").get<std::vector<std::size_t>>();
  }
  if (j.contains("plans")) {
    for (const auto& p : j.at("plans")) r.plans.push_back(plan_from_json(p));
  }
  return r;
}

json to_json(const Word& word) { return format_word(word); }

Word word_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("word must be a string");
  return parse_word(j.get<std::string>());
}

json to_json(const EventSpec& spec) {
  json out;
  out["kind"] = to_string(spec.kind);
  out["p"] = spec.p;
  out["scale"] = spec.scale;
  out["t"] = spec.t;
  out["color"] = spec.color;
  if (spec.region) out["region"] = format_region(*spec.region);
  if (spec.word) out["word"] = to_json(*spec.word);
  out["n"] = spec.n;
  out["steps"] = spec.steps;
  out["window"] = spec.window;
  out["i"] = spec.i;
  out["j"] = spec.j;
  out["dims"] = spec.dims;
  out["budget"] = spec.budget;
  out["enforce_m0"] = spec.enforce_m0;
  return out;
}

EventSpec spec_from_json(const json& j) {
  EventSpec spec;
  spec.kind = parse_event_kind(field(j, "kind").get<std::string>());
  spec.p = field(j, "p").get<double>();
  spec.scale = field(j, "scale").get<Coord>();
  spec.t = j.value("t", Coord{0});
  spec.color = j.value("color", 1);
  if (j.contains("region")) spec.region = parse_region(j.at("region").get<std::string>());
  if (j.contains("word")) spec.word = word_from_json(j.at("word"));
  spec.n = j.value("n", std::int64_t{0});
  spec.steps = j.value("steps", Coord{12});
  spec.window = j.value("window", Coord{8});
  spec.i = j.value("i", Coord{0});
  spec.j = j.value("j", Coord{0});
  spec.dims = j.value("dims", 4);
  spec.budget = j.value("budget", std::uint64_t{1'000'000});
  spec.enforce_m0 = j.value("enforce_m0", true);
  return spec;
}

json to_json(const EstimateReport& report) {
  json out;
  out["spec"] = to_json(report.spec);
  out["trials"] = report.trials;
  out["successes"] = report.successes;
  out["p_hat"] = report.p_hat;
  out["ci_low"] = report.ci_low;
  out["ci_high"] = report.ci_high;
  out["seed"] = report.seed;
  out["elapsed_ms"] = report.elapsed_ms;
  out["flags"] = report.flags;
  return out;
}

EstimateReport report_from_json(const json& j) {
  EstimateReport r;
  r.spec = spec_from_json(field(j, "spec"));
  r.trials = field(j, "trials").get<std::uint64_t>();
  r.successes = field(j, "successes").get<std::uint64_t>();
  r.p_hat = field(j, "p_hat").get<double>();
  r.ci_low = field(j, "ci_low").get<double>();
  r.ci_high = field(j, "ci_high").get<double>();
  r.seed = field(j, "seed").get<std::uint64_t>();
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  if (j.contains("flags")) r.flags = j.at("flags").get<std::vector<std::string>>();
  return r;
}

}  // namespace wordperc
