#include "wordperc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wordperc/configuration.hpp"
#include "wordperc/embedder.hpp"
#include "wordperc/montecarlo.hpp"
#include "wordperc/pipeline.hpp"
#include "wordperc/report_io.hpp"
#include "wordperc/serialize.hpp"

namespace wordperc::cli {

namespace {

struct WordArgs {
  std::string word;
  std::string word_file;
  std::int64_t n = 0;
};

struct EventArgs {
  std::string event;
  double p = 0.5;
  Coord scale = 0;
  Coord t = 0;
  int color = 1;
  std::string region;
  WordArgs word;
  Coord steps = 12;
  Coord window = 8;
  Coord i = 0;
  Coord j = 0;
  int dims = 4;
  std::uint64_t budget = 1'000'000;
  bool relaxed = false;
};

struct OutputArgs {
  std::string format;
  std::string file;
  std::string meta;
};

std::optional<Word> load_word(const WordArgs& a) {
  if (!a.word.empty() && !a.word_file.empty()) {
    throw std::invalid_argument("give --word or --word-file, not both");
  }
  if (!a.word_file.empty()) return read_word_file(a.word_file);
  if (a.word.empty()) return std::nullopt;
  if (a.word.find_first_not_of("01") == std::string::npos) return Word::from_bits(a.word);
  return parse_word(a.word);
}

std::int64_t resolve_n(const Word& word, std::int64_t n) {
  if (n > 0) return n;
  const auto finite = word.finite_length();
  if (finite < 0) throw std::invalid_argument("--n is required for an infinite word");
  return finite;
}

Site parse_site(const std::string& text) {
  Site s;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> s.x >> c1 >> s.y >> c2 >> s.z) || c1 != ',' || c2 != ',' || !in.eof()) {
    throw std::invalid_argument("site must be written x,y,z, got '" + text + "'");
  }
  return s;
}

void add_word_options(CLI::App* app, WordArgs& a) {
  app->add_option("--word", a.word, "word: digits such as 0011, or 'first=.. runs=.. tail=..'");
  app->add_option("--word-file", a.word_file, "file holding one word line");
  app->add_option("--n", a.n, "prefix length (defaults to the length of a finite word)");
}

void add_event_options(CLI::App* app, EventArgs& a, bool with_kind) {
  if (with_kind) app->add_option("--event", a.event, "event kind")->required();
  app->add_option("--p", a.p, "site probability");
  app->add_option("--scale,--N,--L", a.scale, "N for crossing/uniqueness, L for outlet events");
  app->add_option("--t", a.t, "uniqueness diameter (defaults to the scale)");
  app->add_option("--color", a.color, "uniqueness colour");
  app->add_option("--region", a.region, "box override x0..x1,y0..y1,z0..z1");
  add_word_options(app, a.word);
  app->add_option("--steps", a.steps, "oriented path length");
  app->add_option("--window", a.window, "oriented search |i| bound");
  app->add_option("--i", a.i, "renormalised vertex i");
  app->add_option("--j", a.j, "renormalised vertex j");
  app->add_option("--dims", a.dims, "column lattice dimension for remark2_crossing");
  app->add_option("--budget", a.budget, "oracle node budget for w_inequality");
  app->add_flag("--relaxed", a.relaxed, "embed_success without the ell_eff^2 run floor");
}

EventSpec to_spec(const EventArgs& a) {
  EventSpec spec;
  spec.kind = parse_event_kind(a.event);
  spec.p = a.p;
  spec.scale = a.scale;
  spec.t = a.t;
  spec.color = a.color;
  if (!a.region.empty()) spec.region = parse_region(a.region);
  spec.word = load_word(a.word);
  if (spec.word) spec.n = resolve_n(*spec.word, a.word.n);
  spec.steps = a.steps;
  spec.window = a.window;
  spec.i = a.i;
  spec.j = a.j;
  spec.dims = a.dims;
  spec.budget = a.budget;
  spec.enforce_m0 = !a.relaxed;
  validate(spec);
  return spec;
}

unsigned resolve_threads(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("PERC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    throw std::invalid_argument(std::string("PERC_THREADS must be a positive integer, got '") +
                                env + "'");
  }
  return 1;
}

std::string comment_header(const json& config) { return "# config " + config.dump() + "\n"; }

std::string iso_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << body;
  if (!f) throw std::runtime_error("failed writing " + path);
}

// Primary output goes to the file if one was named, otherwise to `out`.
void emit(const OutputArgs& o, std::ostream& out, const std::string& body) {
  if (o.file.empty()) {
    out << body;
  } else {
    write_file(o.file, body);
  }
}

void emit_meta(const OutputArgs& o, json meta) {
  std::string path = o.meta;
  if (path.empty() && !o.file.empty()) path = o.file + ".meta.json";
  if (path.empty()) return;
  meta["finished_at"] = iso_now();
  write_file(path, meta.dump(2) + "\n");
}

void add_output_options(CLI::App* app, OutputArgs& o, const std::string& default_format,
                        std::vector<std::string> formats) {
  o.format = default_format;
  app->add_option("--out", o.format, "output format")->check(CLI::IsMember(formats));
  app->add_option("--file", o.file, "write the primary output here instead of stdout");
  app->add_option("--meta", o.meta, "timing sidecar (default <file>.meta.json when --file is set)");
}

int run_gen(std::uint64_t seed, double p, const std::string& region_text, const OutputArgs& o,
            std::ostream& out) {
  const Region r = parse_region(region_text);
  const Configuration config(seed, p);
  json cfg;
  cfg["command"] = "gen";
  cfg["seed"] = seed;
  cfg["p"] = p;
  cfg["region"] = format_region(r);
  std::ostringstream body;
  if (o.format == "json") {
    std::string states;
    states.reserve(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) states.push_back(config.state(r.site(k)) ? '1' : '0');
    json doc;
    doc["config"] = cfg;
    doc["order"] = "x-major, then y, then z";
    doc["states"] = states;
    body << doc.dump(2) << '\n';
  } else {
    body << comment_header(cfg);
    for (Coord x = r.lo.x; x <= r.hi.x; ++x) {
      body << "x=" << x << '\n';
      for (Coord z = r.hi.z; z >= r.lo.z; --z) {
        body << std::setw(6) << z << ' ';
        for (Coord y = r.lo.y; y <= r.hi.y; ++y) body << (config.state({x, y, z}) ? '1' : '0');
        body << '\n';
      }
    }
  }
  emit(o, out, body.str());
  return kOk;
}

int run_event(std::uint64_t seed, const EventArgs& a, std::ostream& out) {
  const EventSpec spec = to_spec(a);
  json cfg;
  cfg["command"] = "event";
  cfg["seed"] = seed;
  cfg["spec"] = to_json(spec);
  out << comment_header(cfg) << (evaluate(spec, seed) ? "true" : "false") << '\n';
  return kOk;
}

std::string render_reports(const json& cfg, std::vector<EstimateReport> reports,
                           const std::string& format) {
  for (auto& r : reports) r.elapsed_ms = 0;
  std::ostringstream body;
  if (format == "json") {
    json doc;
    doc["config"] = cfg;
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    body << doc.dump(2) << '\n';
  } else {
    body << comment_header(cfg);
    write_report(body, reports, ReportFormat::csv);
  }
  return body.str();
}

json timing(const std::vector<EstimateReport>& reports, unsigned threads) {
  json meta;
  meta["threads"] = threads;
  meta["elapsed_ms"] = json::array();
  for (const auto& r : reports) meta["elapsed_ms"].push_back(r.elapsed_ms);
  return meta;
}

int run_estimate(std::uint64_t seed, const EventArgs& a, std::uint64_t trials, int threads_flag,
                 std::uint64_t min_successes, const OutputArgs& o, std::ostream& out) {
  const EventSpec spec = to_spec(a);
  EstimateOptions opts;
  opts.threads = resolve_threads(threads_flag);
  opts.min_successes = min_successes;
  const auto report = estimate(spec, trials, seed, opts);
  json cfg;
  cfg["command"] = "estimate";
  cfg["seed"] = seed;
  cfg["trials"] = trials;
  cfg["min_successes"] = min_successes;
  cfg["spec"] = to_json(spec);
  emit(o, out, render_reports(cfg, {report}, o.format));
  emit_meta(o, timing({report}, opts.threads));
  return kOk;
}

int run_sweep(std::uint64_t seed, const EventArgs& a, const std::vector<double>& ps,
              const std::vector<Coord>& scales, std::uint64_t trials, int threads_flag,
              std::uint64_t min_successes, const OutputArgs& o, std::ostream& out) {
  EventArgs base = a;
  if (!ps.empty()) base.p = ps.front();
  if (!scales.empty()) base.scale = scales.front();
  const EventSpec tmpl = to_spec(base);
  SweepGrid grid{ps, scales};
  for (double p : ps) {
    EventSpec s = tmpl;
    s.p = p;
    validate(s);
  }
  for (Coord L : scales) {
    EventSpec s = tmpl;
    s.scale = L;
    validate(s);
  }
  EstimateOptions opts;
  opts.threads = resolve_threads(threads_flag);
  opts.min_successes = min_successes;
  const auto reports = sweep(tmpl, grid, trials, seed, opts);
  json cfg;
  cfg["command"] = "sweep";
  cfg["seed"] = seed;
  cfg["trials"] = trials;
  cfg["min_successes"] = min_successes;
  cfg["ps"] = ps;
  cfg["scales"] = scales;
  cfg["spec"] = to_json(tmpl);
  std::string body = render_reports(cfg, reports, o.format);
  if (o.format != "json") {
    std::string flags;
    for (std::size_t k = 0; k < reports.size(); ++k) {
      for (const auto& f : reports[k].flags) flags += "# flag row=" + std::to_string(k) + " " + f + "\n";
    }
    body += flags;
  }
  emit(o, out, body);
  emit_meta(o, timing(reports, opts.threads));
  return kOk;
}

struct EmbedArgs {
  double p = 0.5;
  Coord L = 3;
  Coord steps = 12;
  Coord window = 8;
  int retries = 4;
  WordArgs word;
  bool relaxed = false;
  bool extend_tail = false;
  std::string json_path;
  std::string chain_path;
};

int run_embed(std::uint64_t seed, const EmbedArgs& a, std::ostream& out, std::ostream& err) {
  const auto word = load_word(a.word);
  if (!word) throw std::invalid_argument("embed needs --word or --word-file");
  word->validate();
  const auto n = resolve_n(*word, a.word.n);
  const Configuration config(seed, a.p);

  json cfg;
  cfg["command"] = "embed";
  cfg["seed"] = seed;
  cfg["p"] = a.p;
  cfg["L"] = a.L;
  cfg["steps"] = a.steps;
  cfg["window"] = a.window;
  cfg["retries"] = a.retries;
  cfg["word"] = to_json(*word);
  cfg["n"] = n;
  cfg["relaxed"] = a.relaxed;
  cfg["extend_tail"] = a.extend_tail;

  json doc;
  doc["config"] = cfg;
  auto finish = [&](int code) {
    const std::string body = doc.dump(2) + "\n";
    if (a.json_path.empty()) {
      out << body;
    } else {
      write_file(a.json_path, body);
    }
    if (code != kOk) {
      err << "infeasible at stage " << doc["stage"].get<std::string>() << ": "
          << doc["reason"].get<std::string>() << '\n';
    }
    return code;
  };

  const auto attempt = build_chain(config, {a.L, a.steps, a.window, a.retries});
  json renorm = json::array();
  for (const auto& v : attempt.path) renorm.push_back(json::array({v.i, v.j}));
  doc["attempts"] = attempt.attempts;
  doc["renorm_path"] = renorm;
  if (!attempt.chain) {
    doc["status"] = "infeasible";
    doc["stage"] = attempt.stage;
    doc["reason"] = attempt.reason;
    return finish(kInfeasible);
  }
  const auto& chain = *attempt.chain;
  if (!a.chain_path.empty()) write_file(a.chain_path, to_json(chain).dump(2) + "\n");
  json summary;
  summary["outlets"] = chain.outlets.size();
  summary["lambda_b"] = chain.lambda_b;
  summary["lambda_w"] = chain.lambda_w;
  summary["ell_eff"] = chain.ell_eff;
  doc["chain"] = summary;

  EmbedOptions options;
  options.enforce_m0 = !a.relaxed;
  options.extend_tail = a.extend_tail;
  EmbedResult result;
  try {
    result = embed_word(config, chain, *word, n, options);
  } catch (const std::invalid_argument& e) {
    doc["status"] = "infeasible";
    doc["stage"] = "embedding";
    doc["reason"] = e.what();
    return finish(kInfeasible);
  }
  if (const auto* failure = std::get_if<EmbedFailure>(&result)) {
    doc["status"] = "infeasible";
    doc["stage"] = "embedding";
    doc["reason"] = "run " + std::to_string(failure->run) + ": " + failure->reason;
    return finish(kInfeasible);
  }
  const auto& embedding = std::get<EmbeddingResult>(result);
  const auto verdict = verify_embedding(config, embedding);
  if (!verdict.ok) {
    doc["status"] = "infeasible";
    doc["stage"] = "verification";
    doc["reason"] = verdict.reason;
    return finish(kInfeasible);
  }
  doc["status"] = "ok";
  doc["verified"] = true;
  doc["embedding"] = to_json(embedding);
  return finish(kOk);
}

struct OracleArgs {
  double p = 0.5;
  std::string region;
  WordArgs word;
  std::vector<std::string> starts;
  std::string from;
  std::uint64_t budget = 1'000'000;
};

int run_oracle(std::uint64_t seed, const OracleArgs& a, std::ostream& out) {
  const Region region = parse_region(a.region);
  const auto word = load_word(a.word);
  if (!word) throw std::invalid_argument("oracle needs --word or --word-file");
  word->validate();
  const auto n = resolve_n(*word, a.word.n);
  if (a.starts.empty() == a.from.empty()) {
    throw std::invalid_argument("oracle needs exactly one of --start or --from");
  }
  const Configuration config(seed, a.p);

  json cfg;
  cfg["command"] = "oracle";
  cfg["seed"] = seed;
  cfg["p"] = a.p;
  cfg["region"] = format_region(region);
  cfg["word"] = to_json(*word);
  cfg["n"] = n;
  cfg["budget"] = a.budget;

  OracleResult result;
  if (!a.from.empty()) {
    const Site v = parse_site(a.from);
    cfg["from"] = to_json(v);
    result = oracle_embed_from(config, region, *word, n, v, a.budget);
  } else {
    std::vector<Site> starts;
    for (const auto& s : a.starts) starts.push_back(parse_site(s));
    json js = json::array();
    for (const auto& s : starts) js.push_back(to_json(s));
    cfg["starts"] = js;
    result = oracle_embed(config, region, *word, n, starts, a.budget);
  }
  out << comment_header(cfg);
  out << "status " << to_string(result.status) << '\n';
  out << "nodes " << result.nodes << '\n';
  if (result.status == OracleStatus::found) out << "path " << to_json(result.path).dump() << '\n';
  switch (result.status) {
    case OracleStatus::found:
      return kOk;
    case OracleStatus::none:
      return kInfeasible;
    case OracleStatus::budget_exhausted:
      return kBudget;
  }
  return kOk;
}

struct VerifyArgs {
  std::string json_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> p;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::ifstream in(a.json_path);
  if (!in) throw std::runtime_error("cannot open " + a.json_path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  const json* cfg = doc.contains("config") ? &doc.at("config") : nullptr;
  auto seed = a.seed;
  auto p = a.p;
  if (!seed && cfg && cfg->contains("seed")) seed = cfg->at("seed").get<std::uint64_t>();
  if (!p && cfg && cfg->contains("p")) p = cfg->at("p").get<double>();
  if (!seed || !p) throw std::invalid_argument("verify needs --seed and --p when the file has no config");
  if (doc.contains("status") && doc.at("status") != "ok") {
    out << "no embedding: status " << doc.at("status").get<std::string>() << '\n';
    return kInfeasible;
  }
  const auto embedding = embedding_from_json(doc.contains("embedding") ? doc.at("embedding") : doc);
  const auto verdict = verify_embedding(Configuration(*seed, *p), embedding);
  if (verdict.ok) {
    out << "ok length " << embedding.path.size() << '\n';
    return kOk;
  }
  out << "violation";
  if (verdict.index) out << " at index " << *verdict.index;
  out << ": " << verdict.reason << '\n';
  return kInfeasible;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Percolation of words on the shifted cubic lattice", "wordperc"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "base seed")->required();
  };

  auto* gen = app.add_subcommand("gen", "dump site states of a region");
  double gen_p = 0.5;
  std::string gen_region;
  OutputArgs gen_out;
  add_seed(gen);
  gen->add_option("--p", gen_p, "site probability");
  gen->add_option("--region", gen_region, "x0..x1,y0..y1,z0..z1")->required();
  add_output_options(gen, gen_out, "text", {"text", "json"});

  auto* event = app.add_subcommand("event", "evaluate one event on one seed");
  EventArgs event_args;
  add_seed(event);
  add_event_options(event, event_args, true);

  auto* est = app.add_subcommand("estimate", "Monte Carlo estimate of one event");
  EventArgs est_args;
  std::uint64_t trials = 1000;
  int threads = 0;
  std::uint64_t min_successes = 0;
  OutputArgs est_out;
  add_seed(est);
  add_event_options(est, est_args, true);
  est->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  est->add_option("--threads", threads, "worker threads (PERC_THREADS if unset)");
  est->add_option("--min-successes", min_successes, "flag reports with fewer successes");
  add_output_options(est, est_out, "csv", {"csv", "json"});

  auto* sw = app.add_subcommand("sweep", "estimates over a grid of p and scale");
  EventArgs sw_args;
  std::vector<double> ps;
  std::vector<Coord> scales;
  OutputArgs sw_out;
  add_seed(sw);
  add_event_options(sw, sw_args, true);
  sw->add_option("--ps", ps, "comma-separated p values")->delimiter(',');
  sw->add_option("--scales,--Ns,--Ls", scales, "comma-separated scales")->delimiter(',');
  sw->add_option("--trials", trials, "trials per grid point")->check(CLI::PositiveNumber);
  sw->add_option("--threads", threads, "worker threads (PERC_THREADS if unset)");
  sw->add_option("--min-successes", min_successes, "flag reports with fewer successes");
  add_output_options(sw, sw_out, "csv", {"csv", "json"});

  auto* emb = app.add_subcommand("embed", "oriented path, outlet chain, word embedding, check");
  EmbedArgs emb_args;
  add_seed(emb);
  emb->add_option("--p", emb_args.p, "site probability");
  emb->add_option("--L", emb_args.L, "block scale")->check(CLI::PositiveNumber);
  emb->add_option("--steps", emb_args.steps, "oriented path length")->check(CLI::PositiveNumber);
  emb->add_option("--window", emb_args.window, "oriented search |i| bound");
  emb->add_option("--retries", emb_args.retries, "chain extraction retries");
  add_word_options(emb, emb_args.word);
  emb->add_flag("--relaxed", emb_args.relaxed, "allow runs shorter than ell_eff^2");
  emb->add_flag("--extend-tail", emb_args.extend_tail, "follow the chain to its end on a constant tail");
  emb->add_option("--json", emb_args.json_path, "write the result JSON here instead of stdout");
  emb->add_option("--chain-json", emb_args.chain_path, "also dump the full outlet chain");

  auto* orc = app.add_subcommand("oracle", "exhaustive embedding search in a small box");
  OracleArgs orc_args;
  add_seed(orc);
  orc->add_option("--p", orc_args.p, "site probability");
  orc->add_option("--region", orc_args.region, "x0..x1,y0..y1,z0..z1")->required();
  add_word_options(orc, orc_args.word);
  orc->add_option("--start", orc_args.starts, "first site of the path, x,y,z (repeatable)");
  orc->add_option("--from", orc_args.from, "embed starting from v: first digit on a neighbour");
  orc->add_option("--budget", orc_args.budget, "node budget");

  auto* ver = app.add_subcommand("verify", "check an embedding JSON against its configuration");
  VerifyArgs ver_args;
  std::uint64_t ver_seed = 0;
  double ver_p = 0;
  ver->add_option("--json", ver_args.json_path, "embedding JSON")->required();
  auto* ver_seed_opt = ver->add_option("--seed", ver_seed, "override the recorded seed");
  auto* ver_p_opt = ver->add_option("--p", ver_p, "override the recorded p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return run_gen(seed, gen_p, gen_region, gen_out, out);
    if (*event) return run_event(seed, event_args, out);
    if (*est) return run_estimate(seed, est_args, trials, threads, min_successes, est_out, out);
    if (*sw) {
      return run_sweep(seed, sw_args, ps, scales, trials, threads, min_successes, sw_out, out);
    }
    if (*emb) return run_embed(seed, emb_args, out, err);
    if (*orc) return run_oracle(seed, orc_args, out);
    if (*ver) {
      if (*ver_seed_opt) ver_args.seed = ver_seed;
      if (*ver_p_opt) ver_args.p = ver_p;
      return run_verify(ver_args, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wordperc::cli
