#include "wordperc/embedder.hpp"

#include <stdexcept>

namespace wordperc {

namespace {

// Outlet sites seen from one colour's side.
struct Side {
  Site direct;  // centre site next to the connector start (b_pm / w_pp)
  Site extra;   // other centre site (b_mm / w_mp)
  Site out;     // connector start (b_pp / w_pm)
  Site in;      // connector end (b_mp / w_mm)
};

Side side(const OutletVertices& o, int color) {
  return color ? Side{o.b_pm, o.b_mm, o.b_pp, o.b_mp} : Side{o.w_pp, o.w_mp, o.w_pm, o.w_mm};
}

void append(Path& dst, const Path& src) { dst.insert(dst.end(), src.begin(), src.end()); }

// Path of a spliced run; ends on a centre site of outlet k + I.
Path spliced_run(const OutletChain& chain, int color, std::size_t k, int start_extra,
                 const SplicePlan& plan) {
  const auto& paths = color ? chain.b_paths : chain.w_paths;
  const auto first = side(chain.outlets[k], color);
  Path seq{start_extra ? first.extra : first.direct};
  if (start_extra) seq.push_back(first.direct);
  for (std::int64_t i = 0; i < plan.count; ++i) {
    const auto at = k + static_cast<std::size_t>(i);
    if (i >= 1 && i <= plan.detours) {
      const auto s = side(chain.outlets[at], color);
      seq.push_back(s.extra);
      seq.push_back(s.direct);
    }
    append(seq, paths[at]);
  }
  const auto last = side(chain.outlets[k + static_cast<std::size_t>(plan.count)], color);
  seq.push_back(last.extra);
  if (plan.parity_pad) seq.push_back(last.direct);
  return seq;
}

// Every site a run of `color` entering outlet k can follow without splicing.
Path greedy_run(const OutletChain& chain, int color, std::size_t k, int start_extra) {
  const auto& paths = color ? chain.b_paths : chain.w_paths;
  const auto first = side(chain.outlets[k], color);
  Path seq{start_extra ? first.extra : first.direct};
  if (start_extra) seq.push_back(first.direct);
  if (k >= paths.size()) {
    seq.push_back(first.out);
    return seq;
  }
  for (std::size_t at = k; at < paths.size(); ++at) append(seq, paths[at]);
  const auto last = side(chain.outlets.back(), color);
  seq.push_back(last.extra);
  seq.push_back(last.direct);
  seq.push_back(last.out);
  return seq;
}

}  // namespace

EmbedResult embed_word(const Configuration& config, const OutletChain& chain, const Word& word,
                       std::int64_t n, EmbedOptions options) {
  if (n < 1) throw std::invalid_argument("prefix length must be positive");
  if (chain.outlets.empty()) return EmbedFailure{0, "empty chain"};
  const auto runs = prefix_runs(word, n);

  EmbeddingResult result;
  std::size_t k = 0;
  int start_extra = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto& run = runs[r];
    const bool final_run = r + 1 == runs.size();
    result.outlet_index_per_run.push_back(k);
    Path seq;
    if (!final_run) {
      const auto& lambdas = run.symbol ? chain.lambda_b : chain.lambda_w;
      if (options.enforce_m0 && run.length < chain.ell_eff * chain.ell_eff) {
        return EmbedFailure{r, "run of length " + std::to_string(run.length) +
                                   " is below ell_eff^2 = " +
                                   std::to_string(chain.ell_eff * chain.ell_eff)};
      }
      if (k >= lambdas.size()) return EmbedFailure{r, "chain exhausted"};
      const auto plan = splice_plan(std::span(lambdas).subspan(k), run.length, chain.ell_eff,
                                    {start_extra, options.enforce_m0});
      if (const auto* bad = std::get_if<SpliceInfeasible>(&plan)) {
        return EmbedFailure{r, bad->reason};
      }
      const auto& p = std::get<SplicePlan>(plan);
      seq = spliced_run(chain, run.symbol, k, start_extra, p);
      result.plans.push_back(p);
      k += static_cast<std::size_t>(p.count);
      // Ending on the direct centre site leads to the other colour's direct site.
      start_extra = p.parity_pad ? 0 : 1;
    } else {
      seq = greedy_run(chain, run.symbol, k, start_extra);
      const auto want = static_cast<std::size_t>(run.length);
      if (seq.size() < want) {
        return EmbedFailure{r, "chain exhausted: final run needs " + std::to_string(want) +
                                   " sites, " + std::to_string(seq.size()) + " available"};
      }
      if (!(options.extend_tail && run.infinite)) seq.resize(want);
    }
    const bool extended = final_run && options.extend_tail && run.infinite;
    if (static_cast<std::int64_t>(seq.size()) != run.length && !extended) {
      throw std::logic_error("spliced run has length " + std::to_string(seq.size()) +
                             ", expected " + std::to_string(run.length));
    }
    append(result.path, seq);
    result.word_prefix.insert(result.word_prefix.end(), seq.size(),
                              static_cast<std::uint8_t>(run.symbol));
  }
  result.start = result.path.front();

  const auto verdict = verify_embedding(config, result);
  if (!verdict.ok) {
    throw std::logic_error("embedding failed verification at " +
                           std::to_string(verdict.index.value_or(0)) + ": " + verdict.reason);
  }
  return result;
}

Verdict verify_embedding(const Configuration& config, const EmbeddingResult& result) {
  if (!result.path.empty() && result.path.front() != result.start) {
    return {false, 0, "path does not begin at the start site"};
  }
  return check_embedding<Site>(
      result.path, result.word_prefix, [&](const Site& s) { return config.state(s); },
      [](const Site& a, const Site& b) { return adjacent(a, b); });
}

}  // namespace wordperc
