#include <random>

#include "doctest.h"
#include "support/chain_words.hpp"
#include "support/planted.hpp"
#include "support/witness.hpp"
#include "wordperc/embedder.hpp"
#include "wordperc/pipeline.hpp"

using namespace wordperc;

namespace {

OutletChain corridor_outlet_chain(Coord L, int segments, Configuration* config) {
  auto cc = testing::corridor_chain(L, segments);
  auto result = connect_outlets(cc.config, L, cc.path, cc.centers);
  *config = cc.config;
  return std::get<OutletChain>(result);
}

Word run_word(int first, std::vector<std::int64_t> runs) {
  Word w;
  w.first_symbol = first;
  w.runs = std::move(runs);
  return w;
}

}  // namespace

TEST_CASE("three-outlet corridor embedding") {
  for (Coord L = 1; L <= 2; ++L) {
    CAPTURE(L);
    Configuration config = Configuration::constant(0);
    const auto chain = corridor_outlet_chain(L, 2, &config);
    const auto cc = testing::corridor_chain(L, 2);
    const std::int64_t l = 32 * L + 4;
    const Word w = run_word(1, {l, 3});
    const auto r = embed_word(config, chain, w, l + 3, {false, false});
    REQUIRE(std::holds_alternative<EmbeddingResult>(r));
    const auto& e = std::get<EmbeddingResult>(r);

    const auto& o = chain.outlets;
    Path expect{o[0].b_pm};
    expect.insert(expect.end(), cc.corridors[0].begin(), cc.corridors[0].end());
    expect.push_back(o[1].b_mm);
    expect.push_back(o[1].b_pm);
    expect.insert(expect.end(), cc.corridors[1].begin(), cc.corridors[1].end());
    expect.push_back(o[2].b_mm);
    expect.push_back(o[2].w_mp);
    expect.push_back(o[2].w_pp);
    expect.push_back(o[2].w_pm);
    CHECK(e.path == expect);
    CHECK(e.start == o[0].b_pm);
    CHECK(e.outlet_index_per_run == std::vector<std::size_t>{0, 2});
    REQUIRE(e.plans.size() == 1);
    CHECK(e.plans[0].count == 2);
    CHECK(e.plans[0].parity_pad == 0);
    CHECK(e.plans[0].detours == 1);
    CHECK(e.plans[0].start_extra == 0);
    CHECK(verify_embedding(config, e).ok);
  }
}

TEST_CASE("strict mode rejects runs below ell squared") {
  Configuration config = Configuration::constant(0);
  const auto chain = corridor_outlet_chain(1, 2, &config);
  const auto r = embed_word(config, chain, run_word(1, {36, 3}), 39);
  REQUIRE(std::holds_alternative<EmbedFailure>(r));
  CHECK(std::get<EmbedFailure>(r).run == 0);
}

TEST_CASE("a monochromatic word follows the connectors greedily") {
  Configuration config = Configuration::constant(0);
  const auto chain = corridor_outlet_chain(1, 3, &config);
  const std::int64_t available = 1 + 3 * 16 + 3;
  const auto r = embed_word(config, chain, Word::constant(1), available);
  REQUIRE(std::holds_alternative<EmbeddingResult>(r));
  const auto& e = std::get<EmbeddingResult>(r);
  CHECK(e.path.size() == static_cast<std::size_t>(available));
  CHECK(e.path.back() == chain.outlets.back().b_pp);
  CHECK(e.plans.empty());
  const auto longer = embed_word(config, chain, Word::constant(1), available + 1);
  CHECK(std::holds_alternative<EmbedFailure>(longer));
  const auto ext = embed_word(config, chain, Word::constant(1), 5, {true, true});
  REQUIRE(std::holds_alternative<EmbeddingResult>(ext));
  CHECK(std::get<EmbeddingResult>(ext).path.size() == static_cast<std::size_t>(available));
  CHECK_THROWS_AS(embed_word(config, chain, Word::constant(1), 0), std::invalid_argument);
}

TEST_CASE("embedding checker") {
  Overlay o{{{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{1, 1, 0}, 0}, {{2, 0, 0}, 0}};
  const Configuration c(0, 0.0, o);
  EmbeddingResult good;
  good.path = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
  good.word_prefix = {1, 1, 0};
  good.start = {0, 0, 0};
  CHECK(verify_embedding(c, good).ok);

  auto repeated = good;
  repeated.path = {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}};
  const auto v1 = verify_embedding(c, repeated);
  CHECK_FALSE(v1.ok);
  CHECK(v1.index == 2u);
  CHECK(v1.reason == "repeated vertex");

  auto wrong = good;
  wrong.word_prefix = {1, 0, 0};
  const auto v2 = verify_embedding(c, wrong);
  CHECK_FALSE(v2.ok);
  CHECK(v2.index == 1u);
  CHECK(v2.reason == "colour mismatch");

  auto jump = good;
  jump.path[2] = {2, 1, 0};
  const auto v3 = verify_embedding(c, jump);
  CHECK_FALSE(v3.ok);
  CHECK(v3.reason == "not adjacent");

  auto short_word = good;
  short_word.word_prefix.pop_back();
  CHECK_FALSE(verify_embedding(c, short_word).ok);
  auto moved = good;
  moved.start = {5, 5, 5};
  CHECK_FALSE(verify_embedding(c, moved).ok);
}

TEST_CASE("relaxed embeddings along planted chains verify") {
  const Coord L = 3;
  std::mt19937_64 rng(8);
  int embedded = 0, spliced_runs = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto config = testing::planted(seed, L, 12, 8);
    const auto attempt = build_chain(config, {L, 12, 8, 4});
    if (!attempt.chain) continue;
    for (int k = 0; k < 20; ++k) {
      const auto cw = testing::chain_compatible_word(*attempt.chain, rng);
      CAPTURE(format_word(cw.word));
      const auto r = embed_word(config, *attempt.chain, cw.word, cw.n, {false, false});
      REQUIRE(std::holds_alternative<EmbeddingResult>(r));
      const auto& e = std::get<EmbeddingResult>(r);
      CHECK(e.path.size() == static_cast<std::size_t>(cw.n));
      CHECK(e.word_prefix == materialize(cw.word, cw.n));
      CHECK(verify_embedding(config, e).ok);
      // Each spliced run ends on a centre site of the outlet the next run uses.
      for (std::size_t r2 = 0; r2 + 1 < e.outlet_index_per_run.size(); ++r2) {
        CHECK(e.outlet_index_per_run[r2 + 1] ==
              e.outlet_index_per_run[r2] + static_cast<std::size_t>(e.plans[r2].count));
      }
      ++embedded;
      spliced_runs += static_cast<int>(e.plans.size());
    }
  }
  MESSAGE("embedded " << embedded << " words with " << spliced_runs << " spliced runs");
  CHECK(embedded >= 60);
  CHECK(spliced_runs > embedded);
}
