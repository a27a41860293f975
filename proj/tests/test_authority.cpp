// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "refres/authority.hpp"
#include "refres/text.hpp"

using namespace refres;

namespace {

AuthorityTable table_of(std::vector<std::pair<std::string, std::string>> rows) {
  std::vector<AuthorityEntry> entries;
  for (auto& [variant, stem] : rows) entries.push_back({fold_source(variant), variant, stem, "default"});
  return AuthorityTable(std::move(entries));
}

// Independent scoring: count trigrams of h found in a, then the formula.
struct Oracle {
  std::string variant;
  std::string bibstem;
  int overlap;
  double score;
};

int count_overlap(const std::string& a, const std::string& h) {
  int n = 0;
  for (std::size_t i = 0; i + 3 <= h.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j + 3 <= a.size() && !found; ++j) found = a.compare(j, 3, h, i, 3) == 0;
    n += found ? 1 : 0;
  }
  return n;
}

std::vector<Oracle> full_ranking(const AuthorityTable& table, const std::string& h) {
  std::vector<Oracle> all;
  for (const auto& e : table.entries()) {
    const int d = count_overlap(e.variant, h);
    const double lev = static_cast<double>(levenshtein(e.variant, h));
    all.push_back({e.variant, e.bibstem, d,
                   1.0 - (static_cast<double>(d) - static_cast<double>(e.variant.size())) * lev /
                             static_cast<double>(h.size())});
  }
  std::sort(all.begin(), all.end(), [&h](const Oracle& x, const Oracle& y) {
    if ((x.variant == h) != (y.variant == h)) return x.variant == h;
    if (x.score != y.score) return x.score < y.score;
    if (x.variant.size() != y.variant.size()) return x.variant.size() < y.variant.size();
    if (x.bibstem != y.bibstem) return x.bibstem < y.bibstem;
    return x.variant < y.variant;
  });
  std::vector<Oracle> dedup;
  std::set<std::string> stems;
  for (auto& o : all) {
    if (stems.insert(o.bibstem).second) dedup.push_back(o);
  }
  return dedup;
}

}  // namespace

TEST_CASE("trigram overlap counts trigrams of h found in a") {
  CHECK(trigram_overlap("astrophys j", "astrophys j") == 9);
  CHECK(trigram_overlap("zzzzz", "apj") == 0);
  CHECK(trigram_overlap("aaaaa", "aaaa") == 2);
  CHECK(trigram_overlap("apj", "ap") == 0);
}

TEST_CASE("source similarity follows the scoring formula") {
  CHECK(source_similarity("apj", "apj") == doctest::Approx(1.0));
  CHECK(source_similarity("apj", "apj.") == doctest::Approx(1.5));
  CHECK(source_similarity("xyzqw", "apj.") == doctest::Approx(7.25));
  CHECK_THROWS_AS(source_similarity("apj", ""), InvalidHeadError);
}

TEST_CASE("n_best_sources ranking") {
  const auto table = table_of({{"apj", "ApJ"}, {"aj", "AJ"}, {"mnras", "MNRAS"}});
  auto best = table.n_best_sources("ap j", 5);
  REQUIRE(best.size() == 3);
  CHECK(best[0].entry->bibstem == "ApJ");

  auto exact = table.n_best_sources("mnras", 5);
  REQUIRE_FALSE(exact.empty());
  CHECK(exact[0].entry->variant == "mnras");
  CHECK(exact[0].score == doctest::Approx(1.0));

  CHECK(AuthorityTable().n_best_sources("apj", 5).empty());
  CHECK(table.n_best_sources("", 5).empty());
  CHECK(table.n_best_sources("apj", 1).size() == 1);
}

TEST_CASE("every shipped variant ranks itself first") {
  const auto table = fixtures::shipped_authority();
  for (const auto& e : table.entries()) {
    auto best = table.n_best_sources(e.display, 5);
    REQUIRE_FALSE(best.empty());
    CHECK(best[0].entry->variant == e.variant);
    CHECK(best[0].score == doctest::Approx(1.0));
  }
  // A long head with OCR damage still finds its journal.
  auto noisy = table.n_best_sources("Astropbys. J.", 5);
  REQUIRE_FALSE(noisy.empty());
  CHECK(noisy[0].entry->bibstem == "ApJ");
}

TEST_CASE("prefilter soundness against full scoring on random tables") {
  std::mt19937_64 rng(99);
  const std::string alpha = "abcd ";
  int compared = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<AuthorityEntry> entries;
    const std::size_t size = 2 + rng() % 12;
    std::set<std::string> seen;
    while (entries.size() < size) {
      std::string v(1 + rng() % 9, 'a');
      for (char& c : v) c = alpha[rng() % 4];
      if (!seen.insert(v).second) continue;
      entries.push_back({v, v, "S" + std::to_string(rng() % 8), "default"});
    }
    AuthorityTable table(std::move(entries));
    std::string h(1 + rng() % 10, 'a');
    for (char& c : h) c = alpha[rng() % 4];
    const std::size_t n = 1 + rng() % 5;

    const auto got = table.n_best_sources(h, n);
    auto full = full_ranking(table, h);
    int dmax = 0;
    for (const auto& e : table.entries()) dmax = std::max(dmax, count_overlap(e.variant, h));
    const int cutoff = (dmax + 1) / 2;
    if (full.size() > n) full.resize(n);
    const bool prefilter_bites =
        h.size() >= 3 && dmax > 0 &&
        std::any_of(full.begin(), full.end(), [cutoff](const Oracle& o) { return o.overlap < cutoff; });
    if (prefilter_bites) {
      // Whatever is returned must have passed the prefilter.
      for (const auto& m : got) CHECK(m.trigram_overlap >= cutoff);
      continue;
    }
    ++compared;
    REQUIRE(got.size() == full.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].entry->variant == full[i].variant);
      CHECK(got[i].score == doctest::Approx(full[i].score));
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("scoring cost grows no worse than quadratically in the head length") {
  const auto table = fixtures::shipped_authority();
  auto time_for = [&table](std::size_t len) {
    std::string h;
    while (h.size() < len) h += "astrophysical journal monthly notices ";
    h.resize(len);
    const auto start = std::chrono::steady_clock::now();
    std::size_t sink = 0;
    for (int k = 0; k < 40; ++k) sink += table.n_best_sources(h, 5).size();
    CHECK(sink > 0);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  time_for(20);
  const double t_short = time_for(25);
  const double t_long = time_for(200);
  // 8x the length: quadratic growth is 64x; allow generous timer noise.
  CHECK(t_long <= 64.0 * 3.0 * t_short + 0.05);
}
