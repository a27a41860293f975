// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "refres/io.hpp"
#include "refres/resolver.hpp"
#include "refres/synth.hpp"

using namespace refres;
using fixtures::serial;

namespace {

NoisyReference ref(const std::string& id, const std::string& raw) { return {id, 0, raw, normalize(raw), false}; }

std::string results_text(const std::vector<ResolutionOutcome>& outcomes) {
  std::ostringstream out;
  write_results(out, outcomes);
  return out.str();
}

}  // namespace

TEST_CASE("resolve_one on the worked examples") {
  auto data = fixtures::shipped_data({serial(1950, "ApJ", 112, 1, {"van de Hulst"}),
                                      serial(1950, "ApJ", 111, 414, {"Eggen"})});
  Resolver resolver(data->context(), ResolverConfig{});

  auto hulst = resolver.resolve_one(ref("a", "Huist, H. C. van de. 1950, Astrophys. J. 112,1."));
  REQUIRE(hulst.resolved());
  CHECK(hulst.bibcode->text() == "1950ApJ...112....1H");
  CHECK(stage_name(hulst.stage) == "core");
  CHECK(hulst.stage == "core:exact");
  CHECK(*hulst.author_score == doctest::Approx(2.0 / 3.0));
  CHECK(*hulst.source_score == doctest::Approx(1.0));

  auto eggen = resolver.resolve_one(ref("b", "Eggen, 0. J. 195oa, Ap.J. 111, 414"));
  REQUIRE(eggen.resolved());
  CHECK(eggen.bibcode->text() == "1950ApJ...111..414E");
  CHECK(stage_name(eggen.stage) == "heuristic-S2");

  auto absent = resolver.resolve_one(ref("c", "Smith, J. 1950, Astrophys. J. 112, 50."));
  CHECK_FALSE(absent.resolved());
  CHECK(absent.reason == UnresolvedReason::no_record);

  auto rejected = resolver.resolve_one(ref("d", "Zzyzx, Q. 1950, Astrophys. J. 112, 1."));
  CHECK(rejected.reason == UnresolvedReason::rejected_authors);

  CHECK(resolver.resolve_one(ref("e", "")).reason == UnresolvedReason::non_reference);
  CHECK(resolver.resolve_one(ref("f", "See the text above.")).reason == UnresolvedReason::non_reference);
  CHECK(resolver.resolve_one(ref("g", "Smith, J., ApJ 112, 1")).reason == UnresolvedReason::no_year);
  CHECK(resolver.resolve_one(ref("h", "Smith, J. 1950, Qwxyz Vvvv 3, 4")).reason == UnresolvedReason::no_record);

  NoisyReference orphan = ref("i", "---1950, ibid. 5, 1");
  orphan.orphan_backreference = true;
  CHECK(resolver.resolve_one(orphan).reason == UnresolvedReason::no_source);
}

TEST_CASE("disabled stages and relaxations") {
  auto data = fixtures::shipped_data({serial(1950, "ApJ", 111, 414, {"Eggen"})});
  ResolverConfig none;
  none.apply({{"enabled_stages", "none"}});
  CHECK(none.enabled_stages.empty());
  Resolver plain(data->context(), none);
  CHECK(plain.resolve_one(ref("b", "Eggen, 0. J. 195oa, Ap.J. 111, 414")).reason == UnresolvedReason::no_year);

  ResolverConfig strict;
  strict.enable_relaxations = false;
  strict.enable_relaxed = false;
  Resolver exact_only(data->context(), strict);
  CHECK_FALSE(exact_only.resolve_one(ref("c", "Eggen, O. J. 1951, Ap. J. 111, 414")).resolved());
  Resolver full(data->context(), ResolverConfig{});
  auto relaxed = full.resolve_one(ref("c", "Eggen, O. J. 1951, Ap. J. 111, 414"));
  REQUIRE(relaxed.resolved());
  CHECK(relaxed.stage == "core:year-from-volume");
  CHECK(relaxed.fields_changed == 1);
}

TEST_CASE("resolver config") {
  ResolverConfig c;
  CHECK(c.n_best == 5);
  CHECK(c.enabled_stages.size() == 5);
  CHECK(c.serial_da == 0.0);
  CHECK(c.special_da == 0.5);
  CHECK_THROWS_AS(c.apply({{"n_best", "0"}}), Error);
  CHECK_THROWS_AS(c.apply({{"colour", "red"}}), Error);
  CHECK_THROWS_AS(c.apply({{"enabled_stages", "S9"}}), Error);
  c.apply({{"enabled_stages", "S1, S3-source"}, {"enable_relaxed", "false"}, {"n_best", "3"}});
  CHECK(c.enabled_stages == std::set<StageId>{StageId::S1, StageId::S3});
  CHECK_FALSE(c.enable_relaxed);
  CHECK(c.n_best == 3);
  const auto shipped = ResolverConfig::load(fixtures::data_file("resolver.conf"));
  CHECK(shipped.n_best == 5);
  CHECK(shipped.enabled_stages.size() == 5);
}

TEST_CASE("resolve_corpus: empty list, ibid pair, order") {
  auto data = fixtures::shipped_data({serial(1950, "ApJ", 111, 414, {"Eggen"}), serial(1950, "ApJ", 112, 141, {"Eggen"})});
  Resolver resolver(data->context(), ResolverConfig{});
  CHECK(resolver.resolve_corpus({}).empty());

  auto out = resolver.resolve_corpus({ref("a", "Eggen, O. J. 1950a, Ap. J. 111, 414; Contr. Lick Obs., Series II, No. 27."),
                                      ref("b", "---1950b, ibid. 112, 141; ibid., No. 30.")});
  REQUIRE(out.size() == 2);
  CHECK(out[0].id == "a");
  CHECK(out[1].id == "b");
  REQUIRE(out[0].resolved());
  CHECK(out[0].bibcode->text() == "1950ApJ...111..414E");
  REQUIRE(out[1].resolved());
  CHECK(out[1].bibcode->text() == "1950ApJ...112..141E");
}

TEST_CASE("theses and monographs end to end") {
  auto data = fixtures::shipped_data({fixtures::thesis(1970, "Smith", "Harvard Univ."),
                                      fixtures::monograph(1939, {"Chandrasekhar"},
                                                          "An Introduction to the Study of Stellar Structure")});
  Resolver resolver(data->context(), ResolverConfig{});
  auto t = resolver.resolve_one(ref("t", "Smith, J. 1970, Ph.D. Thesis, Harvard Univ."));
  REQUIRE(t.resolved());
  CHECK(t.stage == "core:thesis");
  auto tb = resolver.resolve_one(ref("t", "Smith, J. 1970, Tbesis, Harvard Univ."));
  CHECK(tb.resolved());
  auto m = resolver.resolve_one(ref("m", "Chandrasekhar, S. 1939, An Introduction to the Study of Stellar Structure "
                                         "(Chicago: University of Chicago Press)."));
  REQUIRE(m.resolved());
  CHECK(m.stage == "monograph:title");
  ResolverConfig no_mono;
  no_mono.enable_monograph = false;
  Resolver without(data->context(), no_mono);
  CHECK_FALSE(without.resolve_one(ref("m", "Chandrasekhar, S. 1939, An Introduction to the Study of Stellar "
                                           "Structure.")).resolved());
}

TEST_CASE("generated corpora: determinism across workers, partition, one-field rule") {
  const auto authority = fixtures::shipped_authority();
  const auto templates = load_templates(fixtures::data_file("templates.tsv"));
  SynthConfig sc;
  sc.records = 800;
  sc.monograph_fraction = 0.03;
  const auto records = synthesize_database(authority, templates, sc);
  NoiseConfig nc;
  nc.count = 600;
  nc.seed = 42;
  const auto corpus = generate_corpus(records, authority, nc);
  auto data = fixtures::shipped_data(corpus.database);
  Resolver resolver(data->context(), ResolverConfig{});

  const auto one = resolver.resolve_corpus(corpus.references, 1);
  const auto many = resolver.resolve_corpus(corpus.references, 4);
  CHECK(results_text(one) == results_text(many));

  std::size_t resolved = 0;
  std::map<std::string, std::size_t> per_stage;
  for (const auto& o : one) {
    CHECK(o.bibcode.has_value() != o.reason.has_value());
    if (!o.resolved()) continue;
    ++resolved;
    ++per_stage[stage_name(o.stage)];
    CHECK(o.fields_changed <= 1);
    REQUIRE(o.author_score);
    CHECK(*o.author_score > 0.0);
  }
  std::size_t summed = 0;
  for (const auto& [stage, n] : per_stage) summed += n;
  CHECK(summed == resolved);
  CHECK(resolved > 500);
}

TEST_CASE("clean corpora resolve completely at the core stage") {
  const auto authority = fixtures::shipped_authority();
  const auto templates = load_templates(fixtures::data_file("templates.tsv"));
  SynthConfig sc;
  sc.records = 1500;
  sc.seed = 3;
  sc.monograph_fraction = 0.02;
  const auto records = synthesize_database(authority, templates, sc);
  NoiseConfig nc = NoiseConfig::clean();
  nc.seed = 8;
  const auto corpus = generate_corpus(records, authority, nc);
  CHECK(corpus.database.size() == records.size());
  auto data = fixtures::shipped_data(corpus.database);
  Resolver resolver(data->context(), ResolverConfig{});
  const auto out = resolver.resolve_corpus(corpus.references);
  std::map<std::string, const BibRecord*> by_code;
  for (const auto& r : records) by_code[r.bibcode.text()] = &r;
  for (std::size_t i = 0; i < out.size(); ++i) {
    INFO(corpus.references[i].raw);
    REQUIRE(out[i].resolved());
    CHECK(*out[i].bibcode == *corpus.gold[i].bibcode);
    const bool monograph = by_code.at(out[i].bibcode->text())->kind == RecordKind::monograph;
    CHECK(stage_name(out[i].stage) == (monograph ? "monograph" : "core"));
  }
}
