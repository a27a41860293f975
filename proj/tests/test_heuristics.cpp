// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "refres/fielding.hpp"
#include "refres/heuristics.hpp"

using namespace refres;

namespace {

struct Shipped {
  AuthorityTable authority;
  Heuristics heuristics;

  Shipped()
      : authority(with_extra(fixtures::shipped_authority())),
        heuristics(CorrectionTables::load(fixtures::data_file("corrections.tsv")), authority) {}

  static AuthorityTable with_extra(AuthorityTable base) {
    auto entries = base.entries();
    const std::string uasg =
        "Proceedings of the First International Symposium on the Use of Artificial Satellites for Geodesy";
    entries.push_back({fold_source(uasg), uasg, "UASG", "proceedings"});
    return AuthorityTable(std::move(entries));
  }
};

const Shipped& shipped() {
  static const Shipped s;
  return s;
}

const char* const kFixtureStrings[] = {
    "Bidelman, W. P. 1951, Ap. J. \"3, 304; Contr. McDonald Obs., No. 199.",
    "Eggen, 0. J. 195oa, Ap.J. III, 414; Contr. Lick Obs., Series II, No. 27.",
    "Huist, H. C. van de. 1950, Astrophys. J. 112,1.",
    "8tromgren, B. 1956, Astron. J. 61, 45.",
    "Morando, B. 1963, \"Recherches sur les orbites de resonance, \"in Proceedings of the First International "
    "Symposium on the Use of Artilicial Satellites for Geodesy, Washington, D. C. (North- Holland Publishing "
    "Company, Amsterdam, 1963), p. 42.",
    "Smith, J. 1960, A1 65, 1",
    "X, Y. 1950, Ap. J. (English Translation) 112, 1",
    "A, B. 1990, X 1, 2. C, D. 1991, Y 3, 4.",
    "Kraft, R. P. 1958, Ap. 1. 1 28, 1 6l.",
    "Jones, Q. 1960, Vol. 12, No. 3, p. 4",
    "",
};

}  // namespace

TEST_CASE("stage ids") {
  CHECK(to_string(StageId::S2) == "S2-numerals");
  CHECK(parse_stage_id("S2") == StageId::S2);
  CHECK(parse_stage_id("S5-aux") == StageId::S5);
  CHECK_FALSE(parse_stage_id("S6"));
  CHECK(stage_number(StageId::S4) == 4);
}

TEST_CASE("S1 fixes abbreviations after the year") {
  const auto& h = shipped().heuristics;
  CHECK(h.s1_fix_abbreviations("Eggen, O. J. 1950, Ap. 1. 112, 1") == "Eggen, O. J. 1950, Ap. J. 112, 1");
  CHECK(h.s1_fix_abbreviations("Smith, J. 1960, Astr0n. J. 65, 1") == "Smith, J. 1960, Astron. J. 65, 1");
  CHECK(h.s1_fix_abbreviations("Smith, J. 1960, A + A 65, 1") == "Smith, J. 1960, A&A 65, 1");
  CHECK(h.s1_fix_abbreviations("Smith, J. 1960, Nature 65, 1") == "Smith, J. 1960, Nature 65, 1");
  CHECK(h.s1_fix_abbreviations("Ap. 1. without a year") == "Ap. 1. without a year");
}

TEST_CASE("S2 repairs numerals") {
  const auto& h = shipped().heuristics;
  CHECK(h.s2_fix_numerals("195oa, Ap.J. III, 414") == "1950a, Ap.J. III, 414");
  CHECK(h.s2_fix_numerals("112,1 41") == "112,141");
  CHECK(h.s2_fix_numerals("8tromgren, B. 1956") == "8tromgren, B. 1956");
  CHECK(h.s2_fix_numerals("Eggen, 0. J. 195oa, Ap.J. 111, 414") == "Eggen, 0. J. 1950a, Ap.J. 111, 414");
  CHECK(h.s2_fix_numerals("Smith, J. 1960, ApJ l32, 4O1") == "Smith, J. 1960, ApJ 132, 401");
  CHECK(h.s2_fix_numerals("Smith, J. 1960, ApJ 1 32, 41") == "Smith, J. 1960, ApJ 132, 41");
  // Letters of the source stay letters.
  CHECK(h.s2_fix_numerals("Smith, J. 1960, ApJS 132, 4") == "Smith, J. 1960, ApJS 132, 4");
}

TEST_CASE("S3 transforms the source") {
  const auto& h = shipped().heuristics;
  CHECK(h.s3_transform_source("X, Y. 1950, Ap. J. (English Translation) 112, 1") == "X, Y. 1950, Ap. J. 112, 1");
  CHECK(h.s3_transform_source("Smith, J. 1960, A1 65, 1") == "Smith, J. 1960, AJ 65, 1");
  CHECK(h.s3_transform_source("Smith, J. 1960, AI 65, 1") == "Smith, J. 1960, AJ 65, 1");
  CHECK(h.s3_transform_source("Smith, J. 1960, 4J 65, 1") == "Smith, J. 1960, AJ 65, 1");
  CHECK(h.s3_transform_source("Jones, Q. 1960, ApJ, Vol. 12, p. 4") == "Jones, Q. 1960, ApJ, 12, 4");
  CHECK(h.s3_transform_source("Jones, Q. 1960, in IAU Symp. 12, 4") == "Jones, Q. 1960, IAU Symp. 12, 4");
}

TEST_CASE("S4 dissects the source along commas and colons") {
  const auto& h = shipped().heuristics;
  CHECK(h.s4_dissect_source(", in Proceedings of the First International Symposium on the Use of Artificial "
                            "Satellites for Geodesy, Washington, D. C.")
            .find("Proceedings of the First") != std::string::npos);
  CHECK(h.s4_dissect_source("Contr. McDonald Obs., No. 199") == "Contr McDonald Obs");
  CHECK(h.s4_dissect_source(" Astrophys. J. 112") == " Astrophys. J. 112");
  CHECK(h.s4_rewrite("Doe, J. 1970, Weird Title: Astrophys. J., 112, 1") == "Doe, J. 1970, Astrophys J 112, 1");
}

TEST_CASE("S5 removes titles and splits double references") {
  const auto& h = shipped().heuristics;
  const std::string morando = kFixtureStrings[4];
  const std::string cleaned = h.s5_remove_title(morando);
  CHECK(cleaned.find("Recherches") == std::string::npos);
  CHECK(cleaned.find("Proceedings of the First") != std::string::npos);

  CHECK(h.s5_split(kFixtureStrings[0]).size() == 1);
  const auto two = h.s5_split("A, B. 1990, X 1, 2. C, D. 1991, Y 3, 4.");
  REQUIRE(two.size() == 2);
  CHECK(two[0] == "A, B. 1990, X 1, 2.");
  CHECK(two[1] == "C, D. 1991, Y 3, 4.");
}

TEST_CASE("every stage rewrite is idempotent") {
  const auto& h = shipped().heuristics;
  std::vector<std::string> inputs(std::begin(kFixtureStrings), std::end(kFixtureStrings));
  std::mt19937_64 rng(404);
  const std::string alphabet = "ApJ.Ol1I5S8B 0123456789,;:()\"-AaZGs rnh";
  for (int n = 0; n < 1500; ++n) {
    std::string s(rng() % 40, ' ');
    for (char& c : s) c = alphabet[rng() % alphabet.size()];
    if (n % 2) s = "Smith, J. 19" + std::to_string(10 + rng() % 90) + ", " + s;
    inputs.push_back(normalize(s));
  }
  for (const auto& s : inputs) {
    for (auto id : {StageId::S1, StageId::S2, StageId::S3, StageId::S4, StageId::S5}) {
      const std::string once = h.rewrite(id, s);
      INFO("stage " << to_string(id) << " on '" << s << "' -> '" << once << "'");
      CHECK(h.rewrite(id, once) == once);
    }
  }
}

TEST_CASE("stages never move an extractable year") {
  const auto& h = shipped().heuristics;
  std::mt19937_64 rng(405);
  const std::string alphabet = "ApJ.Ol1I5S8B 0123456789,;:()\"-";
  for (int n = 0; n < 1500; ++n) {
    std::string s(rng() % 30, ' ');
    for (char& c : s) c = alphabet[rng() % alphabet.size()];
    s = normalize("Smith, J. 19" + std::to_string(10 + rng() % 90) + ", " + s);
    const auto before = extract_year(s);
    REQUIRE(before);
    for (auto id : {StageId::S1, StageId::S2, StageId::S3, StageId::S4, StageId::S5}) {
      const auto after = extract_year(h.rewrite(id, s));
      INFO("stage " << to_string(id) << " on '" << s << "'");
      REQUIRE(after);
      CHECK(after->year == before->year);
      CHECK(after->author_segment == before->author_segment);
    }
  }
}

TEST_CASE("correction table parsing") {
  std::istringstream bad_context("A1\tAJ\tsomewhere\n");
  CHECK_THROWS_WITH_AS(CorrectionTables::parse(bad_context, "c.tsv"), doctest::Contains("c.tsv:1: context"),
                       InputError);
  std::istringstream bad_regex("(\tx\tabbrev\n");
  CHECK_THROWS_AS(CorrectionTables::parse(bad_regex, "c.tsv"), InputError);
  std::istringstream bad_class("OO\t0\thead-start\n");
  CHECK_THROWS_AS(CorrectionTables::parse(bad_class, "c.tsv"), InputError);
  std::istringstream ok("# comment\nO\t0\thead-start\nA1\tAJ\tshort-head\n");
  const auto tables = CorrectionTables::parse(ok, "c.tsv");
  CHECK(tables.head_start().at('O') == '0');
  CHECK(tables.short_heads().size() == 1);
}
