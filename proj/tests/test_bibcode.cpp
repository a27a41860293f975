// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "refres/bibcode.hpp"
#include "refres/record_index.hpp"

using namespace refres;

namespace {

// Layout written out with printf padding, then blanks turned into dots.
std::string format_oracle(int year, const std::string& stem, int volume, char q, int page, char initial) {
  char buf[64];
  std::string v = volume ? std::to_string(volume) : "";
  std::string p = page ? std::to_string(page) : "";
  std::snprintf(buf, sizeof buf, "%04d%-5s%4s%c%4s%c", year, stem.c_str(), v.c_str(), q, p.c_str(), initial);
  std::string s = buf;
  for (char& c : s) {
    if (c == ' ') c = '.';
  }
  return s;
}

}  // namespace

TEST_CASE("build_bibcode pads fields into 19 characters") {
  CHECK(build_bibcode(1950, "ApJ", 112, '.', 1, 'H').text() == "1950ApJ...112....1H");
  CHECK(build_bibcode(1956, "AJ", 61, '.', 45, 'S').text() == "1956AJ.....61...45S");
  CHECK(build_bibcode(1970, "ApJ", 160, 'L', 12, 'S').text() == "1970ApJ...160L..12S");
  CHECK(build_bibcode(1970, "PhDT", 0, '.', 5, 'S').text() == "1970PhDT.........5S");
  CHECK(build_bibcode(1950, "ApJ", 112, '.', 1, 'H').text() == format_oracle(1950, "ApJ", 112, '.', 1, 'H'));
  CHECK(build_bibcode(1956, "AJ", 61, '.', 45, 'S').text() == format_oracle(1956, "AJ", 61, '.', 45, 'S'));
}

TEST_CASE("build_bibcode rejects out-of-range parts") {
  CHECK_THROWS_AS(build_bibcode(1950, "ApJ", 10000, '.', 1, 'H'), BibcodeError);
  CHECK_THROWS_AS(build_bibcode(1950, "ApJ", 1, '.', 10000, 'H'), BibcodeError);
  CHECK_THROWS_AS(build_bibcode(1950, "ApJSSS", 1, '.', 1, 'H'), BibcodeError);
  CHECK_THROWS_AS(build_bibcode(1950, "", 1, '.', 1, 'H'), BibcodeError);
  CHECK_THROWS_AS(build_bibcode(1950, "ApJ", -1, '.', 1, 'H'), BibcodeError);
  CHECK_THROWS_AS(parse_bibcode("1950ApJ...112....1"), BibcodeError);
  CHECK_THROWS_AS(parse_bibcode("19x0ApJ...112....1H"), BibcodeError);
}

TEST_CASE("bibcode round trip on 10,000 random valid tuples") {
  std::mt19937_64 rng(1234);
  const std::string stem_chars = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz&";
  for (int n = 0; n < 10000; ++n) {
    const int year = 1000 + static_cast<int>(rng() % 9000);
    std::string stem(1 + rng() % 5, 'A');
    for (char& c : stem) c = stem_chars[rng() % stem_chars.size()];
    const int volume = static_cast<int>(rng() % 10000);
    const int page = static_cast<int>(rng() % 10000);
    const char q = "..LABCDE"[rng() % 8];
    const char initial = static_cast<char>('A' + rng() % 26);
    const Bibcode b = build_bibcode(year, stem, volume, q, page, initial);
    const std::string text = b.text();
    REQUIRE(text.size() == 19);
    REQUIRE(text == format_oracle(year, stem, volume, q, page, initial));
    const Bibcode back = parse_bibcode(text);
    REQUIRE(back == b);
    REQUIRE(back.year == year);
    REQUIRE(back.bibstem == stem);
    REQUIRE(back.volume == volume);
    REQUIRE(back.page == page);
    REQUIRE(back.qualifier == q);
    REQUIRE(back.author_initial == initial);
  }
}

TEST_CASE("record index lookups") {
  using fixtures::serial;
  std::vector<BibRecord> records{
      serial(1950, "ApJ", 112, 1, {"van de Hulst"}),
      serial(1950, "ApJ", 112, 20, {"Hiltner"}, 31),
      serial(1950, "ApJ", 112, 20, {"Kuiper"}),
      serial(1960, "AJ", 65, 5, {"Smith"}),
      serial(1961, "AJ", 65, 90, {"Jones"}),
  };
  RecordIndex index(records);
  CHECK(index.size() == 5);
  for (const BibRecord& r : records) {
    const BibRecord* found = index.lookup(r.bibcode.text());
    REQUIRE(found);
    CHECK(*found == r);
    auto wild = index.lookup_first_author_wildcard(r.bibcode.text());
    CHECK(std::find(wild.begin(), wild.end(), found) != wild.end());
  }
  CHECK(index.lookup("1950ApJ...112....2H") == nullptr);
  CHECK(index.lookup_first_author_wildcard("1950ApJ...112...20X").size() == 2);

  CHECK(index.year_for_volume("ApJ", 112) == YearRange{1950, 1950});
  CHECK(index.year_for_volume("AJ", 65) == YearRange{1960, 1961});
  CHECK_FALSE(index.year_for_volume("MNRAS", 1));
  CHECK(index.volumes_for_year("ApJ", 1950) == std::set<int>{112});
  CHECK(index.volumes_for_year("ApJ", 1990).empty());
  CHECK(index.volume_records("ApJ", 112).size() == 3);
  CHECK(index.by_initial_year('H', 1950).size() == 2);
  CHECK(index.by_initial_year('K', 1950).size() == 1);

  auto dup = records;
  dup.push_back(records.front());
  CHECK_THROWS_AS(RecordIndex{dup}, Error);
}
