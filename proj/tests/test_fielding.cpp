// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <set>

#include "doctest.h"
#include "refres/fielding.hpp"
#include "refres/text.hpp"

using namespace refres;

TEST_CASE("extract_year splits author segment, year and rest") {
  auto y = extract_year("Huist, H. C. van de. 1950, Astrophys. J. 112,1.");
  REQUIRE(y);
  CHECK(y->author_segment == "Huist, H. C. van de.");
  CHECK(y->year == 1950);
  CHECK_FALSE(y->year_suffix);
  CHECK(y->rest == ", Astrophys. J. 112,1.");

  auto b = extract_year("Bidelman, W. P. 1951, Ap. J. \"3, 304; ...");
  REQUIRE(b);
  CHECK(b->year == 1951);

  CHECK_FALSE(extract_year("Eggen, 0. J. 195oa, Ap.J. III, 414"));

  auto suffixed = extract_year("Eggen, O. J. 1950a, Ap. J. 111, 414");
  REQUIRE(suffixed);
  CHECK(suffixed->year == 1950);
  CHECK(suffixed->year_suffix == 'a');
  CHECK(suffixed->rest == ", Ap. J. 111, 414");
}

TEST_CASE("extract_year never matches inside a longer digit run") {
  CHECK_FALSE(extract_year("Smith 11950, ApJ 1"));
  CHECK_FALSE(extract_year("Smith 19501 ApJ"));
  CHECK_FALSE(extract_year("Smith 1450"));
  auto later = extract_year("Vol 11950 then 1960");
  REQUIRE(later);
  CHECK(later->year == 1960);
  std::mt19937_64 rng(8);
  for (int n = 0; n < 2000; ++n) {
    std::string s(rng() % 12, '0');
    for (char& c : s) c = static_cast<char>('0' + rng() % 10);
    s = "x " + s + " y";
    auto found = extract_year(s);
    if (!found) continue;
    CHECK(!is_digit(s[found->year_begin - 1]));
    CHECK((found->year_end == s.size() || !is_digit(s[found->year_end])));
  }
}

TEST_CASE("extract_head_and_fillers") {
  auto a = extract_head_and_fillers(", Astrophys. J. 112,1.");
  CHECK(a.head == "Astrophys J");
  CHECK(a.fillers == std::vector<Filler>{112, 1});
  auto b = extract_head_and_fillers(", Astron. J. 61, 45.");
  CHECK(b.head == "Astron J");
  CHECK(b.fillers == std::vector<Filler>{61, 45});
  auto c = extract_head_and_fillers(", ApJ");
  CHECK(c.head == "ApJ");
  CHECK(c.fillers.empty());
}

TEST_CASE("head letters and filler digits partition the rest") {
  std::mt19937_64 rng(21);
  const std::string alphabet = "aZ09., ;:-()x7";
  for (int n = 0; n < 3000; ++n) {
    std::string rest(rng() % 30, ' ');
    for (char& c : rest) c = alphabet[rng() % alphabet.size()];
    const auto hf = extract_head_and_fillers(rest);
    std::string letters_in, letters_out, digits_in, digits_out;
    for (char c : rest) {
      if (is_alpha(c)) letters_in += c;
      if (is_digit(c)) digits_in += c;
    }
    for (char c : hf.head) {
      if (is_alpha(c)) letters_out += c;
    }
    CHECK(letters_in == letters_out);
    // Each maximal digit run becomes one filler; compare run counts and the
    // digits of runs without leading zeros.
    std::size_t runs = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (is_digit(rest[i]) && (i == 0 || !is_digit(rest[i - 1]))) ++runs;
    }
    CHECK(hf.fillers.size() == runs);
  }
}

TEST_CASE("fill_slots") {
  TemplateSet set;
  const SlotTemplate& vp = set.default_template();
  auto one = fill_slots(vp, std::vector<Filler>{112, 1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].get(Slot::volume) == 112);
  CHECK(one[0].get(Slot::page) == 1);

  auto three = fill_slots(vp, std::vector<Filler>{112, 1, 7});
  REQUIRE(three.size() == 3);
  std::set<std::pair<Filler, Filler>> got;
  for (const auto& a : three) got.insert({*a.get(Slot::volume), *a.get(Slot::page)});
  CHECK(got == std::set<std::pair<Filler, Filler>>{{112, 1}, {112, 7}, {1, 7}});

  SlotTemplate number{"preprint", {Slot::number}, KindHint::preprint};
  CHECK(fill_slots(number, std::vector<Filler>{}).empty());
  auto n = fill_slots(number, std::vector<Filler>{199});
  REQUIRE(n.size() == 1);
  CHECK(n[0].get(Slot::number) == 199);

  auto missing = fill_slots(vp, std::vector<Filler>{141});
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].volume_from_year);
  CHECK(missing[0].get(Slot::page) == 141);
  CHECK(fill_slots(vp, std::vector<Filler>{1, 2, 3, 4}).empty());
}

TEST_CASE("template set validation") {
  TemplateSet set;
  CHECK_THROWS_AS(set.add({"p", {Slot::volume, Slot::page}, KindHint::preprint}), std::exception);
  CHECK_THROWS_AS(set.add({"e", {}, KindHint::serial}), std::exception);
  CHECK(&set.get_or_default("nothing") == &set.default_template());
}
