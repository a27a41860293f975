// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "refres/error.hpp"

namespace refres {

/// The 19-character identifier: year(4) bibstem(5) volume(4) qualifier(1)
/// page(4) initial(1). Bibstem is left-aligned, volume and page are
/// right-aligned, all padded with '.'. A zero volume or page prints as "....".
struct Bibcode {
  static constexpr std::size_t kLength = 19;

  int year = 0;
  std::string bibstem;
  int volume = 0;
  char qualifier = '.';
  int page = 0;
  char author_initial = '.';

  std::string text() const;
  /// First 18 characters, i.e. everything except the author initial.
  std::string prefix() const { return text().substr(0, kLength - 1); }

  friend bool operator==(const Bibcode&, const Bibcode&) = default;
};

class BibcodeError : public Error {
 public:
  using Error::Error;
};

/// Validates the parts and assembles them. Throws BibcodeError when a part is
/// out of range (volume or page above 9999, bibstem longer than 5, ...).
Bibcode build_bibcode(long year, std::string_view bibstem, long volume, char qualifier, long page,
                      char author_initial);

/// Inverse of Bibcode::text(). Throws BibcodeError on malformed text.
Bibcode parse_bibcode(std::string_view text);

bool valid_bibstem(std::string_view bibstem);

}  // namespace refres
