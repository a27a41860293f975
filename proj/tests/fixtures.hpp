// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "refres/authority.hpp"
#include "refres/bibcode.hpp"
#include "refres/corpus.hpp"
#include "refres/heuristics.hpp"
#include "refres/io.hpp"
#include "refres/resolver.hpp"

namespace fixtures {

inline std::string data_file(const std::string& name) { return std::string(REFRES_DATA_DIR) + "/" + name; }

inline refres::BibRecord serial(int year, const std::string& bibstem, int volume, int page,
                                std::vector<std::string> authors, std::optional<int> last_page = std::nullopt,
                                char qualifier = '.') {
  refres::BibRecord r;
  r.kind = refres::RecordKind::serial;
  r.author_last_names = std::move(authors);
  r.first_author_initial = refres::initial_of(r.author_last_names.front());
  r.year = year;
  r.bibstem = bibstem;
  r.volume = volume;
  r.first_page = page;
  r.last_page = last_page;
  r.qualifier = qualifier;
  r.bibcode = refres::build_bibcode(year, bibstem, volume, qualifier, page, r.first_author_initial);
  return r;
}

inline refres::BibRecord thesis(int year, const std::string& author, const std::string& institution, int n = 1) {
  refres::BibRecord r;
  r.kind = refres::RecordKind::thesis;
  r.author_last_names = {author};
  r.first_author_initial = refres::initial_of(author);
  r.year = year;
  r.first_page = n;
  r.institution = institution;
  r.bibcode = refres::build_bibcode(year, "PhDT", 0, '.', n, r.first_author_initial);
  return r;
}

inline refres::BibRecord monograph(int year, std::vector<std::string> authors, const std::string& title,
                                   refres::RecordKind kind = refres::RecordKind::monograph, int n = 1) {
  refres::BibRecord r;
  r.kind = kind;
  r.author_last_names = std::move(authors);
  r.first_author_initial = refres::initial_of(r.author_last_names.front());
  r.year = year;
  r.first_page = n;
  r.title = title;
  r.bibcode = refres::build_bibcode(year, "book", 0, '.', n, r.first_author_initial);
  return r;
}

inline refres::AuthorityTable shipped_authority() {
  const auto templates = refres::load_templates(data_file("templates.tsv"));
  return refres::load_authority(data_file("authority.tsv"), &templates);
}

/// The shipped tables over an in-memory record list.
inline std::unique_ptr<refres::ResolverData> shipped_data(std::vector<refres::BibRecord> records) {
  auto templates = refres::load_templates(data_file("templates.tsv"));
  auto authority = refres::load_authority(data_file("authority.tsv"), &templates);
  return std::make_unique<refres::ResolverData>(std::move(templates), std::move(authority), std::move(records),
                                                refres::CorrectionTables::load(data_file("corrections.tsv")));
}

}  // namespace fixtures
