// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "refres/authority.hpp"
#include "refres/corpus.hpp"
#include "refres/fielding.hpp"
#include "refres/resolver.hpp"

namespace refres {

/// JSON Lines, one object per record. Keys: bibcode, kind,
/// author_last_names, first_author_initial, year, bibstem, volume,
/// first_page, last_page (optional), qualifier, title, institution.
/// Throws InputError naming file, line and field; a repeated bibcode is an
/// error too.
std::vector<BibRecord> read_records(std::istream& in, const std::string& name);
std::vector<BibRecord> load_records(const std::string& path);
void write_records(std::ostream& out, const std::vector<BibRecord>& records);
void write_records(const std::string& path, const std::vector<BibRecord>& records);
std::string record_to_json(const BibRecord& record);

/// `template<TAB>slot1,slot2<TAB>kind_hint`, added on top of the built-in
/// default template.
TemplateSet read_templates(std::istream& in, const std::string& name);
TemplateSet load_templates(const std::string& path);

/// `variant<TAB>bibstem<TAB>template`. Variants are folded on load. When
/// `templates` is given, unknown template names are rejected.
std::vector<AuthorityEntry> read_authority(std::istream& in, const std::string& name,
                                           const TemplateSet* templates = nullptr);
AuthorityTable load_authority(const std::string& path, const TemplateSet* templates = nullptr);

/// `id<TAB>raw`, in list order. Positions are assigned from line order and
/// `normalized` is filled. Duplicate ids are an error.
std::vector<NoisyReference> read_references(std::istream& in, const std::string& name);
std::vector<NoisyReference> load_references(const std::string& path);
void write_references(const std::string& path, const std::vector<NoisyReference>& refs);

/// `id<TAB>status<TAB>bibcode<TAB>stage<TAB>source_score<TAB>author_score<TAB>reason`,
/// no header, empty cells where a value does not apply, scores to 4 places.
void write_results(std::ostream& out, const std::vector<ResolutionOutcome>& outcomes);
void write_results(const std::string& path, const std::vector<ResolutionOutcome>& outcomes);
std::vector<ResolutionOutcome> read_results(std::istream& in, const std::string& name);
std::vector<ResolutionOutcome> load_results(const std::string& path);

struct DataPaths {
  std::string records;
  std::string authority;
  std::string templates;
  std::string corrections;
};

/// Loads templates first so authority rows can be checked against them.
std::unique_ptr<ResolverData> load_resolver_data(const DataPaths& paths);

/// Splits on '\t' keeping empty cells.
std::vector<std::string> split_tabs(const std::string& line);

}  // namespace refres
