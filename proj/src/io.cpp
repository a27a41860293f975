// SPDX-License-Identifier: Apache-2.0

#include "refres/io.hpp"

#include <cstdio>
#include <fstream>
#include "json.hpp"
#include <set>
#include <sstream>

#include "refres/error.hpp"
#include "refres/text.hpp"

namespace refres {

using nlohmann::json;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  return out;
}

// Strips a trailing '\r' and reports whether the line is blank or a comment.
bool skip_line(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

const std::set<std::string>& record_keys() {
  static const std::set<std::string> keys{"bibcode",    "kind",     "author_last_names", "first_author_initial",
                                          "year",       "bibstem",  "volume",            "first_page",
                                          "last_page",  "qualifier", "title",            "institution"};
  return keys;
}

char single_char(const json& v, const std::string& name, std::size_t line, const char* field) {
  if (!v.is_string() || v.get<std::string>().size() != 1) {
    throw InputError(name, line, field, "expected a one-character string");
  }
  return v.get<std::string>()[0];
}

int integer(const json& v, const std::string& name, std::size_t line, const char* field) {
  if (!v.is_number_integer()) throw InputError(name, line, field, "expected an integer");
  const auto x = v.get<long long>();
  if (x < 0 || x > 1000000000) throw InputError(name, line, field, "out of range");
  return static_cast<int>(x);
}

BibRecord parse_record(const std::string& text, const std::string& name, std::size_t line) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(name, line, "json", e.what());
  }
  if (!j.is_object()) throw InputError(name, line, "json", "expected an object");
  for (const auto& item : j.items()) {
    if (!record_keys().count(item.key())) throw InputError(name, line, item.key(), "unknown key");
  }
  for (const char* required : {"bibcode", "kind", "author_last_names", "year"}) {
    if (!j.contains(required)) throw InputError(name, line, required, "missing");
  }

  BibRecord r;
  if (!j["bibcode"].is_string()) throw InputError(name, line, "bibcode", "expected a string");
  try {
    r.bibcode = parse_bibcode(j["bibcode"].get<std::string>());
  } catch (const BibcodeError& e) {
    throw InputError(name, line, "bibcode", e.what());
  }
  if (!j["kind"].is_string()) throw InputError(name, line, "kind", "expected a string");
  auto kind = parse_record_kind(j["kind"].get<std::string>());
  if (!kind) throw InputError(name, line, "kind", "unknown kind '" + j["kind"].get<std::string>() + "'");
  r.kind = *kind;
  const json& names = j["author_last_names"];
  if (!names.is_array()) throw InputError(name, line, "author_last_names", "expected an array");
  for (const json& n : names) {
    if (!n.is_string()) throw InputError(name, line, "author_last_names", "expected strings");
    r.author_last_names.push_back(n.get<std::string>());
  }
  r.year = integer(j["year"], name, line, "year");
  r.first_author_initial = j.contains("first_author_initial")
                               ? single_char(j["first_author_initial"], name, line, "first_author_initial")
                               : (r.author_last_names.empty() ? '.' : initial_of(r.author_last_names.front()));
  if (j.contains("bibstem")) {
    if (!j["bibstem"].is_string()) throw InputError(name, line, "bibstem", "expected a string");
    r.bibstem = j["bibstem"].get<std::string>();
  }
  if (j.contains("volume")) r.volume = integer(j["volume"], name, line, "volume");
  if (j.contains("first_page")) r.first_page = integer(j["first_page"], name, line, "first_page");
  if (j.contains("last_page") && !j["last_page"].is_null()) r.last_page = integer(j["last_page"], name, line, "last_page");
  if (j.contains("qualifier")) r.qualifier = single_char(j["qualifier"], name, line, "qualifier");
  for (const char* field : {"title", "institution"}) {
    if (!j.contains(field)) continue;
    if (!j[field].is_string()) throw InputError(name, line, field, "expected a string");
    (field[0] == 't' ? r.title : r.institution) = j[field].get<std::string>();
  }
  try {
    validate_record(r);
  } catch (const Error& e) {
    throw InputError(name, line, "record", e.what());
  }
  return r;
}

std::string format_score(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

std::unique_ptr<ResolverData> load_resolver_data(const DataPaths& paths) {
  TemplateSet templates = load_templates(paths.templates);
  AuthorityTable authority = load_authority(paths.authority, &templates);
  std::vector<BibRecord> records = load_records(paths.records);
  CorrectionTables corrections = CorrectionTables::load(paths.corrections);
  return std::make_unique<ResolverData>(std::move(templates), std::move(authority), std::move(records),
                                        std::move(corrections));
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    cells.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cells;
}

std::vector<BibRecord> read_records(std::istream& in, const std::string& name) {
  std::vector<BibRecord> out;
  std::set<std::string> seen;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (skip_line(line)) continue;
    BibRecord r = parse_record(line, name, line_no);
    if (!seen.insert(r.bibcode.text()).second) {
      throw InputError(name, line_no, "bibcode", "duplicate bibcode " + r.bibcode.text());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BibRecord> load_records(const std::string& path) {
  auto in = open_in(path);
  return read_records(in, path);
}

std::string record_to_json(const BibRecord& r) {
  json j;
  j["bibcode"] = r.bibcode.text();
  j["kind"] = std::string(to_string(r.kind));
  j["author_last_names"] = r.author_last_names;
  j["first_author_initial"] = std::string(1, r.first_author_initial);
  j["year"] = r.year;
  j["bibstem"] = r.bibstem;
  j["volume"] = r.volume;
  j["first_page"] = r.first_page;
  if (r.last_page) j["last_page"] = *r.last_page;
  j["qualifier"] = std::string(1, r.qualifier);
  j["title"] = r.title;
  j["institution"] = r.institution;
  return j.dump();
}

void write_records(std::ostream& out, const std::vector<BibRecord>& records) {
  for (const BibRecord& r : records) out << record_to_json(r) << '\n';
}

void write_records(const std::string& path, const std::vector<BibRecord>& records) {
  auto out = open_out(path);
  write_records(out, records);
}

TemplateSet read_templates(std::istream& in, const std::string& name) {
  TemplateSet set;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (skip_line(line)) continue;
    const auto cells = split_tabs(line);
    if (cells.size() < 2 || cells.size() > 3) throw InputError(name, line_no, "line", "expected 2 or 3 columns");
    SlotTemplate t;
    t.name = trim(cells[0]);
    if (t.name.empty()) throw InputError(name, line_no, "template", "empty name");
    for (const std::string& s : [&] {
           std::vector<std::string> parts;
           std::stringstream ss(cells[1]);
           for (std::string p; std::getline(ss, p, ',');) parts.push_back(trim(p));
           return parts;
         }()) {
      auto slot = parse_slot(s);
      if (!slot) throw InputError(name, line_no, "slots", "unknown slot '" + s + "'");
      t.slots.push_back(*slot);
    }
    if (cells.size() == 3 && !trim(cells[2]).empty()) {
      auto hint = parse_kind_hint(trim(cells[2]));
      if (!hint) throw InputError(name, line_no, "kind_hint", "unknown kind hint '" + cells[2] + "'");
      t.kind_hint = *hint;
    }
    try {
      set.add(std::move(t));
    } catch (const Error& e) {
      throw InputError(name, line_no, "template", e.what());
    }
  }
  return set;
}

TemplateSet load_templates(const std::string& path) {
  auto in = open_in(path);
  return read_templates(in, path);
}

std::vector<AuthorityEntry> read_authority(std::istream& in, const std::string& name, const TemplateSet* templates) {
  std::vector<AuthorityEntry> out;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (skip_line(line)) continue;
    const auto cells = split_tabs(line);
    if (cells.size() != 3) throw InputError(name, line_no, "line", "expected 3 columns");
    AuthorityEntry e;
    e.display = trim(cells[0]);
    e.variant = fold_source(e.display);
    e.bibstem = trim(cells[1]);
    e.template_name = trim(cells[2]);
    if (e.variant.empty()) throw InputError(name, line_no, "variant", "no letters");
    if (!valid_bibstem(e.bibstem)) throw InputError(name, line_no, "bibstem", "invalid bibstem '" + e.bibstem + "'");
    if (e.template_name.empty()) e.template_name = "default";
    if (templates && !templates->find(e.template_name)) {
      throw InputError(name, line_no, "template", "unknown template '" + e.template_name + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

AuthorityTable load_authority(const std::string& path, const TemplateSet* templates) {
  auto in = open_in(path);
  return AuthorityTable(read_authority(in, path, templates));
}

std::vector<NoisyReference> read_references(std::istream& in, const std::string& name) {
  std::vector<NoisyReference> out;
  std::set<std::string> ids;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw InputError(name, line_no, "line", "expected id<TAB>raw");
    NoisyReference r;
    r.id = line.substr(0, tab);
    if (r.id.empty()) throw InputError(name, line_no, "id", "empty id");
    if (!ids.insert(r.id).second) throw InputError(name, line_no, "id", "duplicate id '" + r.id + "'");
    r.raw = line.substr(tab + 1);
    r.normalized = normalize(r.raw);
    r.position = out.size();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<NoisyReference> load_references(const std::string& path) {
  auto in = open_in(path);
  return read_references(in, path);
}

void write_references(const std::string& path, const std::vector<NoisyReference>& refs) {
  auto out = open_out(path);
  for (const NoisyReference& r : refs) out << r.id << '\t' << r.raw << '\n';
}

void write_results(std::ostream& out, const std::vector<ResolutionOutcome>& outcomes) {
  for (const ResolutionOutcome& o : outcomes) {
    out << o.id << '\t' << (o.resolved() ? "resolved" : "unresolved") << '\t';
    if (o.bibcode) out << o.bibcode->text();
    out << '\t' << o.stage << '\t';
    if (o.source_score) out << format_score(*o.source_score);
    out << '\t';
    if (o.author_score) out << format_score(*o.author_score);
    out << '\t';
    if (o.reason) out << to_string(*o.reason);
    out << '\n';
  }
}

void write_results(const std::string& path, const std::vector<ResolutionOutcome>& outcomes) {
  auto out = open_out(path);
  write_results(out, outcomes);
}

std::vector<ResolutionOutcome> read_results(std::istream& in, const std::string& name) {
  std::vector<ResolutionOutcome> out;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c = split_tabs(line);
    if (c.size() != 7) throw InputError(name, line_no, "line", "expected 7 columns");
    ResolutionOutcome o;
    o.id = c[0];
    if (c[1] == "resolved") {
      o.status = ResolutionStatus::resolved;
    } else if (c[1] != "unresolved") {
      throw InputError(name, line_no, "status", "expected resolved or unresolved");
    }
    try {
      if (!c[2].empty()) o.bibcode = parse_bibcode(c[2]);
    } catch (const BibcodeError& e) {
      throw InputError(name, line_no, "bibcode", e.what());
    }
    o.stage = c[3];
    try {
      if (!c[4].empty()) o.source_score = std::stod(c[4]);
      if (!c[5].empty()) o.author_score = std::stod(c[5]);
    } catch (const std::exception&) {
      throw InputError(name, line_no, "score", "not a number");
    }
    if (!c[6].empty()) {
      o.reason = parse_unresolved_reason(c[6]);
      if (!o.reason) throw InputError(name, line_no, "reason", "unknown reason '" + c[6] + "'");
    }
    if (o.resolved() != o.bibcode.has_value() || o.resolved() == o.reason.has_value()) {
      throw InputError(name, line_no, "status", "exactly one of bibcode and reason must be present");
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<ResolutionOutcome> load_results(const std::string& path) {
  auto in = open_in(path);
  return read_results(in, path);
}

}  // namespace refres
