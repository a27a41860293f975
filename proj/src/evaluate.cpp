// SPDX-License-Identifier: Apache-2.0

#include "refres/evaluate.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <unordered_map>

#include "refres/error.hpp"
#include "refres/io.hpp"
#include "refres/keyvalue.hpp"

namespace refres {

void write_gold(std::ostream& out, const std::vector<GoldEntry>& gold) {
  for (const GoldEntry& g : gold) {
    out << g.id << '\t' << (g.bibcode ? g.bibcode->text() : "-") << '\t';
    for (std::size_t i = 0; i < g.labels.size(); ++i) out << (i ? "," : "") << g.labels[i];
    out << '\n';
  }
}

void write_gold(const std::string& path, const std::vector<GoldEntry>& gold) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_gold(out, gold);
}

std::vector<GoldEntry> read_gold(std::istream& in, const std::string& name) {
  std::vector<GoldEntry> out;
  std::set<std::string> ids;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c = split_tabs(line);
    if (c.size() < 2 || c.size() > 3) throw InputError(name, line_no, "line", "expected 2 or 3 columns");
    GoldEntry g;
    g.id = c[0];
    if (!ids.insert(g.id).second) throw InputError(name, line_no, "id", "duplicate id '" + g.id + "'");
    if (c[1] != "-") {
      try {
        g.bibcode = parse_bibcode(c[1]);
      } catch (const BibcodeError& e) {
        throw InputError(name, line_no, "bibcode", e.what());
      }
    }
    if (c.size() == 3) g.labels = split_list(c[2]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GoldEntry> load_gold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_gold(in, path);
}

EvaluationReport evaluate(const std::vector<ResolutionOutcome>& results, const std::vector<GoldEntry>& gold) {
  std::unordered_map<std::string, const GoldEntry*> by_id;
  for (const GoldEntry& g : gold) by_id.emplace(g.id, &g);

  std::vector<std::string> missing_from_gold;
  std::set<std::string> seen;
  for (const ResolutionOutcome& r : results) {
    if (!by_id.count(r.id)) missing_from_gold.push_back(r.id);
    seen.insert(r.id);
  }
  std::vector<std::string> missing_from_results;
  for (const GoldEntry& g : gold) {
    if (!seen.count(g.id)) missing_from_results.push_back(g.id);
  }
  if (!missing_from_gold.empty() || !missing_from_results.empty()) {
    std::string msg = "results and gold disagree on ids";
    auto list = [&msg](const char* what, const std::vector<std::string>& ids) {
      if (ids.empty()) return;
      msg += std::string("; ") + what + ":";
      for (std::size_t i = 0; i < ids.size() && i < 20; ++i) msg += " " + ids[i];
      if (ids.size() > 20) msg += " ... (" + std::to_string(ids.size()) + " total)";
    };
    list("not in gold", missing_from_gold);
    list("not in results", missing_from_results);
    throw Error(msg);
  }

  EvaluationReport rep;
  rep.references = results.size();
  for (const ResolutionOutcome& r : results) {
    const GoldEntry& g = *by_id.at(r.id);
    const bool right = r.resolved() && g.bibcode && r.bibcode && *r.bibcode == *g.bibcode;
    if (g.bibcode) {
      ++rep.gold_in_database;
      if (!r.resolved()) ++rep.missed;
      for (const std::string& l : g.labels) {
        auto& lr = rep.label_recall[l];
        ++lr.total;
        if (right) ++lr.correct;
      }
    } else {
      ++rep.gold_missing;
      if (r.resolved()) ++rep.false_links;
    }
    if (r.resolved()) {
      ++rep.resolved;
      ++(right ? rep.correct : rep.incorrect);
      ++rep.stages[stage_name(r.stage)];
      ++rep.rules[r.stage];
    } else if (r.reason) {
      ++rep.unresolved_reasons[std::string(to_string(*r.reason))];
    }
  }
  if (rep.resolved) rep.precision = static_cast<double>(rep.correct) / static_cast<double>(rep.resolved);
  if (rep.gold_in_database) rep.recall = static_cast<double>(rep.correct) / static_cast<double>(rep.gold_in_database);
  if (rep.gold_missing) {
    rep.false_link_rate = static_cast<double>(rep.false_links) / static_cast<double>(rep.gold_missing);
  }
  return rep;
}

namespace {

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

void write_report(std::ostream& out, const EvaluationReport& r) {
  out << "references\t" << r.references << '\n'
      << "resolved\t" << r.resolved << '\n'
      << "correct\t" << r.correct << '\n'
      << "incorrect\t" << r.incorrect << '\n'
      << "gold_in_database\t" << r.gold_in_database << '\n'
      << "gold_missing\t" << r.gold_missing << '\n'
      << "missed\t" << r.missed << '\n'
      << "false_links\t" << r.false_links << '\n'
      << "precision\t" << fixed4(r.precision) << '\n'
      << "recall\t" << fixed4(r.recall) << '\n'
      << "false_link_rate\t" << fixed4(r.false_link_rate) << '\n';
  if (r.seconds) out << "seconds\t" << fixed4(*r.seconds) << '\n';
  if (auto t = r.throughput()) out << "refs_per_second\t" << fixed4(*t) << '\n';
  for (const auto& [stage, n] : r.stages) out << "stage." << stage << '\t' << n << '\n';
  for (const auto& [rule, n] : r.rules) out << "rule." << rule << '\t' << n << '\n';
  for (const auto& [reason, n] : r.unresolved_reasons) out << "reason." << reason << '\t' << n << '\n';
  for (const auto& [label, lr] : r.label_recall) {
    out << "label." << label << ".total\t" << lr.total << '\n';
    out << "label." << label << ".recall\t"
        << fixed4(lr.total ? static_cast<double>(lr.correct) / static_cast<double>(lr.total) : 1.0) << '\n';
  }
}

void write_report(const std::string& path, const EvaluationReport& report) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_report(out, report);
}

}  // namespace refres
