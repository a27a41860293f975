// SPDX-License-Identifier: Apache-2.0

#include "refres/resolver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "refres/error.hpp"
#include "refres/keyvalue.hpp"
#include "refres/text.hpp"

namespace refres {

void ResolverConfig::apply(const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "n_best") {
      const long long n = parse_integer(value, key);
      if (n < 1) throw Error("n_best: must be at least 1");
      n_best = static_cast<std::size_t>(n);
    } else if (key == "enabled_stages") {
      std::set<StageId> stages;
      for (const std::string& item : split_list(value)) {
        if (to_lower(item) == "none") continue;
        auto id = parse_stage_id(item);
        if (!id) throw Error("enabled_stages: unknown stage '" + item + "'");
        stages.insert(*id);
      }
      enabled_stages = std::move(stages);
    } else if (key == "enable_relaxed") {
      enable_relaxed = parse_bool(value, key);
    } else if (key == "enable_relaxations") {
      enable_relaxations = parse_bool(value, key);
    } else if (key == "enable_monograph") {
      enable_monograph = parse_bool(value, key);
    } else if (key == "serial_da") {
      serial_da = parse_double(value, key);
    } else if (key == "special_da") {
      special_da = parse_double(value, key);
    } else {
      throw Error("unknown resolver setting '" + key + "'");
    }
  }
}

ResolverConfig ResolverConfig::load(const std::string& path) {
  ResolverConfig config;
  config.apply(load_key_values(path));
  return config;
}

ResolverData::ResolverData(TemplateSet templates_in, AuthorityTable authority_in, std::vector<BibRecord> records,
                           CorrectionTables corrections, ConfusionTable confusions_in)
    : templates(std::move(templates_in)),
      authority(std::move(authority_in)),
      index(std::move(records)),
      heuristics(std::move(corrections), authority),
      confusions(std::move(confusions_in)) {}

namespace {

constexpr std::size_t kMaxRelaxedCandidates = 48;

int reason_rank(UnresolvedReason r) {
  switch (r) {
    case UnresolvedReason::no_year: return 1;
    case UnresolvedReason::no_source: return 2;
    case UnresolvedReason::no_record: return 3;
    case UnresolvedReason::rejected_authors: return 4;
    case UnresolvedReason::non_reference: return 0;
  }
  return 0;
}

bool looks_like_reference(std::string_view s) {
  return std::any_of(s.begin(), s.end(), is_alpha) && std::any_of(s.begin(), s.end(), is_digit);
}

std::string heuristic_label(StageId id) { return "heuristic-S" + std::to_string(stage_number(id)); }

}  // namespace

struct Resolver::Attempt {
  UnresolvedReason reason = UnresolvedReason::no_year;
  std::vector<std::pair<SerialCandidate, double>> candidates;
  std::set<std::string> tried;

  void note(UnresolvedReason r) {
    if (reason_rank(r) > reason_rank(reason)) reason = r;
  }
  void remember(const SerialCandidate& c, double source_score) {
    if (candidates.size() >= kMaxRelaxedCandidates) return;
    for (const auto& [have, score] : candidates) {
      if (have == c) return;
    }
    candidates.emplace_back(c, source_score);
  }
};

Resolver::Resolver(ResolverContext context, ResolverConfig config) : ctx_(context), config_(std::move(config)) {}

bool Resolver::attempt(const std::string& s, const std::string& stage, Attempt& state, ResolutionOutcome& out) const {
  if (!state.tried.insert(s).second) return false;
  const auto split = extract_year(s);
  if (!split) {
    state.note(UnresolvedReason::no_year);
    return false;
  }
  const MatchOptions options = config_.match_options();

  if (auto kw = find_thesis_keyword(split->rest)) {
    const MatchDecision d =
        match_thesis(split->author_segment, split->year, std::string_view(split->rest).substr(*kw), ctx_.index, options);
    if (d.accepted) {
      out.status = ResolutionStatus::resolved;
      out.bibcode = d.record->bibcode;
      out.stage = stage + ":" + d.rule;
      out.author_score = d.author_score;
      return true;
    }
    state.note(d.authors_rejected ? UnresolvedReason::rejected_authors : UnresolvedReason::no_record);
  }

  const HeadAndFillers hf = extract_head_and_fillers(split->rest);
  const auto sources = ctx_.authority.n_best_sources(hf.head, config_.n_best);
  if (sources.empty()) {
    state.note(UnresolvedReason::no_source);
    return false;
  }
  const AuthorNameSet authors = AuthorNameSet::from_reference(split->author_segment);
  bool any_fit = false;
  for (const SourceMatch& m : sources) {
    const SlotTemplate& slots = ctx_.templates.get_or_default(m.entry->template_name);
    for (const SlotAssignment& a : fill_slots(slots, hf.fillers)) {
      any_fit = true;
      const SerialCandidate c = make_serial_candidate(authors, split->year, m.entry->bibstem, a);
      state.remember(c, m.score);
      const MatchDecision d = match_serial(c, ctx_.index, options);
      if (d.accepted) {
        out.status = ResolutionStatus::resolved;
        out.bibcode = d.record->bibcode;
        out.stage = stage + ":" + d.rule;
        out.source_score = m.score;
        out.author_score = d.author_score;
        out.fields_changed = static_cast<int>(d.fields_changed.size());
        return true;
      }
      state.note(d.authors_rejected ? UnresolvedReason::rejected_authors : UnresolvedReason::no_record);
    }
  }
  if (!any_fit) state.note(UnresolvedReason::no_source);
  return false;
}

ResolutionOutcome Resolver::resolve_one(const NoisyReference& ref) const {
  ResolutionOutcome out;
  out.id = ref.id;
  const std::string base = ref.normalized.empty() ? normalize(ref.raw) : ref.normalized;
  if (base.empty() || !looks_like_reference(base)) {
    return ResolutionOutcome::unresolved_because(ref.id, UnresolvedReason::non_reference);
  }
  const auto enabled = [this](StageId id) { return config_.enabled_stages.count(id) > 0; };

  Attempt state;
  std::string current = base;
  std::string label = "core";
  if (!extract_year(base)) {
    // Without a year nothing downstream can work; the numeral repair gets one
    // early chance to recover it.
    std::string repaired = enabled(StageId::S2) ? ctx_.heuristics.s2_fix_numerals(base) : base;
    if (!extract_year(repaired)) {
      return ResolutionOutcome::unresolved_because(ref.id, ref.orphan_backreference ? UnresolvedReason::no_source
                                                                                     : UnresolvedReason::no_year);
    }
    current = std::move(repaired);
    label = heuristic_label(StageId::S2);
  }
  const std::string year_fixed = current;

  if (attempt(current, label, state, out)) return out;

  for (StageId id : {StageId::S1, StageId::S2, StageId::S3}) {
    if (!enabled(id)) continue;
    std::string next = ctx_.heuristics.rewrite(id, current);
    if (next == current) continue;
    current = std::move(next);
    if (attempt(current, heuristic_label(id), state, out)) return out;
  }
  if (enabled(StageId::S4)) {
    if (attempt(ctx_.heuristics.s4_rewrite(current), heuristic_label(StageId::S4), state, out)) return out;
  }
  if (enabled(StageId::S5)) {
    const std::string label5 = heuristic_label(StageId::S5);
    if (attempt(ctx_.heuristics.s5_remove_title(current), label5, state, out)) return out;
    const auto parts = ctx_.heuristics.s5_split(current);
    if (parts.size() > 1) {
      for (const std::string& part : parts) {
        if (attempt(part, label5, state, out)) return out;
      }
    }
  }

  const MatchOptions options = config_.match_options();
  if (config_.enable_monograph) {
    for (const std::string* s : std::array<const std::string*, 2>{&year_fixed, &current}) {
      const auto split = extract_year(*s);
      if (!split) continue;
      const MatchDecision d = match_monograph(split->author_segment, split->year, split->rest, ctx_.index, options);
      if (d.accepted) {
        out.status = ResolutionStatus::resolved;
        out.bibcode = d.record->bibcode;
        out.stage = "monograph:" + d.rule;
        out.author_score = d.author_score;
        return out;
      }
      if (d.authors_rejected) state.note(UnresolvedReason::rejected_authors);
    }
  }

  if (config_.enable_relaxed) {
    for (const auto& [candidate, source_score] : state.candidates) {
      const MatchDecision d = relaxed_pass(candidate, ctx_.index, ctx_.confusions, options);
      if (d.accepted) {
        out.status = ResolutionStatus::resolved;
        out.bibcode = d.record->bibcode;
        out.stage = "relaxed:" + d.rule;
        out.source_score = source_score;
        out.author_score = d.author_score;
        out.fields_changed = static_cast<int>(d.fields_changed.size());
        return out;
      }
      if (d.authors_rejected) state.note(UnresolvedReason::rejected_authors);
    }
  }

  if (ref.orphan_backreference) return ResolutionOutcome::unresolved_because(ref.id, UnresolvedReason::no_source);
  return ResolutionOutcome::unresolved_because(ref.id, state.reason);
}

std::vector<ResolutionOutcome> Resolver::resolve_corpus(std::vector<NoisyReference> refs, unsigned jobs) const {
  for (std::size_t i = 0; i < refs.size(); ++i) {
    refs[i].position = i;
    if (refs[i].normalized.empty()) refs[i].normalized = normalize(refs[i].raw);
  }
  refs = expand_backreferences(std::move(refs));

  std::vector<ResolutionOutcome> out(refs.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(refs.size(), 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < refs.size(); ++i) out[i] = resolve_one(refs[i]);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < refs.size(); i = next++) {
      try {
        out[i] = resolve_one(refs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace refres
