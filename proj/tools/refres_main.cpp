// SPDX-License-Identifier: Apache-2.0
//
// refres: resolve noisy reference strings to bibcodes, generate synthetic
// corpora, and score results.

#include <chrono>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "refres/error.hpp"
#include "refres/evaluate.hpp"
#include "refres/io.hpp"
#include "refres/keyvalue.hpp"
#include "refres/noise.hpp"
#include "refres/resolver.hpp"
#include "refres/synth.hpp"

#ifndef REFRES_DATA_DIR
#define REFRES_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace refres;

namespace {

std::string data_file(const char* name) { return (fs::path(REFRES_DATA_DIR) / name).string(); }

struct ResolveOptions {
  DataPaths paths{"", data_file("authority.tsv"), data_file("templates.tsv"), data_file("corrections.tsv")};
  std::string refs;
  std::string out;
  std::string config;
  std::string stages;
  bool no_relaxed = false;
  bool no_relaxations = false;
  unsigned jobs = 1;
};

void add_data_options(CLI::App* cmd, ResolveOptions& o) {
  cmd->add_option("--records", o.paths.records, "Records file (JSON Lines)")->required();
  cmd->add_option("--authority", o.paths.authority, "Authority file (TSV)");
  cmd->add_option("--templates", o.paths.templates, "Slot templates (TSV)");
  cmd->add_option("--corrections", o.paths.corrections, "Correction tables (TSV)");
  cmd->add_option("--refs", o.refs, "References file (TSV id, raw)")->required();
  cmd->add_option("--config", o.config, "Resolver settings (key = value)");
  cmd->add_option("--stages", o.stages, "Heuristic stages to enable, e.g. S1,S2 or none");
  cmd->add_flag("--no-relaxed", o.no_relaxed, "Skip the final relaxed pass");
  cmd->add_flag("--no-relaxations", o.no_relaxations, "Exact bibcode lookup only in serial matching");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

ResolverConfig make_config(const ResolveOptions& o) {
  ResolverConfig config;
  if (!o.config.empty()) config = ResolverConfig::load(o.config);
  if (!o.stages.empty()) config.apply({{"enabled_stages", o.stages}});
  if (o.no_relaxed) config.enable_relaxed = false;
  if (o.no_relaxations) config.enable_relaxations = false;
  return config;
}

int run_resolve(const ResolveOptions& o) {
  auto data = load_resolver_data(o.paths);
  Resolver resolver(data->context(), make_config(o));
  auto outcomes = resolver.resolve_corpus(load_references(o.refs), o.jobs);
  write_results(o.out, outcomes);
  std::size_t resolved = 0;
  for (const auto& r : outcomes) resolved += r.resolved() ? 1 : 0;
  std::cerr << "resolved " << resolved << " of " << outcomes.size() << "\n";
  return 0;
}

int run_bench(const ResolveOptions& o) {
  auto data = load_resolver_data(o.paths);
  Resolver resolver(data->context(), make_config(o));
  auto refs = load_references(o.refs);
  const auto start = std::chrono::steady_clock::now();
  auto outcomes = resolver.resolve_corpus(std::move(refs), o.jobs);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "references\t" << outcomes.size() << "\n"
            << "seconds\t" << seconds << "\n"
            << "refs_per_second\t" << (seconds > 0 ? static_cast<double>(outcomes.size()) / seconds : 0.0) << "\n";
  if (!o.out.empty()) write_results(o.out, outcomes);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolve noisy OCR reference strings to bibliographic records"};
  app.require_subcommand(1);

  ResolveOptions resolve_opts;
  auto* resolve = app.add_subcommand("resolve", "Resolve a references file");
  add_data_options(resolve, resolve_opts);
  resolve->add_option("--out", resolve_opts.out, "Results file (TSV)")->required();

  ResolveOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Resolve a references file and print references per second");
  add_data_options(bench, bench_opts);
  bench->add_option("--out", bench_opts.out, "Optional results file");

  std::string gen_records, gen_noise, gen_dir, gen_authority = data_file("authority.tsv");
  std::optional<std::uint64_t> gen_seed;
  std::optional<std::size_t> gen_count;
  auto* generate = app.add_subcommand("generate", "Generate a noisy corpus with gold answers from a records file");
  generate->add_option("--records", gen_records, "Records file (JSON Lines)")->required();
  generate->add_option("--noise", gen_noise, "Noise settings (key = value)");
  generate->add_option("--authority", gen_authority, "Authority file supplying source spellings");
  generate->add_option("--out-dir", gen_dir, "Output directory")->required();
  generate->add_option("--seed", gen_seed, "Seed (overrides the noise file)");
  generate->add_option("--count", gen_count, "Number of references (overrides the noise file)");

  std::string ev_results, ev_gold, ev_report;
  std::optional<double> ev_seconds;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a results file against gold answers");
  evaluate_cmd->add_option("--results", ev_results, "Results file")->required();
  evaluate_cmd->add_option("--gold", ev_gold, "Gold file")->required();
  evaluate_cmd->add_option("--report", ev_report, "Report file (default: stdout)");
  evaluate_cmd->add_option("--seconds", ev_seconds, "Resolution wall time, for throughput");

  std::string syn_out, syn_authority = data_file("authority.tsv"), syn_templates = data_file("templates.tsv");
  SynthConfig syn;
  auto* synth = app.add_subcommand("synth", "Write a synthetic records database");
  synth->add_option("--out", syn_out, "Records file to write")->required();
  synth->add_option("--authority", syn_authority, "Authority file");
  synth->add_option("--templates", syn_templates, "Slot templates");
  synth->add_option("--records", syn.records, "Number of records");
  synth->add_option("--seed", syn.seed, "Seed");
  synth->add_option("--monograph-fraction", syn.monograph_fraction, "Share of monographs");
  synth->add_option("--thesis-fraction", syn.thesis_fraction, "Share of theses");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*resolve) return run_resolve(resolve_opts);
    if (*bench) return run_bench(bench_opts);
    if (*generate) {
      NoiseConfig noise = gen_noise.empty() ? NoiseConfig() : NoiseConfig::load(gen_noise);
      if (gen_seed) noise.seed = *gen_seed;
      if (gen_count) noise.count = *gen_count;
      const AuthorityTable authority = load_authority(gen_authority);
      const GeneratedCorpus corpus = generate_corpus(load_records(gen_records), authority, noise);
      fs::create_directories(gen_dir);
      write_references((fs::path(gen_dir) / "references.tsv").string(), corpus.references);
      write_gold((fs::path(gen_dir) / "gold.tsv").string(), corpus.gold);
      write_records((fs::path(gen_dir) / "records.jsonl").string(), corpus.database);
      std::cerr << "wrote " << corpus.references.size() << " references, " << corpus.database.size()
                << " records to " << gen_dir << "\n";
      return 0;
    }
    if (*evaluate_cmd) {
      EvaluationReport report = evaluate(load_results(ev_results), load_gold(ev_gold));
      report.seconds = ev_seconds;
      if (ev_report.empty()) {
        write_report(std::cout, report);
      } else {
        write_report(ev_report, report);
      }
      return 0;
    }
    if (*synth) {
      const TemplateSet templates = load_templates(syn_templates);
      const AuthorityTable authority = load_authority(syn_authority, &templates);
      const auto records = synthesize_database(authority, templates, syn);
      write_records(syn_out, records);
      std::cerr << "wrote " << records.size() << " records to " << syn_out << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "refres: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
