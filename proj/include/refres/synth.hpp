// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "refres/authority.hpp"
#include "refres/corpus.hpp"
#include "refres/evaluate.hpp"
#include "refres/fielding.hpp"
#include "refres/noise.hpp"

namespace refres {

struct SynthConfig {
  std::size_t records = 5000;
  std::uint64_t seed = 7;
  double letter_fraction = 0.05;
  double proceedings_fraction = 0.05;
  double preprint_fraction = 0.02;
  double thesis_fraction = 0.03;
  double monograph_fraction = 0.0;
};

/// A database built over the bibstems of the authority table: serial
/// journals with sequential volumes and pages (and letters sections),
/// proceedings volumes, numbered preprint series, theses and optionally
/// monographs. Authors are drawn from a pool of synthetic surnames.
std::vector<BibRecord> synthesize_database(const AuthorityTable& authority, const TemplateSet& templates,
                                           const SynthConfig& config);

struct GeneratedCorpus {
  std::vector<NoisyReference> references;
  std::vector<GoldEntry> gold;
  /// The input records minus the withheld targets.
  std::vector<BibRecord> database;
};

/// Samples targets, renders them with a source spelling from the authority
/// table (or the config's style variants), runs the author-error and OCR
/// channels, and withholds `missing_target_rate` of the targets from the
/// emitted database. Throws Error on an empty record set.
GeneratedCorpus generate_corpus(const std::vector<BibRecord>& records, const AuthorityTable& authority,
                                const NoiseConfig& config);

}  // namespace refres
