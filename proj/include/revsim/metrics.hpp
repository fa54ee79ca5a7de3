// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef REVSIM_METRICS_HPP
#define REVSIM_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "revsim/align.hpp"
#include "revsim/ngram.hpp"
#include "revsim/tokenize.hpp"

namespace revsim {

enum class Metric {
  ExactMatch,
  EditDistance,
  Nes,
  Bleu,
  Chrf,
  DiffBleu,
  Sari,
  SansLcs,
  EsLine,
  EsToken,
};

// A metric selector; `inner` is meaningful only for SansLcs and must be a
// pairwise metric (exact, nes, bleu, chrf).
struct MetricId {
  Metric kind = Metric::EsToken;
  Metric inner = Metric::Nes;
};

bool is_pairwise(Metric m);
MetricId parse_metric(const std::string& name);  // throws BadParamsError
std::string to_string(const MetricId& id);

// One precision/recall/F cell of the SARI computation. A cell is undefined
// when both its candidate multiset and its reference-side counterpart are
// empty; undefined cells are excluded from averages.
struct SariCell {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
  bool defined = false;
};

struct SariBreakdown {
  int nmax = 4;
  std::vector<SariCell> keep;  // index n-1; f is the harmonic mean
  std::vector<SariCell> add;
  std::vector<SariCell> del;  // precision only; recall/f mirror precision
  double f_keep = 0.0;
  double f_add = 0.0;
  double p_del = 0.0;
  bool keep_defined = false;
  bool add_defined = false;
  bool del_defined = false;
  double score = 1.0;  // all components undefined => 1
};

// SARI over n-gram bags: keep/add F1 and delete precision per order,
// averaged over the defined orders and then over the defined components.
SariBreakdown sari(const NGramBag& input, const NGramBag& system,
                   const NGramBag& reference);

struct EsResult {
  double score = 1.0;
  SariBreakdown breakdown;
  IndexedSubsequence removed;
  Excision excision;
};

// ExcisionScore on pre-tokenized operands: excises the approximate
// three-way LCS and applies SARI to the residues (input = origin residue,
// system = hypothesis residue, reference = reference residue), with
// n-grams built run by run.
EsResult excision_score_seq(const TokenSeq& reference,
                            const TokenSeq& hypothesis, const TokenSeq& origin,
                            int nmax = 4);

struct ScoreOptions {
  Granularity granularity = Granularity::CodeToken;
  LanguageTag lang = LanguageTag::PlainText;
  bool strip = false;  // strip comments before tokenizing
  int nmax = 4;
};

// Full pipeline on raw document strings.
EsResult excision_score(const std::string& reference,
                        const std::string& hypothesis,
                        const std::string& origin, const ScoreOptions& opts);

// Excise like ExcisionScore, then apply a pairwise metric to the flattened
// residues of reference and hypothesis (runs concatenated with no junction
// markers, so accidental junction matches are possible).
double sanslcs(const std::string& reference, const std::string& hypothesis,
               const std::string& origin, Metric inner,
               const ScoreOptions& opts);

// Line diff of origin -> revised as one token sequence: each deleted line
// is emitted as "-" followed by its code tokens, each inserted line as "+"
// followed by its code tokens, in document order (deletions first inside a
// gap). Context lines are omitted.
TokenSeq diff_lines(const std::string& origin, const std::string& revised,
                    LanguageTag lang = LanguageTag::PlainText);

// BLEU between the two line diffs; both diffs empty -> 1, exactly one
// empty -> 0.
double diffbleu(const std::string& reference, const std::string& hypothesis,
                const std::string& origin,
                LanguageTag lang = LanguageTag::PlainText);

// BLEU-4 with effective max order min(4, |hyp|), hard zero on any zero
// precision (no smoothing) and the standard brevity penalty.
double bleu(const TokenSeq& hypothesis, const TokenSeq& reference);

// Character n-gram F-score, orders 1..6, beta = 2, runs of whitespace
// collapsed to single spaces and ends trimmed before segmentation.
double chrf(const std::string& hypothesis, const std::string& reference);

std::size_t edit_distance(const TokenSeq& a, const TokenSeq& b);
double nes(const TokenSeq& a, const TokenSeq& b);  // 1 - ED/max(|a|,|b|)
double exact_match(const TokenSeq& a, const TokenSeq& b);

// Dispatch by metric id over raw (reference, hypothesis, origin) documents.
// es-line / es-token force their own granularity; everything else uses
// opts.granularity.
double score_metric(const MetricId& id, const std::string& reference,
                    const std::string& hypothesis, const std::string& origin,
                    const ScoreOptions& opts);

}  // namespace revsim

#endif  // REVSIM_METRICS_HPP
