// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef REVSIM_HARNESS_HPP
#define REVSIM_HARNESS_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revsim/metrics.hpp"
#include "revsim/tokenize.hpp"

namespace revsim {

// One labeled scoring item: the origin document, the ground-truth
// reference revision, and the system prediction. `label` is 1 when the
// prediction passed the dataset's tests, 0 when it failed.
struct Sample {
  std::string id;
  std::string origin;
  std::string reference;
  std::string prediction;
  LanguageTag lang = LanguageTag::PlainText;
  std::optional<int> label;
  std::map<std::string, std::string> meta;  // raw JSON text per key
};

// JSON-lines loader. Required fields: id, origin, reference, prediction.
// Optional: lang (string), label (0 or 1), meta (object). Unknown top-level
// fields are preserved in meta. Throws ParseError / MissingFieldError /
// DuplicateIdError with the offending line number.
std::vector<Sample> load_samples(const std::string& path);
std::vector<Sample> parse_samples(std::istream& in);

struct BatchOptions {
  std::optional<Granularity> granularity;  // override for granular metrics
  std::optional<LanguageTag> lang;         // override per-sample language
  bool strip = false;
  int nmax = 4;
};

struct ScoreRow {
  std::string id;
  std::vector<std::pair<std::string, double>> scores;        // metric -> value
  std::vector<std::pair<std::string, std::string>> errors;   // metric -> note
};

// Scores every sample with every metric, in input order. A metric failure
// on one sample is recorded in the row's errors and never aborts the batch.
std::vector<ScoreRow> score_batch(const std::vector<Sample>& samples,
                                  const std::vector<MetricId>& metrics,
                                  const BatchOptions& opts);

// Prepends one fresh random prefix (characters i.i.d. over a-f, space and
// newline; length uniform in [min_len, max_len]) identically to origin,
// reference and prediction. The per-sample stream is derived from the
// master seed and the sample id, so results do not depend on processing
// order.
Sample perturb_shared_prefix(const Sample& sample, std::uint64_t master_seed,
                             std::size_t min_len = 2000,
                             std::size_t max_len = 3000);

// Product-moment correlation. Throws DegenerateInputError on fewer than
// two points or a constant list.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

struct BootstrapCi {
  double lo = 0.0;
  double hi = 0.0;
  int skipped = 0;  // degenerate resamples
};

// Percentile bootstrap over (x, y) pairs: resample with replacement,
// recompute r, take the level quantiles. Degenerate resamples are skipped
// and counted; more than half degenerate raises DegenerateInputError.
BootstrapCi bootstrap_ci(const std::vector<std::pair<double, double>>& pairs,
                         int resamples = 1000, double level = 0.95,
                         std::uint64_t seed = 0);

struct CorrelationReport {
  std::string metric;
  double r = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t n = 0;         // pairs used
  std::size_t excluded = 0;  // rows dropped for this metric
  int resamples = 0;
  std::uint64_t seed = 0;
  std::string error;  // non-empty when the metric was degenerate
};

// One report per metric, pairing each row's score with its sample's label.
// Rows with a per-metric scoring error are excluded pairwise for that
// metric only. Throws BadParamsError when no labeled samples exist.
std::vector<CorrelationReport> correlate(const std::vector<ScoreRow>& rows,
                                         const std::vector<Sample>& samples,
                                         const std::vector<MetricId>& metrics,
                                         int resamples = 1000,
                                         std::uint64_t seed = 0);

// Deterministic serialization, floats fixed to 6 decimals.
std::string to_json_line(const Sample& sample);
std::string to_json_line(const ScoreRow& row);
std::string reports_to_json(const std::vector<CorrelationReport>& reports);
std::string reports_to_csv(const std::vector<CorrelationReport>& reports);

}  // namespace revsim

#endif  // REVSIM_HARNESS_HPP
