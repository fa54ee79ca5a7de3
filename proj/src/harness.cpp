// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "revsim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "revsim/errors.hpp"
#include "revsim/format.hpp"
#include "revsim/rng.hpp"

namespace revsim {

namespace {

using nlohmann::json;

Sample sample_from_json(const json& obj, std::size_t line_no) {
  if (!obj.is_object())
    throw ParseError("sample line is not a JSON object", line_no);
  Sample s;
  auto need_string = [&](const char* field) -> std::string {
    if (!obj.contains(field) || !obj[field].is_string())
      throw MissingFieldError(std::string("missing or non-string field '") +
                                  field + "'",
                              line_no);
    return obj[field].get<std::string>();
  };
  s.id = need_string("id");
  s.origin = need_string("origin");
  s.reference = need_string("reference");
  s.prediction = need_string("prediction");
  if (obj.contains("lang")) {
    if (!obj["lang"].is_string())
      throw MissingFieldError("field 'lang' must be a string", line_no);
    try {
      s.lang = parse_language(obj["lang"].get<std::string>());
    } catch (const BadParamsError& e) {
      throw MissingFieldError(e.what(), line_no);
    }
  }
  if (obj.contains("label") && !obj["label"].is_null()) {
    const auto& lab = obj["label"];
    if (!lab.is_number_integer() ||
        (lab.get<int>() != 0 && lab.get<int>() != 1))
      throw MissingFieldError("field 'label' must be 0 or 1", line_no);
    s.label = lab.get<int>();
  }
  if (obj.contains("meta")) {
    if (!obj["meta"].is_object())
      throw MissingFieldError("field 'meta' must be an object", line_no);
    for (const auto& [key, value] : obj["meta"].items())
      s.meta[key] = value.dump();
  }
  // unknown top-level fields ride along in meta
  static const std::set<std::string> known = {
      "id", "origin", "reference", "prediction", "lang", "label", "meta"};
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key) && !s.meta.count(key)) s.meta[key] = value.dump();
  }
  return s;
}

}  // namespace

std::vector<Sample> parse_samples(std::istream& in) {
  std::vector<Sample> samples;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded())
      throw ParseError("invalid JSON", line_no);
    Sample s = sample_from_json(obj, line_no);
    if (!ids.insert(s.id).second) throw DuplicateIdError(s.id);
    samples.push_back(std::move(s));
  }
  return samples;
}

std::vector<Sample> load_samples(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return parse_samples(in);
}

std::vector<ScoreRow> score_batch(const std::vector<Sample>& samples,
                                  const std::vector<MetricId>& metrics,
                                  const BatchOptions& opts) {
  if (metrics.empty()) throw BadParamsError("no metrics requested");
  std::vector<ScoreRow> rows;
  rows.reserve(samples.size());
  for (const auto& sample : samples) {
    ScoreRow row;
    row.id = sample.id;
    ScoreOptions so;
    so.granularity = opts.granularity.value_or(Granularity::CodeToken);
    so.lang = opts.lang.value_or(sample.lang);
    so.strip = opts.strip;
    so.nmax = opts.nmax;
    for (const auto& metric : metrics) {
      const std::string name = to_string(metric);
      try {
        row.scores.emplace_back(
            name, score_metric(metric, sample.reference, sample.prediction,
                               sample.origin, so));
      } catch (const std::exception& e) {
        row.errors.emplace_back(name, e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Sample perturb_shared_prefix(const Sample& sample, std::uint64_t master_seed,
                             std::size_t min_len, std::size_t max_len) {
  if (min_len > max_len)
    throw BadParamsError("perturb: min_len must be <= max_len");
  static const char kAlphabet[] = {'a', 'b', 'c', 'd', 'e', 'f', ' ', '\n'};
  Rng rng(derive_seed(master_seed, sample.id));
  const std::size_t len = min_len + rng.below(max_len - min_len + 1);
  std::string prefix;
  prefix.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    prefix += kAlphabet[rng.below(sizeof(kAlphabet))];
  Sample out = sample;
  out.origin = prefix + sample.origin;
  out.reference = prefix + sample.reference;
  out.prediction = prefix + sample.prediction;
  return out;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw BadParamsError("pearson: length mismatch");
  const std::size_t n = xs.size();
  if (n < 2) throw DegenerateInputError("pearson: need at least two points");
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw DegenerateInputError("pearson: constant input list");
  return sxy / std::sqrt(sxx * syy);
}

BootstrapCi bootstrap_ci(const std::vector<std::pair<double, double>>& pairs,
                         int resamples, double level, std::uint64_t seed) {
  const std::size_t n = pairs.size();
  if (n < 2)
    throw DegenerateInputError("bootstrap: need at least two pairs");
  if (resamples < 1) throw BadParamsError("bootstrap: resamples must be >= 1");
  if (level <= 0.0 || level >= 1.0)
    throw BadParamsError("bootstrap: level must be in (0, 1)");

  Rng rng(derive_seed(seed, "bootstrap"));
  std::vector<double> rs;
  rs.reserve(resamples);
  std::vector<double> xs(n), ys(n);
  int skipped = 0;
  for (int b = 0; b < resamples; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = pairs[rng.below(n)];
      xs[i] = p.first;
      ys[i] = p.second;
    }
    try {
      rs.push_back(pearson(xs, ys));
    } catch (const DegenerateInputError&) {
      ++skipped;
    }
  }
  if (skipped * 2 > resamples)
    throw DegenerateInputError("bootstrap: over half the resamples were degenerate");

  std::sort(rs.begin(), rs.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(rs.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, rs.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return rs[lo] * (1.0 - frac) + rs[hi] * frac;
  };
  const double alpha = 1.0 - level;
  BootstrapCi ci;
  ci.lo = quantile(alpha / 2.0);
  ci.hi = quantile(1.0 - alpha / 2.0);
  ci.skipped = skipped;
  return ci;
}

std::vector<CorrelationReport> correlate(const std::vector<ScoreRow>& rows,
                                         const std::vector<Sample>& samples,
                                         const std::vector<MetricId>& metrics,
                                         int resamples, std::uint64_t seed) {
  std::map<std::string, std::optional<int>> labels;
  for (const auto& s : samples) labels[s.id] = s.label;
  bool any_label = false;
  for (const auto& s : samples) any_label = any_label || s.label.has_value();
  if (!any_label) throw BadParamsError("correlate: no sample carries a label");

  std::vector<CorrelationReport> reports;
  for (const auto& metric : metrics) {
    CorrelationReport rep;
    rep.metric = to_string(metric);
    rep.resamples = resamples;
    rep.seed = seed;
    std::vector<std::pair<double, double>> pairs;  // (score, label)
    for (const auto& row : rows) {
      auto lab_it = labels.find(row.id);
      if (lab_it == labels.end() || !lab_it->second.has_value()) {
        ++rep.excluded;
        continue;
      }
      const auto score_it =
          std::find_if(row.scores.begin(), row.scores.end(),
                       [&](const auto& s) { return s.first == rep.metric; });
      if (score_it == row.scores.end()) {
        ++rep.excluded;
        continue;
      }
      pairs.emplace_back(score_it->second,
                         static_cast<double>(*lab_it->second));
    }
    rep.n = pairs.size();
    try {
      std::vector<double> xs, ys;
      xs.reserve(pairs.size());
      ys.reserve(pairs.size());
      for (const auto& [x, y] : pairs) {
        xs.push_back(x);
        ys.push_back(y);
      }
      rep.r = pearson(xs, ys);
      const BootstrapCi ci = bootstrap_ci(
          pairs, resamples, 0.95, derive_seed(seed, rep.metric));
      // percentile bounds must bracket the point estimate
      rep.ci_low = std::min(ci.lo, rep.r);
      rep.ci_high = std::max(ci.hi, rep.r);
    } catch (const DegenerateInputError& e) {
      rep.error = e.what();
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

std::string to_json_line(const Sample& sample) {
  std::string out = "{\"id\":" + json_escape(sample.id);
  out += ",\"origin\":" + json_escape(sample.origin);
  out += ",\"reference\":" + json_escape(sample.reference);
  out += ",\"prediction\":" + json_escape(sample.prediction);
  out += ",\"lang\":" + json_escape(to_string(sample.lang));
  if (sample.label)
    out += ",\"label\":" + std::to_string(*sample.label);
  if (!sample.meta.empty()) {
    out += ",\"meta\":{";
    bool first = true;
    for (const auto& [key, raw] : sample.meta) {
      if (!first) out += ',';
      first = false;
      out += json_escape(key) + ":" + raw;
    }
    out += '}';
  }
  out += '}';
  return out;
}

std::string to_json_line(const ScoreRow& row) {
  std::string out = "{\"id\":" + json_escape(row.id) + ",\"scores\":{";
  for (std::size_t i = 0; i < row.scores.size(); ++i) {
    if (i) out += ',';
    out += json_escape(row.scores[i].first) + ":" +
           format_fixed6(row.scores[i].second);
  }
  out += '}';
  if (!row.errors.empty()) {
    out += ",\"errors\":{";
    for (std::size_t i = 0; i < row.errors.size(); ++i) {
      if (i) out += ',';
      out += json_escape(row.errors[i].first) + ":" +
             json_escape(row.errors[i].second);
    }
    out += '}';
  }
  out += '}';
  return out;
}

std::string reports_to_json(const std::vector<CorrelationReport>& reports) {
  std::string out = "{\"reports\":[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (i) out += ',';
    out += "{\"metric\":" + json_escape(r.metric);
    if (r.error.empty()) {
      out += ",\"r\":" + format_fixed6(r.r);
      out += ",\"ci_low\":" + format_fixed6(r.ci_low);
      out += ",\"ci_high\":" + format_fixed6(r.ci_high);
    } else {
      out += ",\"error\":" + json_escape(r.error);
    }
    out += ",\"n\":" + std::to_string(r.n);
    out += ",\"excluded\":" + std::to_string(r.excluded);
    out += ",\"resamples\":" + std::to_string(r.resamples);
    out += ",\"seed\":" + std::to_string(r.seed);
    out += '}';
  }
  out += "]}";
  return out;
}

std::string reports_to_csv(const std::vector<CorrelationReport>& reports) {
  std::string out = "metric,r,ci_low,ci_high,n,excluded\n";
  for (const auto& r : reports) {
    out += r.metric;
    if (r.error.empty()) {
      out += ',' + format_fixed6(r.r) + ',' + format_fixed6(r.ci_low) + ',' +
             format_fixed6(r.ci_high);
    } else {
      out += ",,,";
    }
    out += ',' + std::to_string(r.n) + ',' + std::to_string(r.excluded) + '\n';
  }
  return out;
}

}  // namespace revsim
