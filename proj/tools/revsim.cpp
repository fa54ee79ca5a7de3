// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// revsim — revision similarity scoring, adequacy auditing, and evaluation
// harness over (origin, reference, prediction) triples.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revsim/adequacy.hpp"
#include "revsim/errors.hpp"
#include "revsim/format.hpp"
#include "revsim/harness.hpp"
#include "revsim/metrics.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw revsim::IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw revsim::IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw revsim::IoError("failed to write " + path);
}

std::vector<revsim::MetricId> parse_metric_list(const std::string& csv) {
  std::vector<revsim::MetricId> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(revsim::parse_metric(item));
  if (out.empty()) throw revsim::BadParamsError("no metrics given");
  return out;
}

struct CommonScoreFlags {
  std::string granularity = "token";
  std::string lang = "plain";
  bool strip = false;
};

revsim::ScoreOptions to_score_options(const CommonScoreFlags& flags) {
  revsim::ScoreOptions opts;
  opts.granularity = revsim::parse_granularity(flags.granularity);
  opts.lang = revsim::parse_language(flags.lang);
  opts.strip = flags.strip;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"revsim: static revision-similarity measures and harness"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // --- score ---------------------------------------------------------
  auto* score = app.add_subcommand("score", "Score one triple with one metric");
  std::string origin_path, reference_path, prediction_path, metric_name;
  CommonScoreFlags score_flags;
  std::size_t tau = 0;
  score->add_option("--origin", origin_path, "Origin document file")->required();
  score->add_option("--reference", reference_path, "Reference revision file")->required();
  score->add_option("--prediction", prediction_path, "Predicted revision file")->required();
  score->add_option("--metric", metric_name, "Metric id")->required();
  score->add_option("--granularity", score_flags.granularity, "line|token");
  score->add_option("--lang", score_flags.lang, "Language tag");
  score->add_flag("--strip-comments", score_flags.strip, "Strip comments first");
  score->add_option("--tau", tau,
                    "Warn when a revision's token edit distance to the "
                    "origin reaches this threshold (0 disables)");

  // --- batch ---------------------------------------------------------
  auto* batch = app.add_subcommand("batch", "Score a JSON-lines sample file");
  std::string batch_input, batch_out, batch_metrics;
  CommonScoreFlags batch_flags;
  batch->add_option("--input", batch_input, "JSON-lines samples")->required();
  batch->add_option("--metrics", batch_metrics, "Comma-separated metric ids")->required();
  batch->add_option("--out", batch_out, "Output file (JSON-lines; default stdout)");
  batch->add_option("--granularity", batch_flags.granularity, "line|token");
  auto* batch_lang_opt =
      batch->add_option("--lang", batch_flags.lang, "Override sample language");
  batch->add_flag("--strip-comments", batch_flags.strip, "Strip comments first");

  // --- perturb -------------------------------------------------------
  auto* perturb = app.add_subcommand(
      "perturb", "Prepend a random shared prefix to every sample");
  std::string perturb_input, perturb_out;
  std::size_t prefix_min = 2000, prefix_max = 3000;
  std::uint64_t perturb_seed = 0;
  perturb->add_option("--input", perturb_input, "JSON-lines samples")->required();
  perturb->add_option("--out", perturb_out, "Output file")->required();
  perturb->add_option("--prefix-min", prefix_min, "Minimum prefix length");
  perturb->add_option("--prefix-max", prefix_max, "Maximum prefix length");
  perturb->add_option("--seed", perturb_seed, "Master seed");

  // --- correlate -----------------------------------------------------
  auto* correlate_cmd = app.add_subcommand(
      "correlate", "Pearson correlation of scores against pass/fail labels");
  std::string corr_scores, corr_input, corr_out, corr_csv, corr_metrics;
  int corr_resamples = 1000;
  std::uint64_t corr_seed = 0;
  correlate_cmd->add_option("--scores", corr_scores, "JSON-lines score rows")->required();
  correlate_cmd->add_option("--input", corr_input, "JSON-lines samples with labels")->required();
  correlate_cmd->add_option("--metrics", corr_metrics,
                            "Metrics to report (default: all found in rows)");
  correlate_cmd->add_option("--bootstrap", corr_resamples, "Bootstrap resamples");
  correlate_cmd->add_option("--seed", corr_seed, "Bootstrap seed");
  correlate_cmd->add_option("--out", corr_out, "Report file (default stdout)");
  correlate_cmd->add_option("--csv", corr_csv, "Also write a CSV report here");

  // --- audit ---------------------------------------------------------
  auto* audit_cmd = app.add_subcommand(
      "audit", "Check a metric against the adequacy criteria");
  std::string audit_metric;
  int audit_trials = 50;
  std::uint64_t audit_seed = 0;
  bool audit_json = false, audit_strict = false;
  audit_cmd->add_option("--metric", audit_metric, "Metric id")->required();
  audit_cmd->add_option("--trials", audit_trials, "Trials per property");
  audit_cmd->add_option("--seed", audit_seed, "Generator seed");
  audit_cmd->add_flag("--json", audit_json, "Emit the report as JSON");
  audit_cmd->add_flag("--strict", audit_strict,
                      "Exit 1 when any property fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (score->parsed()) {
      const revsim::MetricId id = revsim::parse_metric(metric_name);
      const revsim::ScoreOptions opts = to_score_options(score_flags);
      const std::string reference = read_file(reference_path);
      const std::string prediction = read_file(prediction_path);
      const std::string origin = read_file(origin_path);
      if (tau > 0) {
        // advisory only: a revision should stay near its origin
        const auto origin_seq =
            revsim::tokenize(origin, opts.granularity, opts.lang);
        for (const auto& [name, doc] :
             {std::pair<const char*, const std::string&>{"reference", reference},
              {"prediction", prediction}}) {
          const auto seq = revsim::tokenize(doc, opts.granularity, opts.lang);
          const std::size_t ed = revsim::edit_distance(seq, origin_seq);
          if (ed >= tau)
            std::cerr << "warning: " << name << " is " << ed
                      << " token edits from the origin (tau " << tau << ")\n";
        }
      }
      const double value =
          revsim::score_metric(id, reference, prediction, origin, opts);
      std::cout << revsim::format_fixed6(value) << '\n';
      return 0;
    }

    if (batch->parsed()) {
      const auto metrics = parse_metric_list(batch_metrics);
      const auto samples = revsim::load_samples(batch_input);
      revsim::BatchOptions opts;
      opts.granularity = revsim::parse_granularity(batch_flags.granularity);
      if (batch_lang_opt->count() > 0)
        opts.lang = revsim::parse_language(batch_flags.lang);
      opts.strip = batch_flags.strip;
      const auto rows = revsim::score_batch(samples, metrics, opts);
      std::string out;
      for (const auto& row : rows) out += revsim::to_json_line(row) + "\n";
      if (batch_out.empty())
        std::cout << out;
      else
        write_file(batch_out, out);
      return 0;
    }

    if (perturb->parsed()) {
      const auto samples = revsim::load_samples(perturb_input);
      std::string out;
      for (const auto& sample : samples) {
        out += revsim::to_json_line(revsim::perturb_shared_prefix(
                   sample, perturb_seed, prefix_min, prefix_max)) +
               "\n";
      }
      write_file(perturb_out, out);
      return 0;
    }

    if (correlate_cmd->parsed()) {
      const auto samples = revsim::load_samples(corr_input);
      // rows are re-read from the scores file
      std::vector<revsim::ScoreRow> rows;
      std::vector<revsim::MetricId> metrics;
      {
        std::ifstream in(corr_scores, std::ios::binary);
        if (!in) throw revsim::IoError("cannot open " + corr_scores);
        std::string line;
        std::size_t line_no = 0;
        std::vector<std::string> seen_metrics;
        while (std::getline(in, line)) {
          ++line_no;
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          auto obj = nlohmann::json::parse(line, nullptr, false);
          if (obj.is_discarded() || !obj.is_object() ||
              !obj.contains("id") || !obj.contains("scores"))
            throw revsim::ParseError("invalid score row", line_no);
          revsim::ScoreRow row;
          row.id = obj["id"].get<std::string>();
          for (const auto& [key, value] : obj["scores"].items()) {
            row.scores.emplace_back(key, value.get<double>());
            if (std::find(seen_metrics.begin(), seen_metrics.end(), key) ==
                seen_metrics.end())
              seen_metrics.push_back(key);
          }
          rows.push_back(std::move(row));
        }
        if (!corr_metrics.empty()) {
          metrics = parse_metric_list(corr_metrics);
        } else {
          for (const auto& name : seen_metrics)
            metrics.push_back(revsim::parse_metric(name));
        }
      }
      const auto reports =
          revsim::correlate(rows, samples, metrics, corr_resamples, corr_seed);
      const std::string json_doc = revsim::reports_to_json(reports);
      if (corr_out.empty())
        std::cout << json_doc << '\n';
      else
        write_file(corr_out, json_doc + "\n");
      if (!corr_csv.empty()) write_file(corr_csv, revsim::reports_to_csv(reports));
      return 0;
    }

    if (audit_cmd->parsed()) {
      const revsim::MetricId id = revsim::parse_metric(audit_metric);
      const revsim::AuditReport report =
          revsim::audit(id, audit_trials, audit_seed);
      if (audit_json)
        std::cout << revsim::report_to_json(report) << '\n';
      else
        std::cout << revsim::report_to_text(report);
      if (audit_strict && !report.all_pass()) return 1;
      return 0;
    }
  } catch (const revsim::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const revsim::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const revsim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
