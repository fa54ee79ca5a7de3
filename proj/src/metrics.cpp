// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "revsim/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "revsim/errors.hpp"

namespace revsim {

bool is_pairwise(Metric m) {
  return m == Metric::ExactMatch || m == Metric::Nes || m == Metric::Bleu ||
         m == Metric::Chrf;
}

MetricId parse_metric(const std::string& name) {
  if (name == "exact") return {Metric::ExactMatch};
  if (name == "ed") return {Metric::EditDistance};
  if (name == "nes") return {Metric::Nes};
  if (name == "bleu") return {Metric::Bleu};
  if (name == "chrf") return {Metric::Chrf};
  if (name == "diffbleu") return {Metric::DiffBleu};
  if (name == "sari") return {Metric::Sari};
  if (name == "es-line") return {Metric::EsLine};
  if (name == "es-token") return {Metric::EsToken};
  if (name.rfind("sanslcs:", 0) == 0) {
    const MetricId inner = parse_metric(name.substr(8));
    if (!is_pairwise(inner.kind))
      throw BadParamsError("sanslcs inner metric must be pairwise: " + name);
    return {Metric::SansLcs, inner.kind};
  }
  throw BadParamsError("unknown metric: " + name);
}

std::string to_string(const MetricId& id) {
  switch (id.kind) {
    case Metric::ExactMatch:
      return "exact";
    case Metric::EditDistance:
      return "ed";
    case Metric::Nes:
      return "nes";
    case Metric::Bleu:
      return "bleu";
    case Metric::Chrf:
      return "chrf";
    case Metric::DiffBleu:
      return "diffbleu";
    case Metric::Sari:
      return "sari";
    case Metric::SansLcs:
      return "sanslcs:" + to_string(MetricId{id.inner});
    case Metric::EsLine:
      return "es-line";
    case Metric::EsToken:
      return "es-token";
  }
  return "?";
}

namespace {

// One SARI cell under the definedness rule: both sides empty -> undefined;
// exactly one empty -> 0; otherwise compute.
SariCell sari_cell(std::int64_t good, std::int64_t cand, std::int64_t refside,
                   bool with_recall) {
  SariCell cell;
  if (cand == 0 && refside == 0) return cell;  // undefined
  cell.defined = true;
  if (cand == 0 || refside == 0) return cell;  // value 0
  cell.precision = static_cast<double>(good) / static_cast<double>(cand);
  if (with_recall) {
    cell.recall = static_cast<double>(good) / static_cast<double>(refside);
    const double pr = cell.precision + cell.recall;
    cell.f = pr > 0.0 ? 2.0 * cell.precision * cell.recall / pr : 0.0;
  } else {
    cell.recall = cell.precision;
    cell.f = cell.precision;
  }
  return cell;
}

// Mean over defined orders; defined=false when no order is defined.
std::pair<double, bool> component_average(const std::vector<SariCell>& cells) {
  double sum = 0.0;
  int count = 0;
  for (const auto& c : cells) {
    if (!c.defined) continue;
    sum += c.f;
    ++count;
  }
  if (count == 0) return {0.0, false};
  return {sum / count, true};
}

}  // namespace

SariBreakdown sari(const NGramBag& input, const NGramBag& system,
                   const NGramBag& reference) {
  if (input.nmax() != system.nmax() || input.nmax() != reference.nmax())
    throw BadParamsError("SARI bags must share one max order");
  SariBreakdown out;
  out.nmax = input.nmax();

  const NGramBag keep_cand = bag_intersect(input, system);
  const NGramBag keep_ref = bag_intersect(input, reference);
  const NGramBag keep_good = bag_intersect(keep_cand, reference);

  const NGramBag add_cand = bag_subtract(system, input);
  const NGramBag add_ref = bag_subtract(reference, input);
  const NGramBag add_good = bag_intersect(add_cand, add_ref);

  const NGramBag del_cand = bag_subtract(input, system);
  const NGramBag del_ref = bag_subtract(input, reference);
  const NGramBag del_good = bag_intersect(del_cand, del_ref);

  for (int n = 1; n <= out.nmax; ++n) {
    out.keep.push_back(sari_cell(keep_good.total(n), keep_cand.total(n),
                                 keep_ref.total(n), true));
    out.add.push_back(sari_cell(add_good.total(n), add_cand.total(n),
                                add_ref.total(n), true));
    out.del.push_back(sari_cell(del_good.total(n), del_cand.total(n),
                                del_ref.total(n), false));
  }

  std::tie(out.f_keep, out.keep_defined) = component_average(out.keep);
  std::tie(out.f_add, out.add_defined) = component_average(out.add);
  std::tie(out.p_del, out.del_defined) = component_average(out.del);

  double sum = 0.0;
  int count = 0;
  if (out.keep_defined) {
    sum += out.f_keep;
    ++count;
  }
  if (out.add_defined) {
    sum += out.f_add;
    ++count;
  }
  if (out.del_defined) {
    sum += out.p_del;
    ++count;
  }
  out.score = count == 0 ? 1.0 : sum / count;
  return out;
}

EsResult excision_score_seq(const TokenSeq& reference,
                            const TokenSeq& hypothesis, const TokenSeq& origin,
                            int nmax) {
  EsResult result;
  result.removed = lcs3_approx(reference, hypothesis, origin);
  result.excision = excise(reference, hypothesis, origin, result.removed);
  const NGramBag input_bag = ngrams(result.excision.residue_o, nmax);
  const NGramBag system_bag = ngrams(result.excision.residue_b, nmax);
  const NGramBag reference_bag = ngrams(result.excision.residue_a, nmax);
  result.breakdown = sari(input_bag, system_bag, reference_bag);
  result.score = result.breakdown.score;
  return result;
}

namespace {

std::string maybe_strip(const std::string& text, const ScoreOptions& opts) {
  return opts.strip ? strip_comments(text, opts.lang) : text;
}

TokenSeq tokenize_doc(const std::string& text, const ScoreOptions& opts) {
  return tokenize(maybe_strip(text, opts), opts.granularity, opts.lang);
}

std::vector<std::string> flatten_runs(const std::vector<Run>& runs) {
  std::vector<std::string> out;
  for (const auto& run : runs)
    out.insert(out.end(), run.tokens.begin(), run.tokens.end());
  return out;
}

std::string concat_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t;
  return out;
}

}  // namespace

EsResult excision_score(const std::string& reference,
                        const std::string& hypothesis,
                        const std::string& origin, const ScoreOptions& opts) {
  return excision_score_seq(tokenize_doc(reference, opts),
                            tokenize_doc(hypothesis, opts),
                            tokenize_doc(origin, opts), opts.nmax);
}

double sanslcs(const std::string& reference, const std::string& hypothesis,
               const std::string& origin, Metric inner,
               const ScoreOptions& opts) {
  if (!is_pairwise(inner))
    throw BadParamsError("sanslcs inner metric must be pairwise");
  const TokenSeq a = tokenize_doc(reference, opts);
  const TokenSeq b = tokenize_doc(hypothesis, opts);
  const TokenSeq o = tokenize_doc(origin, opts);
  const IndexedSubsequence removed = lcs3_approx(a, b, o);
  const Excision ex = excise(a, b, o, removed);
  TokenSeq flat_a{flatten_runs(ex.residue_a), a.granularity};
  TokenSeq flat_b{flatten_runs(ex.residue_b), a.granularity};
  switch (inner) {
    case Metric::ExactMatch:
      return exact_match(flat_b, flat_a);
    case Metric::Nes:
      return nes(flat_b, flat_a);
    case Metric::Bleu:
      return bleu(flat_b, flat_a);
    case Metric::Chrf:
      return chrf(concat_tokens(flat_b.tokens), concat_tokens(flat_a.tokens));
    default:
      throw BadParamsError("sanslcs inner metric must be pairwise");
  }
}

TokenSeq diff_lines(const std::string& origin, const std::string& revised,
                    LanguageTag lang) {
  const TokenSeq o = tokenize_lines(origin);
  const TokenSeq x = tokenize_lines(revised);
  const IndexedSubsequence anchors = lcs2(o, x);

  TokenSeq out;
  out.granularity = Granularity::CodeToken;
  auto emit = [&](const char* prefix, const std::string& line) {
    out.tokens.push_back(prefix);
    const TokenSeq toks = tokenize_code(line, lang);
    out.tokens.insert(out.tokens.end(), toks.tokens.begin(),
                      toks.tokens.end());
  };
  std::size_t io = 0, ix = 0;
  for (std::size_t r = 0; r <= anchors.size(); ++r) {
    const std::size_t stop_o = r < anchors.size() ? anchors.pos_a[r] : o.size();
    const std::size_t stop_x = r < anchors.size() ? anchors.pos_b[r] : x.size();
    for (; io < stop_o; ++io) emit("-", o.tokens[io]);
    for (; ix < stop_x; ++ix) emit("+", x.tokens[ix]);
    ++io;  // skip the anchor (context) line
    ++ix;
  }
  return out;
}

double bleu(const TokenSeq& hypothesis, const TokenSeq& reference) {
  const std::size_t hlen = hypothesis.size();
  const std::size_t rlen = reference.size();
  if (hlen == 0 && rlen == 0) return 1.0;
  if (hlen == 0 || rlen == 0) return 0.0;

  const int max_order = static_cast<int>(std::min<std::size_t>(4, hlen));
  const NGramBag hyp_bag = ngrams(hypothesis.tokens, max_order);
  const NGramBag ref_bag = ngrams(reference.tokens, max_order);
  const NGramBag clipped = bag_intersect(hyp_bag, ref_bag);

  double log_sum = 0.0;
  for (int n = 1; n <= max_order; ++n) {
    const std::int64_t total = hyp_bag.total(n);
    const std::int64_t matched = clipped.total(n);
    if (matched == 0) return 0.0;  // no smoothing
    log_sum += std::log(static_cast<double>(matched) /
                        static_cast<double>(total));
  }
  double bp = 1.0;
  if (hlen < rlen)
    bp = std::exp(1.0 - static_cast<double>(rlen) / static_cast<double>(hlen));
  return bp * std::exp(log_sum / max_order);
}

double diffbleu(const std::string& reference, const std::string& hypothesis,
                const std::string& origin, LanguageTag lang) {
  const TokenSeq ref_diff = diff_lines(origin, reference, lang);
  const TokenSeq hyp_diff = diff_lines(origin, hypothesis, lang);
  if (ref_diff.empty() && hyp_diff.empty()) return 1.0;
  if (ref_diff.empty() || hyp_diff.empty()) return 0.0;
  return bleu(hyp_diff, ref_diff);
}

namespace {

std::string collapse_whitespace(const std::string& text) {
  std::string out;
  bool in_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out += ' ';
    in_space = false;
    out += c;
  }
  return out;
}

}  // namespace

double chrf(const std::string& hypothesis, const std::string& reference) {
  const std::string hyp = collapse_whitespace(hypothesis);
  const std::string ref = collapse_whitespace(reference);
  if (hyp.empty() && ref.empty()) return 1.0;
  if (hyp.empty() || ref.empty()) return 0.0;

  constexpr int kOrder = 6;
  constexpr double kBeta2 = 4.0;  // beta = 2
  const NGramBag hyp_bag = ngrams(tokenize_chars(hyp).tokens, kOrder);
  const NGramBag ref_bag = ngrams(tokenize_chars(ref).tokens, kOrder);
  const NGramBag matched = bag_intersect(hyp_bag, ref_bag);

  double sum = 0.0;
  int used = 0;
  for (int n = 1; n <= kOrder; ++n) {
    const std::int64_t ht = hyp_bag.total(n);
    const std::int64_t rt = ref_bag.total(n);
    if (ht == 0 && rt == 0) continue;
    ++used;
    if (ht == 0 || rt == 0) continue;  // F contribution is 0
    const double p = static_cast<double>(matched.total(n)) / static_cast<double>(ht);
    const double r = static_cast<double>(matched.total(n)) / static_cast<double>(rt);
    const double denom = kBeta2 * p + r;
    if (denom > 0.0) sum += (1.0 + kBeta2) * p * r / denom;
  }
  return used == 0 ? 1.0 : sum / used;
}

std::size_t edit_distance(const TokenSeq& a, const TokenSeq& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub =
          prev[j - 1] + (a.tokens[i - 1] == b.tokens[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

double nes(const TokenSeq& a, const TokenSeq& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(edit_distance(a, b)) /
                   static_cast<double>(longest);
}

double exact_match(const TokenSeq& a, const TokenSeq& b) {
  return a.tokens == b.tokens ? 1.0 : 0.0;
}

double score_metric(const MetricId& id, const std::string& reference,
                    const std::string& hypothesis, const std::string& origin,
                    const ScoreOptions& opts) {
  ScoreOptions local = opts;
  switch (id.kind) {
    case Metric::EsLine:
      local.granularity = Granularity::Line;
      return excision_score(reference, hypothesis, origin, local).score;
    case Metric::EsToken:
      local.granularity = Granularity::CodeToken;
      return excision_score(reference, hypothesis, origin, local).score;
    case Metric::Sari: {
      const NGramBag input = ngrams(tokenize_doc(origin, local).tokens, local.nmax);
      const NGramBag system = ngrams(tokenize_doc(hypothesis, local).tokens, local.nmax);
      const NGramBag ref = ngrams(tokenize_doc(reference, local).tokens, local.nmax);
      return sari(input, system, ref).score;
    }
    case Metric::SansLcs:
      return sanslcs(reference, hypothesis, origin, id.inner, local);
    case Metric::DiffBleu:
      return diffbleu(maybe_strip(reference, local), maybe_strip(hypothesis, local),
                      maybe_strip(origin, local), local.lang);
    case Metric::Bleu:
      return bleu(tokenize_doc(hypothesis, local), tokenize_doc(reference, local));
    case Metric::Chrf:
      return chrf(maybe_strip(hypothesis, local), maybe_strip(reference, local));
    case Metric::Nes:
      return nes(tokenize_doc(hypothesis, local), tokenize_doc(reference, local));
    case Metric::ExactMatch:
      return exact_match(tokenize_doc(hypothesis, local),
                         tokenize_doc(reference, local));
    case Metric::EditDistance:
      return static_cast<double>(edit_distance(tokenize_doc(hypothesis, local),
                                               tokenize_doc(reference, local)));
  }
  throw BadParamsError("unhandled metric");
}

}  // namespace revsim
