// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "revsim/adequacy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "revsim/errors.hpp"
#include "revsim/rng.hpp"

namespace revsim {

namespace {

// Each role draws tokens from its own 4-letter alphabet, so distinct roles
// can never collide, token-wise or character-wise.
constexpr char kLetterPool[] =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr int kLettersPerRole = 4;
constexpr int kMaxRoles = 13;

std::string role_token(Rng& rng, int role) {
  const std::size_t len = rng.range(3, 6);
  const char* base = kLetterPool + role * kLettersPerRole;
  std::string t;
  for (std::size_t i = 0; i < len; ++i)
    t += base[rng.below(kLettersPerRole)];
  return t;
}

// Tokens are unique within a part, so subsequence embeddings stay
// unambiguous and the derived score relations hold exactly.
std::vector<std::string> role_tokens(Rng& rng, int role, int count) {
  if (role < 0 || role >= kMaxRoles)
    throw BadParamsError("token role out of range");
  // a 4-letter alphabet with lengths 3..6 holds 5440 distinct tokens
  if (count > 4000)
    throw BadParamsError("part size exceeds the role alphabet capacity");
  std::vector<std::string> out;
  std::set<std::string> seen;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    std::string t = role_token(rng, role);
    if (seen.insert(t).second) out.push_back(std::move(t));
  }
  return out;
}

// Renders tokens as lines of 2..4 tokens; parts never share a line, so the
// family structure survives at line granularity too.
std::string render_lines(Rng& rng, const std::vector<std::string>& tokens) {
  std::string out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::size_t width = std::min<std::size_t>(
        rng.range(2, 4), tokens.size() - i);
    for (std::size_t k = 0; k < width; ++k) {
      if (k) out += ' ';
      out += tokens[i + k];
    }
    out += '\n';
    i += width;
  }
  return out;
}

std::string join_docs(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) out += p;
  return out;
}

void check_disjoint(const std::vector<std::vector<std::string>>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::set<std::string> seen(parts[i].begin(), parts[i].end());
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (const auto& t : parts[j])
        if (seen.count(t))
          throw Error("generator self-check failed: parts share token " + t);
  }
}

std::size_t token_ed(const std::vector<std::string>& a,
                     const std::vector<std::string>& b) {
  TokenSeq sa{a, Granularity::CodeToken};
  TokenSeq sb{b, Granularity::CodeToken};
  return edit_distance(sa, sb);
}

FamilyInstance gen_sim_strings(Rng& rng, const FamilyParams& p) {
  if (p.context_factor < 20)
    throw BadParamsError("sim-strings needs a context factor of at least 20");
  const int l = p.part_tokens;
  const int xlen = p.context_factor * l;
  const auto x = role_tokens(rng, 0, xlen);
  const auto y = role_tokens(rng, 1, l);
  const auto z = role_tokens(rng, 2, l);
  const auto w = role_tokens(rng, 3, l);
  check_disjoint({x, y, z, w});
  if (token_ed(y, z) != static_cast<std::size_t>(l) ||
      token_ed(y, w) != static_cast<std::size_t>(l) ||
      token_ed(z, w) != static_cast<std::size_t>(l))
    throw Error("generator self-check failed: tail distances");
  FamilyInstance inst;
  const std::string xdoc = render_lines(rng, x);
  inst.origin = join_docs({xdoc, render_lines(rng, y)});
  inst.reference = join_docs({xdoc, render_lines(rng, z)});
  inst.hypothesis = join_docs({xdoc, render_lines(rng, w)});
  return inst;
}

FamilyInstance gen_agreeing_deletions(Rng& rng, const FamilyParams& p) {
  const int n = p.part_tokens;
  const auto d = role_tokens(rng, 0, n);
  const auto k = role_tokens(rng, 1, n);
  const auto r = role_tokens(rng, 2, n);
  const auto ra = role_tokens(rng, 3, n);
  const auto rb = role_tokens(rng, 4, n);
  check_disjoint({d, k, r, ra, rb});
  FamilyInstance inst;
  const std::string kdoc = render_lines(rng, k);
  inst.origin = join_docs({render_lines(rng, d), kdoc, render_lines(rng, r)});
  inst.reference = join_docs({kdoc, render_lines(rng, ra)});
  inst.hypothesis = join_docs({kdoc, render_lines(rng, rb)});
  return inst;
}

FamilyInstance gen_lhs_rhs_balance(Rng& rng, const FamilyParams& p) {
  // The agreed deletion block dwarfs the disagreeing insertions, and both
  // insertions share one shape so the diffs have equal length.
  const int keep_n = p.part_tokens;
  const int del_n = std::max(16, 4 * p.part_tokens);
  const int ins_n = std::max(3, p.part_tokens / 3);
  const auto k = role_tokens(rng, 0, keep_n);
  const auto r = role_tokens(rng, 1, del_n);
  const auto ra = role_tokens(rng, 2, ins_n);
  const auto rb = role_tokens(rng, 3, ins_n);
  check_disjoint({k, r, ra, rb});
  FamilyInstance inst;
  const std::string kdoc = render_lines(rng, k);
  const std::string rdoc = render_lines(rng, r);
  // One line per insertion block keeps |diff(O,A)| == |diff(O,B)|.
  auto one_line = [](const std::vector<std::string>& toks) {
    std::string out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (i) out += ' ';
      out += toks[i];
    }
    out += '\n';
    return out;
  };
  inst.origin = join_docs({kdoc, rdoc});
  inst.reference = join_docs({kdoc, one_line(ra)});
  inst.hypothesis = join_docs({kdoc, one_line(rb)});
  return inst;
}

FamilyInstance gen_shared_context_pad(Rng& rng, const FamilyParams& p) {
  // The `w` block is kept by the hypothesis but deleted by the reference (a
  // disagreed keep), so keep-precision is not saturated before padding.
  const int n = p.part_tokens;
  const auto k1 = role_tokens(rng, 0, n);
  const auto eo = role_tokens(rng, 1, n);
  const auto ea = role_tokens(rng, 2, n);
  const auto eb = role_tokens(rng, 3, n);
  const auto k2 = role_tokens(rng, 4, n);
  const auto w = role_tokens(rng, 5, std::max(2, n / 2));
  const auto prefix = role_tokens(rng, 6, std::max(8, 2 * n));
  const auto suffix = role_tokens(rng, 7, std::max(8, 2 * n));
  check_disjoint({k1, eo, ea, eb, k2, w, prefix, suffix});
  FamilyInstance inst;
  const std::string k1doc = render_lines(rng, k1);
  const std::string k2doc = render_lines(rng, k2);
  const std::string wdoc = render_lines(rng, w);
  inst.origin = join_docs({k1doc, wdoc, render_lines(rng, eo), k2doc});
  inst.reference = join_docs({k1doc, render_lines(rng, ea), k2doc});
  inst.hypothesis = join_docs({k1doc, wdoc, render_lines(rng, eb), k2doc});
  const std::string pre = render_lines(rng, prefix);
  const std::string post = render_lines(rng, suffix);
  inst.padded_origin = join_docs({pre, inst.origin, post});
  inst.padded_reference = join_docs({pre, inst.reference, post});
  inst.padded_hypothesis = join_docs({pre, inst.hypothesis, post});
  return inst;
}

FamilyInstance gen_origin_variants(Rng& rng, const FamilyParams& p) {
  if (p.chain_len < 2) throw BadParamsError("chain_len must be >= 2");
  if (p.chain_len + 3 > kMaxRoles)
    throw BadParamsError("chain_len too long for the role alphabet");
  const int core_n = std::max(p.part_tokens, p.chain_len + 4);
  const auto core = role_tokens(rng, 0, core_n);
  const auto tail_a = role_tokens(rng, 1, std::max(4, p.part_tokens / 2));
  const auto tail_b = role_tokens(rng, 2, std::max(4, p.part_tokens / 2));
  check_disjoint({core, tail_a, tail_b});

  FamilyInstance inst;
  auto with_tail = [&](const std::vector<std::string>& tail) {
    std::vector<std::string> doc = core;
    doc.insert(doc.end(), tail.begin(), tail.end());
    return doc;
  };
  const auto a_tokens = with_tail(tail_a);
  const auto b_tokens = with_tail(tail_b);
  inst.reference = render_lines(rng, a_tokens);
  inst.hypothesis = render_lines(rng, b_tokens);

  std::size_t prev_ed = 0;
  for (int i = 1; i <= p.chain_len; ++i) {
    std::vector<std::string> variant = core;
    const auto fresh = role_tokens(rng, 2 + i, i);
    for (int j = 0; j < i; ++j) variant[j] = fresh[j];
    const std::size_t ed_a = token_ed(variant, a_tokens);
    const std::size_t ed_b = token_ed(variant, b_tokens);
    if (ed_a != ed_b || (i > 1 && ed_a <= prev_ed))
      throw Error("generator self-check failed: variant distances");
    prev_ed = ed_a;
    inst.origin_chain.push_back(render_lines(rng, variant));
  }
  inst.origin = inst.origin_chain.front();
  return inst;
}

FamilyInstance gen_do_nothing(Rng& rng, const FamilyParams& p) {
  const int n = p.part_tokens;
  const auto k1 = role_tokens(rng, 0, n);
  const auto k2 = role_tokens(rng, 1, n);
  const auto ro = role_tokens(rng, 2, n);
  const auto ra = role_tokens(rng, 3, n);
  check_disjoint({k1, k2, ro, ra});
  FamilyInstance inst;
  const std::string k1doc = render_lines(rng, k1);
  const std::string k2doc = render_lines(rng, k2);
  inst.origin = join_docs({k1doc, render_lines(rng, ro), k2doc});
  inst.reference = join_docs({k1doc, render_lines(rng, ra), k2doc});
  inst.hypothesis = inst.origin;
  return inst;
}

}  // namespace

std::vector<FamilyInstance> generate(const FamilyParams& params) {
  if (params.count < 1 || params.part_tokens < 1 || params.context_factor < 1)
    throw BadParamsError("family sizes must be positive");
  Rng rng(derive_seed(params.seed, "family"));
  std::vector<FamilyInstance> out;
  out.reserve(params.count);
  for (int i = 0; i < params.count; ++i) {
    switch (params.id) {
      case TripleFamily::SimStrings:
        out.push_back(gen_sim_strings(rng, params));
        break;
      case TripleFamily::AgreeingDeletions:
        out.push_back(gen_agreeing_deletions(rng, params));
        break;
      case TripleFamily::LhsRhsBalance:
        out.push_back(gen_lhs_rhs_balance(rng, params));
        break;
      case TripleFamily::SharedContextPad:
        out.push_back(gen_shared_context_pad(rng, params));
        break;
      case TripleFamily::OriginVariants:
        out.push_back(gen_origin_variants(rng, params));
        break;
      case TripleFamily::DoNothing:
        out.push_back(gen_do_nothing(rng, params));
        break;
    }
  }
  return out;
}

namespace {

double run_metric(const MetricId& id, const std::string& reference,
                  const std::string& hypothesis, const std::string& origin) {
  ScoreOptions opts;  // token granularity, plain text, no stripping
  return score_metric(id, reference, hypothesis, origin, opts);
}

PropertyResult finish(PropertyResult r, bool partial) {
  if (r.violations == 0)
    r.verdict = partial ? "partial" : "pass";
  else
    r.verdict = "fail";
  return r;
}

}  // namespace

AuditReport audit(const MetricId& metric, int trials, std::uint64_t seed) {
  if (trials < 1) throw BadParamsError("audit needs at least one trial");
  AuditReport report;
  report.metric = to_string(metric);

  FamilyParams params;
  params.count = trials;
  params.part_tokens = 10;

  // Property 1: all-agree edits beat the do-nothing baseline.
  // Property 2: a disagreeing edit strictly lowers the score.
  {
    params.id = TripleFamily::AgreeingDeletions;
    params.seed = derive_seed(seed, "p12");
    PropertyResult p1, p2;
    for (const auto& inst : generate(params)) {
      const double agree =
          run_metric(metric, inst.reference, inst.reference, inst.origin);
      const double noop =
          run_metric(metric, inst.reference, inst.origin, inst.origin);
      const double disagree =
          run_metric(metric, inst.reference, inst.hypothesis, inst.origin);
      ++p1.trials;
      if (!(agree > noop)) {
        ++p1.violations;
        p1.worst_delta = std::max(p1.worst_delta, noop - agree);
      }
      ++p2.trials;
      if (!(disagree < agree)) {
        ++p2.violations;
        p2.worst_delta = std::max(p2.worst_delta, disagree - agree);
      }
    }
    report.properties[0] = finish(p1, false);
    report.properties[1] = finish(p2, false);
  }

  // Property 3: invariance to disjoint shared context, tolerance 1e-9.
  {
    params.id = TripleFamily::SharedContextPad;
    params.seed = derive_seed(seed, "p3");
    PropertyResult p3;
    for (const auto& inst : generate(params)) {
      const double base =
          run_metric(metric, inst.reference, inst.hypothesis, inst.origin);
      const double padded = run_metric(metric, inst.padded_reference,
                                       inst.padded_hypothesis,
                                       inst.padded_origin);
      ++p3.trials;
      const double delta = std::fabs(padded - base);
      if (delta > 1e-9) {
        ++p3.violations;
        p3.worst_delta = std::max(p3.worst_delta, delta);
      }
    }
    report.properties[2] = finish(p3, false);
  }

  // Property 4: strict increase along each origin-variant chain.
  {
    params.id = TripleFamily::OriginVariants;
    params.seed = derive_seed(seed, "p4");
    PropertyResult p4;
    for (const auto& inst : generate(params)) {
      ++p4.trials;
      bool violated = false;
      double prev = 0.0;
      for (std::size_t i = 0; i < inst.origin_chain.size(); ++i) {
        const double s = run_metric(metric, inst.reference, inst.hypothesis,
                                    inst.origin_chain[i]);
        if (i > 0 && !(s > prev)) {
          violated = true;
          p4.worst_delta = std::max(p4.worst_delta, prev - s);
        }
        prev = s;
      }
      if (violated) ++p4.violations;
    }
    report.properties[3] = finish(p4, false);
  }

  // Property 5 (partial): a misplaced copy of the reference insertion must
  // beat a wrong insertion of the same shape.
  {
    PropertyResult p5;
    Rng rng(derive_seed(seed, "p5"));
    for (int t = 0; t < trials; ++t) {
      const auto g1 = role_tokens(rng, 0, 8);
      const auto g2 = role_tokens(rng, 1, 8);
      const auto g3 = role_tokens(rng, 2, 8);
      const auto ins = role_tokens(rng, 3, 6);
      const auto wrong = role_tokens(rng, 4, 6);
      check_disjoint({g1, g2, g3, ins, wrong});
      const std::string b1 = render_lines(rng, g1);
      const std::string b2 = render_lines(rng, g2);
      const std::string b3 = render_lines(rng, g3);
      const std::string tdoc = render_lines(rng, ins);
      const std::string wdoc = render_lines(rng, wrong);
      const std::string origin = join_docs({b1, b2, b3});
      const std::string reference = join_docs({b1, tdoc, b2, b3});
      const std::string misplaced = join_docs({b1, b2, tdoc, b3});
      const std::string off_target = join_docs({b1, b2, wdoc, b3});
      const double s_mis = run_metric(metric, reference, misplaced, origin);
      const double s_wrong = run_metric(metric, reference, off_target, origin);
      ++p5.trials;
      if (!(s_mis > s_wrong)) {
        ++p5.violations;
        p5.worst_delta = std::max(p5.worst_delta, s_wrong - s_mis);
      }
    }
    report.properties[4] = finish(p5, true);
  }

  return report;
}

std::string report_to_json(const AuditReport& report) {
  std::ostringstream os;
  os << "{\"metric\":\"" << report.metric << "\",\"properties\":[";
  for (std::size_t i = 0; i < report.properties.size(); ++i) {
    const auto& p = report.properties[i];
    if (i) os << ',';
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", p.worst_delta);
    os << "{\"property\":" << (i + 1) << ",\"trials\":" << p.trials
       << ",\"violations\":" << p.violations << ",\"worst_delta\":" << buf
       << ",\"verdict\":\"" << p.verdict << "\"}";
  }
  os << "]}";
  return os.str();
}

std::string report_to_text(const AuditReport& report) {
  std::ostringstream os;
  os << "metric: " << report.metric << '\n';
  for (std::size_t i = 0; i < report.properties.size(); ++i) {
    const auto& p = report.properties[i];
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", p.worst_delta);
    os << "  property " << (i + 1) << ": " << p.verdict << " ("
       << p.violations << "/" << p.trials << " violations, worst delta "
       << buf << ")\n";
  }
  return os.str();
}

}  // namespace revsim
