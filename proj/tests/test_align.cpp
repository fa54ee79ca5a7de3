// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "revsim/align.hpp"
#include "revsim/errors.hpp"
#include "revsim/rng.hpp"
#include "revsim/tokenize.hpp"

using namespace revsim;

namespace {

TokenSeq chars(const std::string& s) {
  TokenSeq seq;
  seq.granularity = Granularity::Character;
  for (char c : s) seq.tokens.push_back(std::string(1, c));
  return seq;
}

std::string flat(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t;
  return out;
}

// Independent oracle: longest common subsequence length by enumerating
// subsequences of the first operand, longest first. Exponential; inputs
// must stay tiny.
bool embeds(const std::string& sub, const std::string& text) {
  std::size_t i = 0;
  for (char c : sub) {
    i = text.find(c, i);
    if (i == std::string::npos) return false;
    ++i;
  }
  return true;
}

std::size_t brute_lcs_len(const std::string& a, const std::string& b,
                          const std::string* c = nullptr) {
  REQUIRE(a.size() <= 12);
  for (std::size_t len = a.size(); len > 0; --len) {
    // iterate subsets of a's positions with popcount == len
    for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != len) continue;
      std::string sub;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (mask & (1u << i)) sub += a[i];
      if (embeds(sub, b) && (!c || embeds(sub, *c))) return len;
    }
  }
  return 0;
}

TokenSeq random_seq(Rng& rng, std::size_t max_len, int alphabet) {
  TokenSeq seq;
  seq.granularity = Granularity::Character;
  const std::size_t len = rng.below(max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    seq.tokens.push_back(std::string(1, static_cast<char>('a' + rng.below(alphabet))));
  return seq;
}

}  // namespace

TEST_CASE("lcs2 on the worked example strings") {
  const auto result = lcs2(chars("CGTCAA"), chars("CGCACT"));
  CHECK(result.size() == 4);
  CHECK(flat(result.tokens) == "CGCA");  // TB1 trace, frozen
  CHECK(result.pos_a == std::vector<std::size_t>{0, 1, 3, 5});
  CHECK(result.pos_b == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(brute_lcs_len("CGTCAA", "CGCACT") == 4);
}

TEST_CASE("lcs2 identity and disjoint cases") {
  const TokenSeq s = chars("CGTCAA");
  const auto self = lcs2(s, s);
  CHECK(self.tokens == s.tokens);
  CHECK(self.pos_a == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  CHECK(self.pos_b == self.pos_a);

  CHECK(lcs2(chars("abc"), chars("xyz")).empty());
  CHECK(lcs2(chars(""), chars("xyz")).empty());
  CHECK(lcs2(chars("abc"), chars("")).empty());
}

TEST_CASE("lcs2 matches the brute-force length on random inputs") {
  Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    const TokenSeq a = random_seq(rng, 10, 2 + static_cast<int>(rng.below(4)));
    const TokenSeq b = random_seq(rng, 10, 4);
    const auto result = lcs2(a, b);
    CHECK(verify_subsequence(result, a, 0));
    CHECK(verify_subsequence(result, b, 1));
    CHECK(result.size() == brute_lcs_len(flat(a.tokens), flat(b.tokens)));
  }
}

TEST_CASE("lcs2 rejects mixed granularities") {
  TokenSeq lines;
  lines.granularity = Granularity::Line;
  lines.tokens = {"a"};
  CHECK_THROWS_AS(lcs2(lines, chars("a")), BadParamsError);
}

TEST_CASE("lcs3_exact on the worked example") {
  const auto result =
      lcs3_exact(chars("CGTCAA"), chars("CGCACT"), chars("CTGCAATT"));
  CHECK(result.size() == 4);
  CHECK(flat(result.tokens) == "CGCA");
  CHECK(brute_lcs_len("CGTCAA", "CGCACT") == 4);
  const std::string o = "CTGCAATT";
  CHECK(brute_lcs_len("CGTCAA", "CGCACT", &o) == 4);
}

TEST_CASE("lcs3_exact degenerate triples") {
  const TokenSeq s = chars("GATTACA");
  const auto same = lcs3_exact(s, s, s);
  CHECK(same.tokens == s.tokens);
  CHECK(lcs3_exact(chars("ab"), chars("cd"), chars("ef")).empty());
  CHECK(lcs3_exact(chars(""), chars("cd"), chars("ef")).empty());
}

TEST_CASE("lcs3_exact enforces its size cap") {
  TokenSeq big;
  big.granularity = Granularity::Character;
  for (int i = 0; i < 301; ++i) big.tokens.push_back("a");
  CHECK_THROWS_AS(lcs3_exact(big, big, big), InputTooLargeError);
  CHECK_NOTHROW(lcs3_exact(chars("aa"), chars("aa"), chars("aa"), 2));
  CHECK_THROWS_AS(lcs3_exact(chars("aaa"), chars("aa"), chars("aa"), 2),
                  InputTooLargeError);
}

TEST_CASE("lcs3_approx composes the two-stage LCS under TB1") {
  const TokenSeq a = chars("CGTCAA");
  const TokenSeq b = chars("CGCACT");
  const TokenSeq o = chars("CTGCAATT");

  // frozen intermediate traces
  CHECK(flat(lcs2(o, a).tokens) == "CGCAA");
  CHECK(flat(lcs2(o, b).tokens) == "CGCAT");

  const auto result = lcs3_approx(a, b, o);
  CHECK(flat(result.tokens) == "CGCA");
  CHECK(result.size() == 4);  // equals the exact length here
  CHECK(verify_subsequence(result, a, 0));
  CHECK(verify_subsequence(result, b, 1));
  CHECK(verify_subsequence(result, o, 2));
  CHECK(result.pos_a == std::vector<std::size_t>{0, 1, 3, 5});
  CHECK(result.pos_b == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(result.pos_o == std::vector<std::size_t>{0, 2, 3, 5});
}

TEST_CASE("lcs3_approx with equal revisions reduces to lcs2") {
  const TokenSeq a = chars("XAYBZ");
  const TokenSeq o = chars("AQBX");
  const auto direct = lcs2(o, a);
  const auto approx = lcs3_approx(a, a, o);
  CHECK(approx.tokens == direct.tokens);
  CHECK(approx.pos_a == direct.pos_b);
  CHECK(approx.pos_b == direct.pos_b);
  CHECK(approx.pos_o == direct.pos_a);
}

TEST_CASE("lcs3_approx is a common subsequence, never beats the oracle") {
  Rng rng(202);
  for (int t = 0; t < 300; ++t) {
    const int alphabet = 2 + static_cast<int>(rng.below(7));
    const TokenSeq a = random_seq(rng, 14, alphabet);
    const TokenSeq b = random_seq(rng, 14, alphabet);
    const TokenSeq o = random_seq(rng, 14, alphabet);
    const auto approx = lcs3_approx(a, b, o);
    CHECK(verify_subsequence(approx, a, 0));
    CHECK(verify_subsequence(approx, b, 1));
    CHECK(verify_subsequence(approx, o, 2));
    const auto exact = lcs3_exact(a, b, o);
    CHECK(approx.size() <= exact.size());
  }
}

TEST_CASE("excise splits residues into maximal runs") {
  const TokenSeq a = chars("CGTCAA");
  IndexedSubsequence common;
  common.tokens = {"C", "G", "C", "A"};
  common.pos_a = {0, 1, 3, 4};
  common.pos_b = {0, 1, 2, 3};
  common.pos_o = {0, 2, 3, 4};
  const TokenSeq b = chars("CGCACT");
  const TokenSeq o = chars("CTGCAATT");
  const Excision ex = excise(a, b, o, common);

  REQUIRE(ex.residue_a.size() == 2);
  CHECK(ex.residue_a[0].start == 2);
  CHECK(ex.residue_a[0].tokens == std::vector<std::string>{"T"});
  CHECK(ex.residue_a[1].start == 5);
  CHECK(ex.residue_a[1].tokens == std::vector<std::string>{"A"});

  REQUIRE(ex.residue_o.size() == 2);
  CHECK(ex.residue_o[0].tokens == std::vector<std::string>{"T"});
  CHECK(ex.residue_o[1].tokens == std::vector<std::string>{"A", "T", "T"});
  CHECK(ex.residue_o[1].start == 5);
}

TEST_CASE("excise with an empty subsequence keeps one run per operand") {
  const TokenSeq a = chars("AB");
  const TokenSeq b = chars("CD");
  const TokenSeq o = chars("EF");
  const Excision ex = excise(a, b, o, IndexedSubsequence{});
  REQUIRE(ex.residue_a.size() == 1);
  CHECK(ex.residue_a[0].tokens == a.tokens);
  REQUIRE(ex.residue_b.size() == 1);
  REQUIRE(ex.residue_o.size() == 1);
}

TEST_CASE("excise rejects invalid positions") {
  const TokenSeq a = chars("AB");
  IndexedSubsequence bad;
  bad.tokens = {"Z"};
  bad.pos_a = {0};
  bad.pos_b = {0};
  bad.pos_o = {0};
  CHECK_THROWS_AS(excise(a, a, a, bad), InvalidSubsequenceError);

  IndexedSubsequence out_of_range;
  out_of_range.tokens = {"A"};
  out_of_range.pos_a = {5};
  out_of_range.pos_b = {0};
  out_of_range.pos_o = {0};
  CHECK_THROWS_AS(excise(a, a, a, out_of_range), InvalidSubsequenceError);

  IndexedSubsequence not_increasing;
  not_increasing.tokens = {"A", "A"};
  not_increasing.pos_a = {0, 0};
  not_increasing.pos_b = {0, 0};
  not_increasing.pos_o = {0, 0};
  CHECK_THROWS_AS(excise(a, a, a, not_increasing), InvalidSubsequenceError);
}

TEST_CASE("excision conserves token counts") {
  Rng rng(303);
  for (int t = 0; t < 200; ++t) {
    const TokenSeq a = random_seq(rng, 20, 3);
    const TokenSeq b = random_seq(rng, 20, 3);
    const TokenSeq o = random_seq(rng, 20, 3);
    const auto common = lcs3_approx(a, b, o);
    const Excision ex = excise(a, b, o, common);
    auto run_total = [](const std::vector<Run>& runs) {
      std::size_t n = 0;
      for (const auto& r : runs) {
        REQUIRE(!r.tokens.empty());
        n += r.tokens.size();
      }
      return n;
    };
    CHECK(run_total(ex.residue_a) + common.size() == a.size());
    CHECK(run_total(ex.residue_b) + common.size() == b.size());
    CHECK(run_total(ex.residue_o) + common.size() == o.size());
  }
}

TEST_CASE("induced alignment on degenerate anchors") {
  const TokenSeq a = chars("AB");
  IndexedSubsequence all;
  all.tokens = {"A", "B"};
  all.pos_a = {0, 1};
  all.pos_b = {0, 1};
  all.pos_o = {0, 1};
  const AlignmentTable same = induced_alignment(a, a, a, all);
  CHECK(same.width() == 2);
  for (const auto& col : same.columns) CHECK(column_conserved(col));

  const TokenSeq b = chars("CD");
  const TokenSeq o = chars("EFG");
  const AlignmentTable blocks = induced_alignment(a, b, o, IndexedSubsequence{});
  CHECK(blocks.width() == a.size() + b.size() + o.size());
  for (const auto& col : blocks.columns) {
    int non_gaps = 0;
    for (const auto& cell : col)
      if (!AlignmentTable::is_gap(cell)) ++non_gaps;
    CHECK(non_gaps == 1);
  }
}

TEST_CASE("induced alignment anchored on the worked example") {
  const TokenSeq a = chars("CGTCAA");
  const TokenSeq b = chars("CGCACT");
  const TokenSeq o = chars("CTGCAATT");
  const auto common = lcs3_approx(a, b, o);
  const AlignmentTable table = induced_alignment(a, b, o, common);

  std::size_t conserved = 0;
  std::vector<std::string> row_a, row_b, row_o;
  for (const auto& col : table.columns) {
    if (column_conserved(col)) ++conserved;
    if (!AlignmentTable::is_gap(col[0])) row_a.push_back(col[0]);
    if (!AlignmentTable::is_gap(col[1])) row_b.push_back(col[1]);
    if (!AlignmentTable::is_gap(col[2])) row_o.push_back(col[2]);
  }
  CHECK(conserved == 4);  // one per anchor of "CGCA"
  CHECK(row_a == a.tokens);
  CHECK(row_b == b.tokens);
  CHECK(row_o == o.tokens);
}

TEST_CASE("induced alignment satisfies the alignment invariants") {
  Rng rng(404);
  for (int t = 0; t < 200; ++t) {
    const TokenSeq a = random_seq(rng, 15, 3);
    const TokenSeq b = random_seq(rng, 15, 3);
    const TokenSeq o = random_seq(rng, 15, 3);
    const auto common = lcs3_approx(a, b, o);
    const AlignmentTable table = induced_alignment(a, b, o, common);

    std::vector<std::string> row_a, row_b, row_o;
    std::size_t conserved = 0;
    for (const auto& col : table.columns) {
      CHECK(!(AlignmentTable::is_gap(col[0]) && AlignmentTable::is_gap(col[1]) &&
              AlignmentTable::is_gap(col[2])));
      if (column_conserved(col)) ++conserved;
      if (!AlignmentTable::is_gap(col[0])) row_a.push_back(col[0]);
      if (!AlignmentTable::is_gap(col[1])) row_b.push_back(col[1]);
      if (!AlignmentTable::is_gap(col[2])) row_o.push_back(col[2]);
    }
    CHECK(row_a == a.tokens);  // ungapping recovers the operands
    CHECK(row_b == b.tokens);
    CHECK(row_o == o.tokens);
    CHECK(conserved == common.size());
  }
}

namespace {

// The printed alignment of the worked example: 9 columns, rows (a, b, o),
// conserved columns 1, 5 and 6 (1-indexed).
AlignmentTable example_table() {
  AlignmentTable t;
  const std::string g;  // gap
  t.columns = {
      {"C", "C", "C"}, {"G", g, g},     {"T", g, "T"},
      {g, "G", "G"},   {"C", "C", "C"}, {"A", "A", "A"},
      {"A", "C", "A"}, {g, "T", "T"},   {g, g, "T"},
  };
  return t;
}

}  // namespace

TEST_CASE("divergent regions of the printed example alignment") {
  const auto regions = divergent_regions(example_table());
  REQUIRE(regions.size() == 2);

  CHECK(regions[0].start_column == 1);
  REQUIRE(regions[0].columns.size() == 3);
  // rows read (a, b, o): a = G T -, b = - - G, o = - T G
  CHECK(regions[0].columns[0] == std::array<std::string, 3>{"G", "", ""});
  CHECK(regions[0].columns[1] == std::array<std::string, 3>{"T", "", "T"});
  CHECK(regions[0].columns[2] == std::array<std::string, 3>{"", "G", "G"});

  CHECK(regions[1].start_column == 6);
  REQUIRE(regions[1].columns.size() == 3);
  // a = A - -, b = C T -, o = A T T
  CHECK(regions[1].columns[0] == std::array<std::string, 3>{"A", "C", "A"});
  CHECK(regions[1].columns[1] == std::array<std::string, 3>{"", "T", "T"});
  CHECK(regions[1].columns[2] == std::array<std::string, 3>{"", "", "T"});
}

TEST_CASE("divergent regions degenerate tables") {
  AlignmentTable conservedOnly;
  conservedOnly.columns = {{"x", "x", "x"}, {"y", "y", "y"}};
  CHECK(divergent_regions(conservedOnly).empty());

  AlignmentTable allGap;
  allGap.columns = {{"x", "x", "x"}, {"", "", ""}};
  CHECK_THROWS_AS(divergent_regions(allGap), BadParamsError);

  AlignmentTable allDivergent;
  allDivergent.columns = {{"x", "y", "x"}, {"z", "z", "w"}, {"a", "", ""}};
  const auto regions = divergent_regions(allDivergent);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].start_column == 0);
  CHECK(regions[0].columns.size() == 3);
}

TEST_CASE("regions of the induced alignment mirror the excision runs") {
  Rng rng(505);
  for (int t = 0; t < 100; ++t) {
    const TokenSeq a = random_seq(rng, 15, 3);
    const TokenSeq b = random_seq(rng, 15, 3);
    const TokenSeq o = random_seq(rng, 15, 3);
    const auto common = lcs3_approx(a, b, o);
    const Excision ex = excise(a, b, o, common);
    const auto regions = divergent_regions(induced_alignment(a, b, o, common));

    auto collect = [&](int row) {
      std::vector<std::vector<std::string>> out;
      for (const auto& region : regions) {
        std::vector<std::string> seg;
        for (const auto& col : region.columns)
          if (!AlignmentTable::is_gap(col[row])) seg.push_back(col[row]);
        if (!seg.empty()) out.push_back(std::move(seg));
      }
      return out;
    };
    auto runs_of = [](const std::vector<Run>& runs) {
      std::vector<std::vector<std::string>> out;
      for (const auto& r : runs) out.push_back(r.tokens);
      return out;
    };
    CHECK(collect(0) == runs_of(ex.residue_a));
    CHECK(collect(1) == runs_of(ex.residue_b));
    CHECK(collect(2) == runs_of(ex.residue_o));
  }
}
