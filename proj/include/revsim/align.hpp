// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef REVSIM_ALIGN_HPP
#define REVSIM_ALIGN_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "revsim/tokenize.hpp"

namespace revsim {

// A common subsequence with its embedding positions. Two-way results fill
// pos_a (first operand) and pos_b (second operand); three-way results fill
// all three slots in (a, b, o) order. Position lists strictly increase and
// read back the subsequence tokens in each indexed operand.
struct IndexedSubsequence {
  std::vector<std::string> tokens;
  std::vector<std::size_t> pos_a;
  std::vector<std::size_t> pos_b;
  std::vector<std::size_t> pos_o;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// Three gap-padded rows of equal length in fixed (a, b, o) order; removing
// gaps from row i recovers operand i, and no column is all gaps. Stored
// column-major; a gap cell is the empty string (tokens are never empty).
struct AlignmentTable {
  std::vector<std::array<std::string, 3>> columns;

  static bool is_gap(const std::string& cell) { return cell.empty(); }
  std::size_t width() const { return columns.size(); }
};

bool column_conserved(const std::array<std::string, 3>& col);

// A maximal cluster of contiguous divergent columns.
struct DivergentRegion {
  std::size_t start_column = 0;
  std::vector<std::array<std::string, 3>> columns;
};

// One maximal contiguous slice of survivors after excision.
struct Run {
  std::size_t start = 0;  // index of the first token in the original sequence
  std::vector<std::string> tokens;
};

// Residue of three operands after removing a shared subsequence, with the
// junction (run) structure preserved per operand.
struct Excision {
  std::vector<Run> residue_a;
  std::vector<Run> residue_b;
  std::vector<Run> residue_o;
  IndexedSubsequence removed;
};

// Longest common subsequence of two sequences by quadratic dynamic
// programming. Ties are broken by rule TB1: backtrack from the end and, on
// equal DP values, advance the second operand's pointer first. The result
// is therefore a deterministic function of the inputs.
IndexedSubsequence lcs2(const TokenSeq& s, const TokenSeq& t);

// True longest common subsequence of three sequences via cubic DP (TB1
// extended: on ties prefer advancing the third, then second, then first
// pointer). Intended as a test oracle and for small inputs; throws
// InputTooLargeError when any operand exceeds `cap` tokens.
IndexedSubsequence lcs3_exact(const TokenSeq& a, const TokenSeq& b,
                              const TokenSeq& o, std::size_t cap = 300);

// Approximate three-way LCS computed as lcs2(lcs2(o,a), lcs2(o,b)), with
// positions composed through the intermediate index maps. Always a common
// subsequence of all three operands, never longer than the exact LCS, and
// quadratic instead of cubic. O-positions are taken through the lcs2(o,a)
// route.
IndexedSubsequence lcs3_approx(const TokenSeq& a, const TokenSeq& b,
                               const TokenSeq& o);

// Removes the tokens of `common` from each operand and groups the
// survivors into maximal contiguous runs. Throws InvalidSubsequenceError
// when the positions do not embed `common` into the operands.
Excision excise(const TokenSeq& a, const TokenSeq& b, const TokenSeq& o,
                const IndexedSubsequence& common);

// Canonical alignment anchored on `common`: every anchor token becomes one
// conserved column; between consecutive anchors the three residue segments
// are laid out block-wise (a-block, then b-block, then o-block), each token
// over gaps in the other rows. The table has exactly |common| conserved
// columns and no all-gap column.
AlignmentTable induced_alignment(const TokenSeq& a, const TokenSeq& b,
                                 const TokenSeq& o,
                                 const IndexedSubsequence& common);

// Maximal clusters of contiguous divergent columns, left to right.
std::vector<DivergentRegion> divergent_regions(const AlignmentTable& table);

// True when `sub` reads back correctly at its recorded positions of `seq`
// using the given slot (0 = pos_a, 1 = pos_b, 2 = pos_o).
bool verify_subsequence(const IndexedSubsequence& sub, const TokenSeq& seq,
                        int slot);

}  // namespace revsim

#endif  // REVSIM_ALIGN_HPP
