// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "revsim/align.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "revsim/errors.hpp"

namespace revsim {

namespace {

// Token interning: the DP inner loops compare ints, not strings.
struct Interner {
  std::unordered_map<std::string, std::int32_t> ids;

  std::vector<std::int32_t> intern(const std::vector<std::string>& tokens) {
    std::vector<std::int32_t> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
      auto [it, inserted] =
          ids.emplace(t, static_cast<std::int32_t>(ids.size()));
      (void)inserted;
      out.push_back(it->second);
    }
    return out;
  }
};

void require_same_granularity(const TokenSeq& s, const TokenSeq& t) {
  if (s.granularity != t.granularity)
    throw BadParamsError("LCS operands must share one granularity");
}

}  // namespace

IndexedSubsequence lcs2(const TokenSeq& s, const TokenSeq& t) {
  require_same_granularity(s, t);
  const std::size_t full_n = s.size();
  const std::size_t full_m = t.size();
  IndexedSubsequence result;
  if (full_n == 0 || full_m == 0) return result;

  // TB1 backtracks from the end and always consumes equal trailing tokens
  // diagonally, so the common suffix can be split off up front without
  // changing the result.
  std::size_t suffix = 0;
  while (suffix < full_n && suffix < full_m &&
         s.tokens[full_n - 1 - suffix] == t.tokens[full_m - 1 - suffix])
    ++suffix;
  const std::size_t n = full_n - suffix;
  const std::size_t m = full_m - suffix;

  if (n > 0 && m > 0) {
    Interner pool;
    std::vector<std::int32_t> si, ti;
    si.reserve(n);
    ti.reserve(m);
    {
      auto head_s = std::vector<std::string>(s.tokens.begin(), s.tokens.begin() + n);
      auto head_t = std::vector<std::string>(t.tokens.begin(), t.tokens.begin() + m);
      si = pool.intern(head_s);
      ti = pool.intern(head_t);
    }

    // Values live in two rolling rows; the backtrack runs over a packed
    // 2-bit move table (kDiag/kLeft/kUp), which records exactly the TB1
    // comparisons made while filling.
    constexpr std::uint8_t kDiag = 0, kLeft = 1, kUp = 2;
    const std::size_t stride = m + 1;
    std::vector<std::uint8_t> moves(((n + 1) * stride + 3) / 4, 0);
    auto set_move = [&](std::size_t i, std::size_t j, std::uint8_t mv) {
      const std::size_t cell = i * stride + j;
      moves[cell >> 2] |= mv << ((cell & 3) * 2);
    };
    auto get_move = [&](std::size_t i, std::size_t j) -> std::uint8_t {
      const std::size_t cell = i * stride + j;
      return (moves[cell >> 2] >> ((cell & 3) * 2)) & 3;
    };

    std::vector<std::uint32_t> prev(stride, 0), cur(stride, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      const std::int32_t a = si[i - 1];
      cur[0] = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (a == ti[j - 1]) {
          cur[j] = prev[j - 1] + 1;
          // kDiag is 0; nothing to set
        } else if (cur[j - 1] >= prev[j]) {
          cur[j] = cur[j - 1];
          set_move(i, j, kLeft);  // TB1: advance the second operand first
        } else {
          cur[j] = prev[j];
          set_move(i, j, kUp);
        }
      }
      std::swap(prev, cur);
    }

    std::size_t i = n, j = m;
    while (i > 0 && j > 0) {
      switch (get_move(i, j)) {
        case kDiag:
          result.tokens.push_back(s.tokens[i - 1]);
          result.pos_a.push_back(i - 1);
          result.pos_b.push_back(j - 1);
          --i;
          --j;
          break;
        case kLeft:
          --j;
          break;
        default:
          --i;
          break;
      }
    }
    std::reverse(result.tokens.begin(), result.tokens.end());
    std::reverse(result.pos_a.begin(), result.pos_a.end());
    std::reverse(result.pos_b.begin(), result.pos_b.end());
  }

  for (std::size_t k = 0; k < suffix; ++k) {
    result.tokens.push_back(s.tokens[n + k]);
    result.pos_a.push_back(n + k);
    result.pos_b.push_back(m + k);
  }
  return result;
}

IndexedSubsequence lcs3_exact(const TokenSeq& a, const TokenSeq& b,
                              const TokenSeq& o, std::size_t cap) {
  require_same_granularity(a, b);
  require_same_granularity(a, o);
  const std::size_t n1 = a.size(), n2 = b.size(), n3 = o.size();
  if (n1 > cap || n2 > cap || n3 > cap)
    throw InputTooLargeError("lcs3_exact operand exceeds cap of " +
                             std::to_string(cap) + " tokens");
  IndexedSubsequence result;
  if (n1 == 0 || n2 == 0 || n3 == 0) return result;

  Interner pool;
  const auto ai = pool.intern(a.tokens);
  const auto bi = pool.intern(b.tokens);
  const auto oi = pool.intern(o.tokens);

  const std::size_t s2 = n3 + 1;           // stride for k
  const std::size_t s1 = (n2 + 1) * s2;    // stride for j
  std::vector<std::uint16_t> dp((n1 + 1) * s1, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> std::uint16_t& {
    return dp[i * s1 + j * s2 + k];
  };
  for (std::size_t i = 1; i <= n1; ++i) {
    for (std::size_t j = 1; j <= n2; ++j) {
      const bool ab = ai[i - 1] == bi[j - 1];
      for (std::size_t k = 1; k <= n3; ++k) {
        if (ab && ai[i - 1] == oi[k - 1]) {
          at(i, j, k) = static_cast<std::uint16_t>(at(i - 1, j - 1, k - 1) + 1);
        } else {
          at(i, j, k) = std::max({at(i - 1, j, k), at(i, j - 1, k), at(i, j, k - 1)});
        }
      }
    }
  }
  std::size_t i = n1, j = n2, k = n3;
  while (i > 0 && j > 0 && k > 0) {
    if (ai[i - 1] == bi[j - 1] && ai[i - 1] == oi[k - 1]) {
      result.tokens.push_back(a.tokens[i - 1]);
      result.pos_a.push_back(i - 1);
      result.pos_b.push_back(j - 1);
      result.pos_o.push_back(k - 1);
      --i;
      --j;
      --k;
    } else {
      // TB1 extended: prefer advancing the third pointer, then second.
      const std::uint16_t mk = at(i, j, k - 1);
      const std::uint16_t mj = at(i, j - 1, k);
      const std::uint16_t mi = at(i - 1, j, k);
      if (mk >= mj && mk >= mi)
        --k;
      else if (mj >= mi)
        --j;
      else
        --i;
    }
  }
  std::reverse(result.tokens.begin(), result.tokens.end());
  std::reverse(result.pos_a.begin(), result.pos_a.end());
  std::reverse(result.pos_b.begin(), result.pos_b.end());
  std::reverse(result.pos_o.begin(), result.pos_o.end());
  return result;
}

IndexedSubsequence lcs3_approx(const TokenSeq& a, const TokenSeq& b,
                               const TokenSeq& o) {
  require_same_granularity(a, b);
  require_same_granularity(a, o);
  const IndexedSubsequence oa = lcs2(o, a);  // pos_a in o, pos_b in a
  const IndexedSubsequence ob = lcs2(o, b);  // pos_a in o, pos_b in b

  TokenSeq left{oa.tokens, a.granularity};
  TokenSeq right{ob.tokens, a.granularity};
  const IndexedSubsequence core = lcs2(left, right);

  // Compose the index maps; never re-search tokens, which would be
  // ambiguous under repeats.
  IndexedSubsequence result;
  result.tokens = core.tokens;
  result.pos_a.reserve(core.size());
  result.pos_b.reserve(core.size());
  result.pos_o.reserve(core.size());
  for (std::size_t r = 0; r < core.size(); ++r) {
    const std::size_t via_oa = core.pos_a[r];
    const std::size_t via_ob = core.pos_b[r];
    result.pos_a.push_back(oa.pos_b[via_oa]);
    result.pos_o.push_back(oa.pos_a[via_oa]);
    result.pos_b.push_back(ob.pos_b[via_ob]);
  }
  return result;
}

bool verify_subsequence(const IndexedSubsequence& sub, const TokenSeq& seq,
                        int slot) {
  const std::vector<std::size_t>* pos = nullptr;
  switch (slot) {
    case 0:
      pos = &sub.pos_a;
      break;
    case 1:
      pos = &sub.pos_b;
      break;
    default:
      pos = &sub.pos_o;
      break;
  }
  if (pos->size() != sub.tokens.size()) return false;
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t r = 0; r < pos->size(); ++r) {
    const std::size_t p = (*pos)[r];
    if (!first && p <= prev) return false;
    if (p >= seq.size()) return false;
    if (seq.tokens[p] != sub.tokens[r]) return false;
    prev = p;
    first = false;
  }
  return true;
}

namespace {

std::vector<Run> residue_runs(const TokenSeq& seq,
                              const std::vector<std::size_t>& removed) {
  std::vector<Run> runs;
  std::size_t r = 0;
  Run current;
  bool open = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (r < removed.size() && removed[r] == i) {
      ++r;
      if (open) {
        runs.push_back(std::move(current));
        current = Run{};
        open = false;
      }
      continue;
    }
    if (!open) {
      current.start = i;
      open = true;
    }
    current.tokens.push_back(seq.tokens[i]);
  }
  if (open) runs.push_back(std::move(current));
  return runs;
}

}  // namespace

Excision excise(const TokenSeq& a, const TokenSeq& b, const TokenSeq& o,
                const IndexedSubsequence& common) {
  if (!verify_subsequence(common, a, 0) || !verify_subsequence(common, b, 1) ||
      !verify_subsequence(common, o, 2))
    throw InvalidSubsequenceError(
        "positions do not embed the subsequence into all three operands");
  Excision out;
  out.removed = common;
  out.residue_a = residue_runs(a, common.pos_a);
  out.residue_b = residue_runs(b, common.pos_b);
  out.residue_o = residue_runs(o, common.pos_o);
  return out;
}

AlignmentTable induced_alignment(const TokenSeq& a, const TokenSeq& b,
                                 const TokenSeq& o,
                                 const IndexedSubsequence& common) {
  if (!verify_subsequence(common, a, 0) || !verify_subsequence(common, b, 1) ||
      !verify_subsequence(common, o, 2))
    throw InvalidSubsequenceError(
        "positions do not embed the subsequence into all three operands");
  AlignmentTable table;
  const std::string gap;
  std::size_t ia = 0, ib = 0, io = 0;
  auto emit_block = [&](std::size_t ea, std::size_t eb, std::size_t eo) {
    for (; ia < ea; ++ia)
      table.columns.push_back({a.tokens[ia], gap, gap});
    for (; ib < eb; ++ib)
      table.columns.push_back({gap, b.tokens[ib], gap});
    for (; io < eo; ++io)
      table.columns.push_back({gap, gap, o.tokens[io]});
  };
  for (std::size_t r = 0; r < common.size(); ++r) {
    emit_block(common.pos_a[r], common.pos_b[r], common.pos_o[r]);
    table.columns.push_back(
        {common.tokens[r], common.tokens[r], common.tokens[r]});
    ia = common.pos_a[r] + 1;
    ib = common.pos_b[r] + 1;
    io = common.pos_o[r] + 1;
  }
  emit_block(a.size(), b.size(), o.size());
  return table;
}

bool column_conserved(const std::array<std::string, 3>& col) {
  return col[0] == col[1] && col[1] == col[2];
}

std::vector<DivergentRegion> divergent_regions(const AlignmentTable& table) {
  std::vector<DivergentRegion> regions;
  DivergentRegion current;
  bool open = false;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const auto& col = table.columns[c];
    if (AlignmentTable::is_gap(col[0]) && AlignmentTable::is_gap(col[1]) &&
        AlignmentTable::is_gap(col[2]))
      throw BadParamsError("alignment table has an all-gap column");
    if (column_conserved(table.columns[c])) {
      if (open) {
        regions.push_back(std::move(current));
        current = DivergentRegion{};
        open = false;
      }
      continue;
    }
    if (!open) {
      current.start_column = c;
      open = true;
    }
    current.columns.push_back(table.columns[c]);
  }
  if (open) regions.push_back(std::move(current));
  return regions;
}

}  // namespace revsim
