// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef REVSIM_NGRAM_HPP
#define REVSIM_NGRAM_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "revsim/align.hpp"

namespace revsim {

// Multiset of n-grams per order 1..nmax. Bags are built run by run, so an
// n-gram never spans a junction between runs.
class NGramBag {
 public:
  using CountMap = std::unordered_map<std::string, std::int64_t>;

  explicit NGramBag(int nmax = 4);

  int nmax() const { return nmax_; }

  // Adds all within-run n-grams of one token slice.
  void add_run(const std::vector<std::string>& run);

  const CountMap& order(int n) const { return orders_[n - 1]; }
  std::int64_t total(int n) const { return totals_[n - 1]; }
  bool empty_at(int n) const { return totals_[n - 1] == 0; }
  bool empty() const;

  // Multiset operations: min counts / saturating difference.
  friend NGramBag bag_intersect(const NGramBag& x, const NGramBag& y);
  friend NGramBag bag_subtract(const NGramBag& x, const NGramBag& y);

  // Length-prefixed join; unambiguous for arbitrary token bytes.
  static std::string encode(const std::vector<std::string>& tokens,
                            std::size_t begin, int n);

 private:
  int nmax_;
  std::vector<CountMap> orders_;
  std::vector<std::int64_t> totals_;
};

NGramBag ngrams(const std::vector<Run>& runs, int nmax = 4);
NGramBag ngrams(const std::vector<std::string>& tokens, int nmax = 4);

}  // namespace revsim

#endif  // REVSIM_NGRAM_HPP
