// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "revsim/ngram.hpp"

#include <algorithm>

#include "revsim/errors.hpp"

namespace revsim {

NGramBag::NGramBag(int nmax) : nmax_(nmax) {
  if (nmax < 1) throw BadParamsError("n-gram order must be >= 1");
  orders_.resize(nmax);
  totals_.assign(nmax, 0);
}

std::string NGramBag::encode(const std::vector<std::string>& tokens,
                             std::size_t begin, int n) {
  std::string key;
  for (int k = 0; k < n; ++k) {
    const std::string& t = tokens[begin + k];
    key += std::to_string(t.size());
    key += ':';
    key += t;
  }
  return key;
}

void NGramBag::add_run(const std::vector<std::string>& run) {
  const std::size_t m = run.size();
  for (int n = 1; n <= nmax_; ++n) {
    if (m < static_cast<std::size_t>(n)) break;
    const std::size_t count = m - n + 1;
    auto& map = orders_[n - 1];
    for (std::size_t i = 0; i < count; ++i) ++map[encode(run, i, n)];
    totals_[n - 1] += static_cast<std::int64_t>(count);
  }
}

bool NGramBag::empty() const {
  return std::all_of(totals_.begin(), totals_.end(),
                     [](std::int64_t t) { return t == 0; });
}

NGramBag bag_intersect(const NGramBag& x, const NGramBag& y) {
  if (x.nmax_ != y.nmax_) throw BadParamsError("bag order mismatch");
  NGramBag out(x.nmax_);
  for (int n = 1; n <= x.nmax_; ++n) {
    const auto& xm = x.orders_[n - 1];
    const auto& ym = y.orders_[n - 1];
    auto& om = out.orders_[n - 1];
    const auto& small = xm.size() <= ym.size() ? xm : ym;
    const auto& big = xm.size() <= ym.size() ? ym : xm;
    for (const auto& [key, c] : small) {
      auto it = big.find(key);
      if (it == big.end()) continue;
      const std::int64_t v = std::min(c, it->second);
      if (v > 0) {
        om[key] = v;
        out.totals_[n - 1] += v;
      }
    }
  }
  return out;
}

NGramBag bag_subtract(const NGramBag& x, const NGramBag& y) {
  if (x.nmax_ != y.nmax_) throw BadParamsError("bag order mismatch");
  NGramBag out(x.nmax_);
  for (int n = 1; n <= x.nmax_; ++n) {
    const auto& xm = x.orders_[n - 1];
    const auto& ym = y.orders_[n - 1];
    auto& om = out.orders_[n - 1];
    for (const auto& [key, c] : xm) {
      auto it = ym.find(key);
      const std::int64_t v = it == ym.end() ? c : std::max<std::int64_t>(0, c - it->second);
      if (v > 0) {
        om[key] = v;
        out.totals_[n - 1] += v;
      }
    }
  }
  return out;
}

NGramBag ngrams(const std::vector<Run>& runs, int nmax) {
  NGramBag bag(nmax);
  for (const auto& run : runs) bag.add_run(run.tokens);
  return bag;
}

NGramBag ngrams(const std::vector<std::string>& tokens, int nmax) {
  NGramBag bag(nmax);
  bag.add_run(tokens);
  return bag;
}

}  // namespace revsim
