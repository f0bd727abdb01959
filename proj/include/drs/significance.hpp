#pragma once

// Paired approximate randomization test on micro-averaged F.
//
// Each round swaps the two systems' outputs for every document with
// probability 1/2 and recomputes |F(a) - F(b)|. The p-value is
// (rounds at least as extreme as observed + 1) / (R + 1).

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "drs/errors.hpp"
#include "drs/matcher.hpp"

namespace drs {

struct DocCounts {
  std::size_t matched = 0;
  std::size_t sys = 0;
  std::size_t gold = 0;

  static DocCounts of(const MatchResult& r) { return {r.matched, r.sys_total, r.gold_total}; }
};

inline double micro_f1(std::size_t matched, std::size_t sys, std::size_t gold) {
  return matched == 0 ? 0.0 : 2.0 * static_cast<double>(matched) / static_cast<double>(sys + gold);
}

struct SignificanceResult {
  double observed = 0.0;  // |F(a) - F(b)|
  double p_value = 1.0;
  std::size_t at_least_as_extreme = 0;
  std::size_t rounds = 0;
};

inline constexpr double kTieTolerance = 1e-12;

inline SignificanceResult approximate_randomization(const std::vector<DocCounts>& a, const std::vector<DocCounts>& b,
                                                    std::size_t rounds = 1000, std::uint64_t seed = 1) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  if (rounds == 0) throw ConfigError("approximate randomization needs at least one round");
  auto stat = [](const std::vector<DocCounts>& x, const std::vector<DocCounts>& y, const std::vector<bool>* swap) {
    std::size_t mx = 0, sx = 0, gx = 0, my = 0, sy = 0, gy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const bool s = swap != nullptr && (*swap)[i];
      const DocCounts& p = s ? y[i] : x[i];
      const DocCounts& q = s ? x[i] : y[i];
      mx += p.matched, sx += p.sys, gx += p.gold;
      my += q.matched, sy += q.sys, gy += q.gold;
    }
    return std::abs(micro_f1(mx, sx, gx) - micro_f1(my, sy, gy));
  };
  SignificanceResult out;
  out.observed = stat(a, b, nullptr);
  out.rounds = rounds;
  std::mt19937_64 rng(seed);
  std::vector<bool> swap(a.size());
  for (std::size_t r = 0; r < rounds; ++r) {
    for (std::size_t i = 0; i < a.size(); ++i) swap[i] = (rng() & 1U) != 0;
    if (stat(a, b, &swap) >= out.observed - kTieTolerance) ++out.at_least_as_extreme;
  }
  out.p_value = static_cast<double>(out.at_least_as_extreme + 1) / static_cast<double>(rounds + 1);
  return out;
}

inline SignificanceResult approximate_randomization(const std::vector<MatchResult>& a, const std::vector<MatchResult>& b,
                                                    std::size_t rounds = 1000, std::uint64_t seed = 1) {
  std::vector<DocCounts> ca, cb;
  for (const MatchResult& r : a) ca.push_back(DocCounts::of(r));
  for (const MatchResult& r : b) cb.push_back(DocCounts::of(r));
  return approximate_randomization(ca, cb, rounds, seed);
}

}  // namespace drs
