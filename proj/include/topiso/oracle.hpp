#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "topiso/formula.hpp"
#include "topiso/isotope_data.hpp"
#include "topiso/isotopologue_tree.hpp"
#include "topiso/multinomial.hpp"
#include "topiso/peak.hpp"

namespace topiso::oracle {

/// Brute-force enumeration refuses compounds above this many isotopologues.
struct OracleLimit {
  std::uint64_t max_isotopologues = 10'000'000;
};

class LimitExceeded : public std::length_error {
 public:
  explicit LimitExceeded(std::uint64_t total)
      : std::length_error("compound has " + std::to_string(total) +
                          " isotopologues, above the brute-force limit") {}
};

/// All weak compositions of n into m parts, in lexicographically descending order.
inline std::vector<IndexTuple> weak_compositions(std::uint32_t n, std::size_t m) {
  std::vector<IndexTuple> out;
  IndexTuple t(m, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == m) {
      t[i] = left;
      out.push_back(t);
      return;
    }
    for (std::uint32_t c = left + 1; c-- > 0;) {
      t[i] = c;
      self(self, i + 1, left - c);
    }
  };
  if (m > 0) rec(rec, 0, n);
  return out;
}

/// log pmf without the factorial table: lgamma for the coefficient and
/// repeated addition of ln p_i.
inline double naive_log_pmf(std::uint32_t n, const std::vector<double>& probs, const IndexTuple& t) {
  double lp = std::lgamma(static_cast<double>(n) + 1.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    lp -= std::lgamma(static_cast<double>(t[i]) + 1.0);
    const double lpi = std::log(probs[i]);
    for (std::uint32_t r = 0; r < t[i]; ++r) lp += lpi;
  }
  return lp;
}

/// Every isotopologue of the compound, unsorted. Per-element log pmf comes
/// from the generator's `log_pmf`, so selection bugs are isolated from pmf bugs.
inline std::vector<Peak> enumerate_all(const Composition& comp, const IsotopeTable& table,
                                       OracleLimit limit = {}) {
  const std::uint64_t total = total_isotopologues(comp, table);
  if (total > limit.max_isotopologues) throw LimitExceeded(total);

  std::vector<Peak> acc{{0.0, 0.0}};
  for (const auto& ec : comp) {
    const MultinomialConfig cfg(static_cast<std::uint32_t>(ec.count), table.get(ec.symbol));
    std::vector<Peak> element;
    for (const auto& t : weak_compositions(cfg.n, cfg.isotope_count()))
      element.push_back({tuple_mass(cfg, t), log_pmf(cfg, t)});
    std::vector<Peak> next;
    next.reserve(acc.size() * element.size());
    for (const Peak& a : acc)
      for (const Peak& b : element) next.push_back({a.mass + b.mass, a.logp + b.logp});
    acc = std::move(next);
  }
  return acc;
}

/// enumerate_all sorted by descending logp, truncated to k.
inline std::vector<Peak> top_k_reference(const Composition& comp, const IsotopeTable& table,
                                         std::uint64_t k, OracleLimit limit = {}) {
  std::vector<Peak> all = enumerate_all(comp, table, limit);
  std::sort(all.begin(), all.end(), HigherProbability{});
  if (k < all.size()) all.resize(static_cast<std::size_t>(k));
  return all;
}

/// Minimal descending prefix with probability sum >= p.
inline std::vector<Peak> cumulative_reference(const Composition& comp, const IsotopeTable& table, double p,
                                              OracleLimit limit = {}) {
  std::vector<Peak> all = enumerate_all(comp, table, limit);
  std::sort(all.begin(), all.end(), HigherProbability{});
  double mass = 0.0;
  std::size_t keep = 0;
  while (keep < all.size() && mass < p) mass += std::exp(all[keep++].logp);
  all.resize(keep);
  return all;
}

}  // namespace topiso::oracle
