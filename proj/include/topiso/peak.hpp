#pragma once

namespace topiso {

/// An isotopologue (or partial isotopologue) peak: mass in Da and natural
/// log of its probability.
struct Peak {
  double mass;
  double logp;

  friend bool operator==(const Peak&, const Peak&) = default;
};

/// Descending on log-probability.
struct HigherProbability {
  bool operator()(const Peak& a, const Peak& b) const noexcept { return a.logp > b.logp; }
};

}  // namespace topiso
