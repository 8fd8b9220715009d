#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#ifndef NDEBUG
#include <cassert>
#include <set>
#endif

#include "topiso/isotope_data.hpp"
#include "topiso/loh.hpp"
#include "topiso/peak.hpp"

namespace topiso {

/// Per-isotope counts of one element's subisotopologue; sums to the atom count.
using IndexTuple = std::vector<std::uint32_t>;

/// Multinomial over an element's isotopes for a fixed atom count.
struct MultinomialConfig {
  std::uint32_t n = 0;
  std::vector<double> probs;
  std::vector<double> log_probs;
  std::vector<double> masses;
  std::vector<double> log_factorial;  // ln(i!) for i in [0, n]

  MultinomialConfig() = default;

  MultinomialConfig(std::uint32_t count, std::span<const Isotope> isotopes) : n(count) {
    if (isotopes.empty()) throw std::invalid_argument("element has no isotopes");
    for (const auto& iso : isotopes) {
      if (!(iso.abundance > 0.0)) throw std::invalid_argument("isotope abundance must be positive");
      probs.push_back(iso.abundance);
      log_probs.push_back(std::log(iso.abundance));
      masses.push_back(iso.mass);
    }
    log_factorial.resize(static_cast<std::size_t>(n) + 1);
    log_factorial[0] = 0.0;
    for (std::uint32_t i = 1; i <= n; ++i)
      log_factorial[i] = log_factorial[i - 1] + std::log(static_cast<double>(i));
  }

  std::size_t isotope_count() const noexcept { return probs.size(); }
};

/// ln P(tuple) = ln n! - sum ln x_i! + sum x_i ln p_i, summed in ascending i.
inline double log_pmf(const MultinomialConfig& cfg, std::span<const std::uint32_t> tuple) {
  double lp = cfg.log_factorial[cfg.n];
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    lp -= cfg.log_factorial[tuple[i]];
    if (tuple[i] != 0) lp += static_cast<double>(tuple[i]) * cfg.log_probs[i];
  }
  return lp;
}

inline double tuple_mass(const MultinomialConfig& cfg, std::span<const std::uint32_t> tuple) {
  double mass = 0.0;
  for (std::size_t i = 0; i < tuple.size(); ++i) mass += static_cast<double>(tuple[i]) * cfg.masses[i];
  return mass;
}

/// Number of weak compositions C(n+m-1, m-1), saturating at 2^63-1.
inline std::uint64_t weak_composition_count(std::uint64_t n, std::uint64_t m) {
  constexpr std::uint64_t kCap = std::numeric_limits<std::int64_t>::max();
  if (m == 0) return n == 0 ? 1 : 0;
  // C(n+m-1, k) with k = min(m-1, n), built as a running exact product.
  const std::uint64_t k = std::min(m - 1, n);
  const std::uint64_t top = n + m - 1;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (top - k + i) / i;
    if (acc > kCap) return kCap;
  }
  return static_cast<std::uint64_t>(acc);
}

/// Most probable index tuple. Seeds from the binomial modes
/// floor((n+1) p_i), repairs the sum greedily, then hill-climbs over
/// (+1, -1) moves, accepting strict improvements only.
inline IndexTuple find_mode(const MultinomialConfig& cfg) {
  const std::size_t m = cfg.isotope_count();
  IndexTuple x(m);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double seed = std::floor((static_cast<double>(cfg.n) + 1.0) * cfg.probs[i]);
    x[i] = static_cast<std::uint32_t>(std::clamp(seed, 0.0, static_cast<double>(cfg.n)));
    sum += x[i];
  }
  while (sum < cfg.n) {
    std::size_t best = 0;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double gain = cfg.log_probs[i] - std::log(static_cast<double>(x[i]) + 1.0);
      if (gain > best_gain) best_gain = gain, best = i;
    }
    ++x[best];
    ++sum;
  }
  while (sum > cfg.n) {
    std::size_t best = 0;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      const double gain = std::log(static_cast<double>(x[i])) - cfg.log_probs[i];
      if (gain > best_gain) best_gain = gain, best = i;
    }
    --x[best];
    --sum;
  }

  double current = log_pmf(cfg, x);
  for (;;) {
    double best_lp = current;
    std::size_t bi = m, bj = m;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || x[j] == 0) continue;
        ++x[i];
        --x[j];
        const double lp = log_pmf(cfg, x);
        --x[i];
        ++x[j];
        if (lp > best_lp) best_lp = lp, bi = i, bj = j;
      }
    }
    if (bi == m) return x;
    ++x[bi];
    --x[bj];
    current = best_lp;
  }
}

/// Emits the subisotopologues of one element in nonincreasing probability
/// order without ever proposing a tuple twice.
///
/// A heap entry remembers the largest index incremented (`inc`) and the
/// largest index decremented (`dec`) relative to the mode. Popping it
/// proposes +1 at i and -1 at j for every i >= inc, j >= dec, i != j, where
/// entry i is not below its mode value and entry j is not above it. Every
/// non-mode tuple then has exactly one proposer: undo +1 at its largest
/// raised index and -1 at its largest lowered index. The mode enters with
/// inc = dec = 0.
class MultinomialGenerator {
 public:
  struct Stats {
    std::uint64_t tuples_emitted = 0;
    std::uint64_t layers_emitted = 0;
    std::size_t max_heap_size = 0;
  };

  MultinomialGenerator(MultinomialConfig config, LayerSchedule schedule)
      : cfg_(std::move(config)), schedule_(schedule), m_(cfg_.isotope_count()) {
    mode_ = find_mode(cfg_);
    const std::uint32_t slot = allocate();
    std::copy(mode_.begin(), mode_.end(), tuple_at(slot));
    push({log_pmf(cfg_, mode_), slot, 0, 0});
  }

  MultinomialGenerator(std::uint32_t count, std::span<const Isotope> isotopes, LayerSchedule schedule)
      : MultinomialGenerator(MultinomialConfig(count, isotopes), schedule) {}

  MultinomialGenerator(MultinomialGenerator&&) noexcept = default;
  MultinomialGenerator& operator=(MultinomialGenerator&&) noexcept = default;

  const MultinomialConfig& config() const noexcept { return cfg_; }
  const IndexTuple& mode() const noexcept { return mode_; }
  bool exhausted() const noexcept { return heap_.empty(); }
  const Stats& stats() const noexcept { return stats_; }

  std::uint64_t total_tuples() const {
    return weak_composition_count(cfg_.n, m_);
  }

  struct Emission {
    IndexTuple tuple;
    double logp;
  };

  /// Next most probable tuple, or nullopt once all have been emitted.
  std::optional<Emission> next_tuple() {
    if (heap_.empty()) return std::nullopt;
    Emission e;
    pop([&](const std::uint32_t* t, double lp) {
      e.tuple.assign(t, t + m_);
      e.logp = lp;
    });
    return e;
  }

  /// Next layer of peaks per the schedule; short at the end, then empty.
  std::vector<Peak> next_layer() {
    std::vector<Peak> layer;
    if (heap_.empty()) return layer;
    const std::size_t size = schedule_.advance(cursor_);
    layer.reserve(std::min<std::size_t>(size, 1u << 16));
    while (layer.size() < size && !heap_.empty()) {
      pop([&](const std::uint32_t* t, double lp) {
        layer.push_back({tuple_mass(cfg_, std::span<const std::uint32_t>(t, m_)), lp});
      });
    }
    ++stats_.layers_emitted;
    return layer;
  }

 private:
  struct Entry {
    double logp;
    std::uint32_t slot;
    std::uint16_t inc;
    std::uint16_t dec;
  };

  std::uint32_t* tuple_at(std::uint32_t slot) { return arena_.data() + std::size_t{slot} * m_; }
  const std::uint32_t* tuple_at(std::uint32_t slot) const {
    return arena_.data() + std::size_t{slot} * m_;
  }

  std::uint32_t allocate() {
    if (!free_.empty()) {
      const std::uint32_t s = free_.back();
      free_.pop_back();
      return s;
    }
    const auto s = static_cast<std::uint32_t>(arena_.size() / m_);
    arena_.resize(arena_.size() + m_);
    return s;
  }

  // Heap order: higher logp first, then lexicographically smaller tuple.
  bool before(const Entry& a, const Entry& b) const {
    if (a.logp != b.logp) return a.logp > b.logp;
    return std::lexicographical_compare(tuple_at(a.slot), tuple_at(a.slot) + m_, tuple_at(b.slot),
                                        tuple_at(b.slot) + m_);
  }

  void push(const Entry& e) {
#ifndef NDEBUG
    const bool fresh = seen_.emplace(tuple_at(e.slot), tuple_at(e.slot) + m_).second;
    assert(fresh && "index tuple proposed twice");
#endif
    heap_.push_back(e);
    std::push_heap(heap_.begin(), heap_.end(),
                   [this](const Entry& a, const Entry& b) { return before(b, a); });
    stats_.max_heap_size = std::max(stats_.max_heap_size, heap_.size());
  }

  template <class Sink>
  void pop(Sink&& sink) {
    std::pop_heap(heap_.begin(), heap_.end(),
                  [this](const Entry& a, const Entry& b) { return before(b, a); });
    const Entry top = heap_.back();
    heap_.pop_back();

    // Copy out: allocate() below may grow the arena.
    scratch_.assign(tuple_at(top.slot), tuple_at(top.slot) + m_);
    free_.push_back(top.slot);
    sink(scratch_.data(), top.logp);
    ++stats_.tuples_emitted;

    for (std::size_t i = top.inc; i < m_; ++i) {
      if (scratch_[i] < mode_[i]) continue;
      for (std::size_t j = top.dec; j < m_; ++j) {
        if (j == i || scratch_[j] > mode_[j] || scratch_[j] == 0) continue;
        const std::uint32_t slot = allocate();
        std::uint32_t* child = tuple_at(slot);
        std::copy(scratch_.begin(), scratch_.end(), child);
        ++child[i];
        --child[j];
        // Clamped so rounding can never rank a child above its proposer.
        const double lp = std::min(log_pmf(cfg_, std::span<const std::uint32_t>(child, m_)), top.logp);
        push({lp, slot, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)});
      }
    }
  }

  MultinomialConfig cfg_;
  LayerSchedule schedule_;
  LayerSchedule::Cursor cursor_;
  std::size_t m_;
  IndexTuple mode_;
  std::vector<std::uint32_t> arena_;
  std::vector<std::uint32_t> free_;
  std::vector<Entry> heap_;
  IndexTuple scratch_;
  Stats stats_;
#ifndef NDEBUG
  std::set<IndexTuple> seen_;
#endif
};

}  // namespace topiso
