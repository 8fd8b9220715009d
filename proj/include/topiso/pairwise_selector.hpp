#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "topiso/loh.hpp"
#include "topiso/peak.hpp"

namespace topiso {

/// Online top-k selection on X+Y, where X and Y are streams of descending
/// layers (anything with `std::vector<Peak> next_layer()`). Log-probabilities
/// add and masses add.
///
/// Layer products (u, v) enter a max-heap keyed by their best corner
/// X[u].max + Y[v].max. Popping the best corner materializes all |X[u]||Y[v]|
/// sums as candidates and re-inserts the product keyed by its worst corner
/// X[u].min + Y[v].min. Popping the worst corner makes the product's values
/// "guaranteed": no unpopped value can beat them. Once the guaranteed count
/// reaches the cumulative number requested, the candidate buffer holds the
/// answer and a linear-time partition extracts it. Heap and buffer persist
/// between layers, so successive calls continue where the last one stopped.
///
/// Successors of (u, v) are (u, v+1) always and (u+1, v) only when v = 0,
/// which covers the grid with every product entering the heap once.
template <class Stream>
class PairwiseSelector {
 public:
  struct Stats {
    std::uint64_t products_materialized = 0;
    std::uint64_t candidates_materialized = 0;
    std::size_t max_candidates = 0;
    std::uint64_t x_layers_pulled = 0;
    std::uint64_t y_layers_pulled = 0;
    // Pulls made while the other child's boundary product still waited in
    // the heap with a strictly better best key. Stays 0: the heap only ever
    // extends the child whose last layer is the more promising one.
    std::uint64_t out_of_order_pulls = 0;
  };

  PairwiseSelector(std::unique_ptr<Stream> x, std::unique_ptr<Stream> y, LayerSchedule schedule)
      : schedule_(schedule) {
    axes_[0].child = std::move(x);
    axes_[1].child = std::move(y);
    const bool have_x = pull(0);
    const bool have_y = pull(1);
    if (have_x && have_y) push_best(0, 0);
  }

  PairwiseSelector(PairwiseSelector&&) noexcept = default;
  PairwiseSelector& operator=(PairwiseSelector&&) noexcept = default;

  /// Next output layer (unsorted within the layer); short when the product
  /// space runs out, then empty.
  std::vector<Peak> next_layer() {
    std::vector<Peak> out;
    if (heap_.empty() && candidates_.empty()) return out;
    const std::size_t size = schedule_.advance(cursor_);
    const std::uint64_t target =
        size > std::numeric_limits<std::uint64_t>::max() - emitted_ ? std::numeric_limits<std::uint64_t>::max()
                                                                    : emitted_ + size;
    while (guaranteed_ < target && !heap_.empty()) advance();

    const std::size_t take = std::min(size, candidates_.size());
    // Top `take` by logp go to the tail, then get cut off.
    const auto split = candidates_.end() - static_cast<std::ptrdiff_t>(take);
    std::nth_element(candidates_.begin(), split, candidates_.end(),
                     [](const Peak& a, const Peak& b) { return a.logp < b.logp; });
    out.assign(split, candidates_.end());
    candidates_.erase(split, candidates_.end());
    emitted_ += take;
    return out;
  }

  /// One heap pop. Exposed for tests; next_layer drives it.
  void advance() {
    std::pop_heap(heap_.begin(), heap_.end(), HeapOrder{});
    const Product p = heap_.back();
    heap_.pop_back();

    if (p.worst_phase) {
      guaranteed_ += static_cast<std::uint64_t>(axes_[0].layers[p.u].size()) * axes_[1].layers[p.v].size();
      return;
    }

    if (p.v == 0 && p.u + 1 == axes_[0].layers.size()) boundary_pending_[0] = false;
    if (p.u == 0 && p.v + 1 == axes_[1].layers.size()) boundary_pending_[1] = false;

    const auto& xs = axes_[0].layers[p.u];
    const auto& ys = axes_[1].layers[p.v];
    candidates_.reserve(candidates_.size() + xs.size() * ys.size());
    for (const Peak& a : xs)
      for (const Peak& b : ys) candidates_.push_back({a.mass + b.mass, a.logp + b.logp});
    ++stats_.products_materialized;
    stats_.candidates_materialized += xs.size() * ys.size();
    stats_.max_candidates = std::max(stats_.max_candidates, candidates_.size());

    heap_.push_back({axes_[0].min[p.u] + axes_[1].min[p.v], p.u, p.v, true});
    std::push_heap(heap_.begin(), heap_.end(), HeapOrder{});

    if (p.v == 0 && ensure_layer(0, p.u + 1, p.key)) push_best(p.u + 1, p.v);
    if (ensure_layer(1, p.v + 1, p.key)) push_best(p.u, p.v + 1);
  }

  std::uint64_t guaranteed_count() const noexcept { return guaranteed_; }
  std::uint64_t emitted_count() const noexcept { return emitted_; }
  std::size_t candidate_count() const noexcept { return candidates_.size(); }
  std::size_t pending_products() const noexcept { return heap_.size(); }
  const Stats& stats() const noexcept { return stats_; }
  const Stream& x_child() const noexcept { return *axes_[0].child; }
  const Stream& y_child() const noexcept { return *axes_[1].child; }

  /// (u, v, worst_phase) of the heap top, 0-based; for tests.
  struct Top {
    std::uint32_t u, v;
    bool worst_phase;
    double key;
  };
  Top peek() const { return {heap_.front().u, heap_.front().v, heap_.front().worst_phase, heap_.front().key}; }

 private:
  struct Product {
    double key;
    std::uint32_t u;
    std::uint32_t v;
    bool worst_phase;
  };

  struct HeapOrder {
    bool operator()(const Product& a, const Product& b) const noexcept {
      if (a.key != b.key) return a.key < b.key;
      // Equal keys: settle worst corners first so guarantees land early.
      if (a.worst_phase != b.worst_phase) return !a.worst_phase;
      if (a.u != b.u) return a.u > b.u;
      return a.v > b.v;
    }
  };

  struct Axis {
    std::unique_ptr<Stream> child;
    std::vector<std::vector<Peak>> layers;
    std::vector<double> max;
    std::vector<double> min;
    bool exhausted = false;
  };

  bool pull(int axis) {
    Axis& a = axes_[axis];
    if (a.exhausted) return false;
    std::vector<Peak> layer = a.child->next_layer();
    if (layer.empty()) {
      a.exhausted = true;
      return false;
    }
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (const Peak& p : layer) {
      hi = std::max(hi, p.logp);
      lo = std::min(lo, p.logp);
    }
    a.layers.push_back(std::move(layer));
    a.max.push_back(hi);
    a.min.push_back(lo);
    ++(axis == 0 ? stats_.x_layers_pulled : stats_.y_layers_pulled);
    return true;
  }

  // Makes layer `index` of `axis` available, pulling it if needed.
  // `popped_key` is the best key that triggered the request.
  bool ensure_layer(int axis, std::uint32_t index, double popped_key) {
    Axis& a = axes_[axis];
    if (index < a.layers.size()) return true;
    if (a.exhausted) return false;
    const Axis& other = axes_[1 - axis];
    // The other child's boundary product (its last layer against our first)
    // must not be strictly better than the product requesting this pull.
    if (!other.exhausted) {
      const double other_boundary = other.max.back() + a.max.front();
      if (boundary_pending_[1 - axis] && other_boundary > popped_key) ++stats_.out_of_order_pulls;
    }
    return pull(axis);
  }

  void push_best(std::uint32_t u, std::uint32_t v) {
    if (v == 0 && u + 1 == axes_[0].layers.size()) boundary_pending_[0] = true;
    if (u == 0 && v + 1 == axes_[1].layers.size()) boundary_pending_[1] = true;
    heap_.push_back({axes_[0].max[u] + axes_[1].max[v], u, v, false});
    std::push_heap(heap_.begin(), heap_.end(), HeapOrder{});
  }

  LayerSchedule schedule_;
  LayerSchedule::Cursor cursor_;
  Axis axes_[2];
  // Whether (last X layer, 0) / (0, last Y layer) still waits for its best pop.
  bool boundary_pending_[2] = {false, false};
  std::vector<Product> heap_;
  std::vector<Peak> candidates_;
  std::uint64_t guaranteed_ = 0;
  std::uint64_t emitted_ = 0;
  Stats stats_;
};

}  // namespace topiso
