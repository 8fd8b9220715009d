#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace topiso {

/// Layer sizes growing geometrically with rate alpha. Layer t targets
/// alpha^(t-1) values:
///   cumulative(0) = 0
///   cumulative(t) = max(cumulative(t-1) + 1, floor(1 + alpha + ... + alpha^(t-1)))
/// so the first layer always has size 1 and no layer is empty. alpha = 1
/// gives unit layers (a full sort); alpha = 2 gives 1, 2, 4, 8, ...
class LayerSchedule {
 public:
  /// Position within the schedule; each stream producing layers owns one.
  struct Cursor {
    std::size_t layer = 0;       // layers produced so far
    std::size_t cumulative = 0;  // cumulative(layer)
    double geometric = 0.0;      // 1 + alpha + ... + alpha^(layer-1)
  };

  explicit LayerSchedule(double alpha = 1.05) : alpha_(alpha) {
    if (!(alpha >= 1.0) || !std::isfinite(alpha))
      throw std::invalid_argument("layer growth rate alpha must be >= 1");
  }

  double alpha() const noexcept { return alpha_; }

  /// Advances the cursor by one layer and returns that layer's size.
  std::size_t advance(Cursor& c) const {
    c.geometric = c.geometric * alpha_ + 1.0;
    const std::size_t next = next_cumulative(c.geometric, c.cumulative);
    const std::size_t size = next - c.cumulative;
    c.layer += 1;
    c.cumulative = next;
    return size;
  }

  /// Size of layer t (1-based). O(t).
  std::size_t layer_size(std::size_t t) const {
    if (t == 0) throw std::invalid_argument("layer index is 1-based");
    Cursor c;
    std::size_t size = 0;
    for (std::size_t i = 0; i < t; ++i) size = advance(c);
    return size;
  }

  /// cumulative(t), the end offset of layer t. O(t).
  std::size_t cumulative(std::size_t t) const {
    Cursor c;
    for (std::size_t i = 0; i < t; ++i) advance(c);
    return c.cumulative;
  }

  /// End offsets of the layers covering n values; the last may be short.
  std::vector<std::size_t> boundaries(std::size_t n) const {
    std::vector<std::size_t> ends;
    Cursor c;
    while (c.cumulative < n) {
      advance(c);
      ends.push_back(std::min(c.cumulative, n));
    }
    return ends;
  }

 private:
  static std::size_t next_cumulative(double geometric, std::size_t prev) {
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    if (prev == kMax) return kMax;
    const double target = std::floor(geometric);
    std::size_t floored = kMax;
    if (target < 1.8e19) floored = static_cast<std::size_t>(target);
    return std::max(prev + 1, floored);
  }

  double alpha_;
};

/// Values arranged as a descending layer-ordered heap: every key in layer t
/// is >= every key in layer t+1. `ends[t]` is the end offset of layer t.
template <class T>
struct LayeredValues {
  std::vector<T> values;
  std::vector<std::size_t> ends;
  double alpha = 1.0;

  std::size_t layer_count() const noexcept { return ends.size(); }

  std::span<const T> layer(std::size_t t) const {
    const std::size_t begin = t == 0 ? 0 : ends[t - 1];
    return std::span<const T>(values).subspan(begin, ends[t] - begin);
  }
};

namespace detail {

// Places the split points `ends[lo..hi)` inside [first, last) by selecting
// at the middle split and recursing: O(n log L) for L layers.
template <class It, class Compare>
void lohify_range(It base, std::size_t first, std::size_t last, std::span<const std::size_t> ends,
                  Compare comp) {
  if (ends.empty() || last - first < 2) return;
  const std::size_t mid = ends.size() / 2;
  const std::size_t split = ends[mid];
  if (split > first && split < last)
    std::nth_element(base + static_cast<std::ptrdiff_t>(first),
                     base + static_cast<std::ptrdiff_t>(split),
                     base + static_cast<std::ptrdiff_t>(last), comp);
  lohify_range(base, first, split, ends.first(mid), comp);
  lohify_range(base, split, last, ends.subspan(mid + 1), comp);
}

}  // namespace detail

/// Permutes `values` into a descending LOH on `key(value)` with the
/// schedule's layer sizes. Selection is introselect (std::nth_element), so
/// the worst case stays O(n log n).
template <class T, class Key = std::identity>
LayeredValues<T> lohify(std::vector<T> values, const LayerSchedule& schedule, Key key = {}) {
  LayeredValues<T> out;
  out.alpha = schedule.alpha();
  out.ends = schedule.boundaries(values.size());
  auto comp = [&key](const T& a, const T& b) { return std::invoke(key, a) > std::invoke(key, b); };
  if (!out.ends.empty()) {
    std::span<const std::size_t> inner(out.ends.data(), out.ends.size() - 1);
    detail::lohify_range(values.begin(), 0, values.size(), inner, comp);
  }
  out.values = std::move(values);
  return out;
}

/// True iff the layer boundaries follow the schedule (last layer may be
/// short) and min(layer t) >= max(layer t+1) for every t.
template <class T, class Key = std::identity>
bool verify_loh(const LayeredValues<T>& lv, Key key = {}) {
  const LayerSchedule schedule(lv.alpha);
  if (lv.ends != schedule.boundaries(lv.values.size())) return false;
  bool have_prev = false;
  double prev_min = 0.0;
  for (std::size_t t = 0; t < lv.layer_count(); ++t) {
    const auto layer = lv.layer(t);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& v : layer) {
      const double k = static_cast<double>(std::invoke(key, v));
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    if (have_prev && prev_min < hi) return false;
    prev_min = lo;
    have_prev = true;
  }
  return true;
}

}  // namespace topiso
