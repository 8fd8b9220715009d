#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include "topiso/formula.hpp"
#include "topiso/isotope_data.hpp"
#include "topiso/loh.hpp"
#include "topiso/multinomial.hpp"
#include "topiso/pairwise_selector.hpp"
#include "topiso/peak.hpp"

namespace topiso {

/// A node of the merge tree: a per-element generator leaf or a pairwise
/// selector over two subtrees. Both produce descending layers.
class TreeNode {
 public:
  using Inner = PairwiseSelector<TreeNode>;

  explicit TreeNode(MultinomialGenerator leaf) : node_(std::move(leaf)) {}
  explicit TreeNode(Inner inner) : node_(std::move(inner)) {}

  std::vector<Peak> next_layer() {
    return std::visit([](auto& n) { return n.next_layer(); }, node_);
  }

  bool is_leaf() const noexcept { return std::holds_alternative<MultinomialGenerator>(node_); }
  const MultinomialGenerator& leaf() const { return std::get<MultinomialGenerator>(node_); }
  const Inner& inner() const { return std::get<Inner>(node_); }

  std::size_t depth() const {
    if (is_leaf()) return 0;
    return 1 + std::max(inner().x_child().depth(), inner().y_child().depth());
  }

  /// Visits every node, parents before children.
  template <class F>
  void for_each(F&& f) const {
    f(*this);
    if (!is_leaf()) {
      inner().x_child().for_each(f);
      inner().y_child().for_each(f);
    }
  }

 private:
  std::variant<MultinomialGenerator, Inner> node_;
};

/// Total isotopologue count: product of per-element C(n+m-1, m-1), saturating at 2^63-1.
inline std::uint64_t total_isotopologues(const Composition& comp, const IsotopeTable& table) {
  constexpr std::uint64_t kCap = std::numeric_limits<std::int64_t>::max();
  std::uint64_t total = 1;
  for (const auto& ec : comp) {
    const std::uint64_t c = weak_composition_count(ec.count, table.get(ec.symbol).size());
    if (c != 0 && total > kCap / c) return kCap;
    total *= c;
  }
  return total;
}

/// Peaks returned by a selection. `exhausted` is set when fewer peaks than
/// requested exist.
struct Selection {
  std::vector<Peak> peaks;
  bool exhausted = false;
};

/// Balanced binary merge tree over one compound. Leaves are per-element
/// generators in composition order; each level pairs nodes left to right and
/// promotes an odd one out unchanged.
///
/// Selections are online: each call continues after the peaks already
/// returned, so top_k(a) then top_k(b) yields the same multiset as a
/// single top_k(a + b).
class IsotopologueTree {
 public:
  IsotopologueTree(const Composition& comp, const IsotopeTable& table, double alpha = 1.05)
      : schedule_(alpha) {
    if (comp.empty()) throw std::invalid_argument("empty composition");
    std::vector<std::unique_ptr<TreeNode>> level;
    for (const auto& ec : comp) {
      const auto& isotopes = table.get(ec.symbol);
      if (ec.count == 0 || ec.count > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("element count out of range for " + ec.symbol);
      level.push_back(std::make_unique<TreeNode>(
          MultinomialGenerator(static_cast<std::uint32_t>(ec.count), isotopes, schedule_)));
    }
    leaf_count_ = level.size();
    while (level.size() > 1) {
      std::vector<std::unique_ptr<TreeNode>> next;
      for (std::size_t i = 0; i + 1 < level.size(); i += 2)
        next.push_back(std::make_unique<TreeNode>(
            TreeNode::Inner(std::move(level[i]), std::move(level[i + 1]), schedule_)));
      if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
      level = std::move(next);
    }
    root_ = std::move(level.front());
    total_ = total_isotopologues(comp, table);
  }

  const TreeNode& root() const noexcept { return *root_; }
  const LayerSchedule& schedule() const noexcept { return schedule_; }
  std::size_t leaf_count() const noexcept { return leaf_count_; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t emitted() const noexcept { return emitted_; }

  /// Next root layer, raw. Peaks held back by an earlier trimmed selection
  /// come first, as their own layer.
  std::vector<Peak> next_layer() {
    if (!held_.empty()) {
      std::vector<Peak> out = std::move(held_);
      held_.clear();
      emitted_ += out.size();
      return out;
    }
    std::vector<Peak> out = root_->next_layer();
    emitted_ += out.size();
    return out;
  }

  /// The next k most probable peaks, in layer order (unsorted within layers).
  Selection top_k(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    Selection sel;
    while (sel.peaks.size() < k) {
      std::vector<Peak> layer = next_layer();
      if (layer.empty()) {
        sel.exhausted = true;
        break;
      }
      const std::size_t want = static_cast<std::size_t>(k - sel.peaks.size());
      if (layer.size() > want) {
        const auto cut = layer.begin() + static_cast<std::ptrdiff_t>(want);
        std::nth_element(layer.begin(), cut, layer.end(), HigherProbability{});
        hold(cut, layer.end());
        layer.erase(cut, layer.end());
      }
      sel.peaks.insert(sel.peaks.end(), layer.begin(), layer.end());
    }
    return sel;
  }

  /// The smallest next set of most probable peaks whose probabilities sum
  /// to at least p. Only the layer that crosses p gets sorted.
  Selection until_cumulative(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("cumulative target must be in (0, 1)");
    Selection sel;
    double mass = 0.0;
    while (mass < p) {
      std::vector<Peak> layer = next_layer();
      if (layer.empty()) {
        sel.exhausted = true;
        break;
      }
      double layer_mass = 0.0;
      for (const Peak& pk : layer) layer_mass += std::exp(pk.logp);
      if (mass + layer_mass < p) {
        mass += layer_mass;
        sel.peaks.insert(sel.peaks.end(), layer.begin(), layer.end());
        continue;
      }
      std::sort(layer.begin(), layer.end(), HigherProbability{});
      std::size_t keep = 0;
      while (keep < layer.size() && mass < p) mass += std::exp(layer[keep++].logp);
      sel.peaks.insert(sel.peaks.end(), layer.begin(), layer.begin() + static_cast<std::ptrdiff_t>(keep));
      hold(layer.begin() + static_cast<std::ptrdiff_t>(keep), layer.end());
    }
    return sel;
  }

  /// Sum of per-node statistics, for tests and diagnostics.
  struct Stats {
    std::uint64_t leaf_tuples = 0;
    std::uint64_t max_leaf_tuples = 0;
    std::uint64_t child_layer_pulls = 0;
    std::uint64_t candidates_materialized = 0;
    std::uint64_t resident_candidates = 0;  // sum of per-node buffer peaks
    std::uint64_t out_of_order_pulls = 0;
  };

  Stats stats() const {
    Stats s;
    root_->for_each([&s](const TreeNode& n) {
      if (n.is_leaf()) {
        const auto t = n.leaf().stats().tuples_emitted;
        s.leaf_tuples += t;
        s.max_leaf_tuples = std::max(s.max_leaf_tuples, t);
      } else {
        const auto& st = n.inner().stats();
        s.child_layer_pulls += st.x_layers_pulled + st.y_layers_pulled;
        s.candidates_materialized += st.candidates_materialized;
        s.resident_candidates += st.max_candidates;
        s.out_of_order_pulls += st.out_of_order_pulls;
      }
    });
    return s;
  }

 private:
  template <class It>
  void hold(It first, It last) {
    // Held peaks go back to the not-yet-emitted side.
    emitted_ -= static_cast<std::uint64_t>(std::distance(first, last));
    held_.assign(first, last);
  }

  LayerSchedule schedule_;
  std::unique_ptr<TreeNode> root_;
  std::vector<Peak> held_;
  std::size_t leaf_count_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t emitted_ = 0;
};

/// One-shot top-k over a fresh tree.
inline Selection select_top_k(const Composition& comp, const IsotopeTable& table, std::uint64_t k,
                              double alpha = 1.05) {
  IsotopologueTree tree(comp, table, alpha);
  return tree.top_k(k);
}

inline Selection select_until_cumulative(const Composition& comp, const IsotopeTable& table, double p,
                                         double alpha = 1.05) {
  IsotopologueTree tree(comp, table, alpha);
  return tree.until_cumulative(p);
}

}  // namespace topiso
