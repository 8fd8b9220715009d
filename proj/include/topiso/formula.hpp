#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace topiso {

struct ElementCount {
  std::string symbol;
  std::uint64_t count;

  friend bool operator==(const ElementCount&, const ElementCount&) = default;
};

/// Element counts in order of first appearance; symbols unique, counts >= 1.
using Composition = std::vector<ElementCount>;

class FormulaError : public std::invalid_argument {
 public:
  FormulaError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Recursive descent over
//   Formula := (Element Count? | '(' Formula ')' Count?)+
// Element symbols are not resolved against any table here.
class FormulaParser {
 public:
  explicit FormulaParser(std::string_view s) : s_(s) {}

  Composition parse() {
    if (s_.empty()) throw FormulaError("empty formula", 0);
    Composition out;
    parse_sequence(out, 1, 0);
    if (pos_ != s_.size()) throw FormulaError("unmatched ')'", pos_);
    return out;
  }

 private:
  static constexpr std::uint64_t kMaxCount = std::numeric_limits<std::uint32_t>::max();

  void parse_sequence(Composition& out, std::uint64_t multiplier, int depth) {
    std::size_t items = 0;
    while (pos_ < s_.size() && s_[pos_] != ')') {
      const char c = s_[pos_];
      if (c == '(') {
        const std::size_t open = pos_++;
        Composition group;
        parse_sequence(group, 1, depth + 1);
        if (pos_ >= s_.size() || s_[pos_] != ')') throw FormulaError("unclosed '('", open);
        ++pos_;
        const std::uint64_t n = parse_count();
        for (const auto& ec : group) add(out, ec.symbol, checked_mul(ec.count, n * multiplier), open);
      } else if (c >= 'A' && c <= 'Z') {
        const std::size_t start = pos_++;
        while (pos_ < s_.size() && pos_ - start < 3 && s_[pos_] >= 'a' && s_[pos_] <= 'z') ++pos_;
        if (pos_ < s_.size() && s_[pos_] >= 'a' && s_[pos_] <= 'z')
          throw FormulaError("element symbol too long", start);
        std::string symbol(s_.substr(start, pos_ - start));
        const std::uint64_t n = parse_count();
        add(out, symbol, checked_mul(n, multiplier), start);
      } else {
        throw FormulaError(std::string("unexpected character '") + c + "'", pos_);
      }
      ++items;
    }
    if (items == 0) throw FormulaError(depth > 0 ? "empty group" : "empty formula", pos_);
  }

  std::uint64_t parse_count() {
    const std::size_t start = pos_;
    std::uint64_t n = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      n = n * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (n > kMaxCount) throw FormulaError("count too large", start);
      ++pos_;
    }
    if (pos_ == start) return 1;
    if (n == 0) throw FormulaError("zero count", start);
    return n;
  }

  std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) const {
    if (b != 0 && a > kMaxCount / b) throw FormulaError("count too large", pos_);
    return a * b;
  }

  void add(Composition& out, const std::string& symbol, std::uint64_t n, std::size_t at) const {
    for (auto& ec : out) {
      if (ec.symbol == symbol) {
        ec.count += n;
        if (ec.count > kMaxCount) throw FormulaError("count too large", at);
        return;
      }
    }
    out.push_back({symbol, n});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses e.g. "C16802H26738N4640O5411S121" or "(CH3)2O". Group counts
/// multiply through; repeated elements merge. Counts are capped at 2^32-1.
inline Composition parse_formula(std::string_view s) { return detail::FormulaParser(s).parse(); }

/// Inverse of parse_formula for already-merged compositions ("H2O").
inline std::string canonical_string(const Composition& c) {
  std::string out;
  for (const auto& ec : c) {
    out += ec.symbol;
    if (ec.count != 1) out += std::to_string(ec.count);
  }
  return out;
}

}  // namespace topiso
