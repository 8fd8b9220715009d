#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topiso/detail/nist_table.hpp"

namespace topiso {

/// One isotope of an element: exact mass in Da and natural abundance.
struct Isotope {
  double mass;
  double abundance;

  friend bool operator==(const Isotope&, const Isotope&) = default;
};

/// Thrown for malformed isotope tables. `line()` is 1-based, 0 when the
/// problem is not tied to a single line (e.g. a bad abundance sum).
class IsotopeTableError : public std::runtime_error {
 public:
  IsotopeTableError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownElementError : public std::out_of_range {
 public:
  explicit UnknownElementError(const std::string& symbol)
      : std::out_of_range("unknown element '" + symbol + "'"), symbol_(symbol) {}

  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Per-element isotope lists. Immutable once built: masses strictly
/// increasing within an element, abundances positive and summing to 1.
class IsotopeTable {
 public:
  using Entries = std::map<std::string, std::vector<Isotope>, std::less<>>;

  IsotopeTable() = default;

  bool contains(std::string_view symbol) const {
    return entries_.find(symbol) != entries_.end();
  }

  const std::vector<Isotope>& get(std::string_view symbol) const {
    auto it = entries_.find(symbol);
    if (it == entries_.end()) throw UnknownElementError(std::string(symbol));
    return it->second;
  }

  const Entries& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const IsotopeTable&, const IsotopeTable&) = default;

 private:
  friend IsotopeTable parse_isotope_table(std::string_view text);
  Entries entries_;
};

namespace detail {

inline constexpr double kAbundanceSumTolerance = 1e-6;

// Divides by the sum, then lets the largest abundance absorb the rounding
// residue so that the ascending-order sum is exactly 1.
inline void renormalize(std::vector<Isotope>& isotopes) {
  double sum = 0.0;
  for (const auto& iso : isotopes) sum += iso.abundance;
  for (auto& iso : isotopes) iso.abundance /= sum;

  auto largest = std::max_element(
      isotopes.begin(), isotopes.end(),
      [](const Isotope& a, const Isotope& b) { return a.abundance < b.abundance; });
  for (int attempt = 0; attempt < 8; ++attempt) {
    double s = 0.0;
    for (const auto& iso : isotopes) s += iso.abundance;
    if (s == 1.0) return;
    largest->abundance += 1.0 - s;
  }
  // Residue oscillates by one ulp; step toward 1 until the sum lands.
  for (int attempt = 0; attempt < 64; ++attempt) {
    double s = 0.0;
    for (const auto& iso : isotopes) s += iso.abundance;
    if (s == 1.0) return;
    largest->abundance = std::nextafter(largest->abundance, s > 1.0 ? 0.0 : 2.0);
  }
}

inline bool valid_symbol(std::string_view s) {
  if (s.empty() || s.size() > 3) return false;
  if (s[0] < 'A' || s[0] > 'Z') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] < 'a' || s[i] > 'z') return false;
  return true;
}

}  // namespace detail

/// Parses the `<Symbol> <mass> <abundance>` line format. `#` starts a
/// comment; blank lines are ignored. Abundances are renormalized per element
/// after checking that they sum to 1 within 1e-6.
inline IsotopeTable parse_isotope_table(std::string_view text) {
  struct Row {
    Isotope iso;
    std::size_t line;
  };
  std::map<std::string, std::vector<Row>, std::less<>> rows;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string symbol, mass_tok, abundance_tok, extra;
    if (!(in >> symbol)) continue;
    if (!(in >> mass_tok >> abundance_tok) || (in >> extra))
      throw IsotopeTableError("expected '<symbol> <mass> <abundance>'", line_no);
    if (!detail::valid_symbol(symbol))
      throw IsotopeTableError("invalid element symbol '" + symbol + "'", line_no);

    auto to_double = [&](const std::string& tok, const char* what) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || !std::isfinite(v))
        throw IsotopeTableError(std::string("malformed ") + what + " '" + tok + "'", line_no);
      return v;
    };
    const double mass = to_double(mass_tok, "mass");
    const double abundance = to_double(abundance_tok, "abundance");
    if (mass <= 0.0) throw IsotopeTableError("mass must be positive", line_no);
    if (abundance <= 0.0 || abundance > 1.0)
      throw IsotopeTableError("abundance must be in (0, 1]", line_no);
    rows[symbol].push_back({{mass, abundance}, line_no});
  }

  IsotopeTable table;
  for (auto& [symbol, list] : rows) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Row& a, const Row& b) { return a.iso.mass < b.iso.mass; });
    std::vector<Isotope> isotopes;
    double sum = 0.0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0 && list[i].iso.mass == list[i - 1].iso.mass)
        throw IsotopeTableError("duplicate isotope " + symbol + " " + std::to_string(list[i].iso.mass),
                                list[i].line);
      isotopes.push_back(list[i].iso);
      sum += list[i].iso.abundance;
    }
    if (std::abs(sum - 1.0) > detail::kAbundanceSumTolerance) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.9g", sum);
      throw IsotopeTableError("abundances of " + symbol + " sum to " + buf + ", expected 1", 0);
    }
    detail::renormalize(isotopes);
    table.entries_.emplace(symbol, std::move(isotopes));
  }
  return table;
}

/// Writes the table in the text format, 17 significant digits per value.
inline std::string serialize_isotope_table(const IsotopeTable& table) {
  std::string out;
  char buf[128];
  for (const auto& [symbol, isotopes] : table.entries()) {
    for (const auto& iso : isotopes) {
      std::snprintf(buf, sizeof buf, "%s %.17g %.17g\n", symbol.c_str(), iso.mass, iso.abundance);
      out += buf;
    }
  }
  return out;
}

/// The embedded NIST table (84 elements with stable isotopes).
inline const IsotopeTable& load_default_isotopes() {
  static const IsotopeTable table = parse_isotope_table(detail::kNistIsotopeTable);
  return table;
}

inline IsotopeTable load_isotope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IsotopeTableError("cannot open isotope table '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_isotope_table(ss.str());
}

}  // namespace topiso
