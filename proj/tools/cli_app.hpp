#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "topiso/oracle.hpp"
#include "topiso/topiso.hpp"

namespace topiso::cli {

enum ExitCode : int {
  kOk = 0,
  kFormulaError = 2,
  kTableError = 3,
  kParameterError = 4,
};

enum class Format { Tsv, Csv };

struct RunConfig {
  std::string formula;
  std::optional<std::uint64_t> k;
  std::optional<double> p;
  double alpha = 1.05;
  std::optional<std::string> isotopes_path;
  bool sorted = false;
  std::optional<std::string> output_path;
  Format format = Format::Tsv;
  bool time = false;
  bool oracle = false;
  bool log10 = false;
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_peaks(std::ostream& out, const std::vector<Peak>& peaks, Format format, bool log10) {
  const char sep = format == Format::Tsv ? '\t' : ',';
  out << "mass" << sep << (log10 ? "log10_prob" : "log_prob") << sep << "prob\n";
  const double to_log10 = 1.0 / std::log(10.0);
  std::string line;
  for (const Peak& p : peaks) {
    line = format_double(p.mass);
    line += sep;
    line += format_double(log10 ? p.logp * to_log10 : p.logp);
    line += sep;
    line += format_double(std::exp(p.logp));
    line += '\n';
    out << line;
  }
}

/// Runs one selection. Diagnostics are single lines on `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.k.has_value() == cfg.p.has_value()) {
    err << "error: exactly one of --k or --p is required\n";
    return kParameterError;
  }
  if (cfg.k && *cfg.k == 0) {
    err << "error: --k must be positive\n";
    return kParameterError;
  }
  if (cfg.p && !(*cfg.p > 0.0 && *cfg.p < 1.0)) {
    err << "error: --p must be in (0, 1)\n";
    return kParameterError;
  }
  if (!(cfg.alpha >= 1.0) || !std::isfinite(cfg.alpha)) {
    err << "error: --alpha must be >= 1\n";
    return kParameterError;
  }

  Composition comp;
  try {
    comp = parse_formula(cfg.formula);
  } catch (const FormulaError& e) {
    err << "error: bad formula '" << cfg.formula << "': " << e.what() << '\n';
    return kFormulaError;
  }

  IsotopeTable loaded;
  const IsotopeTable* table = &load_default_isotopes();
  try {
    if (cfg.isotopes_path) {
      loaded = load_isotope_file(*cfg.isotopes_path);
      table = &loaded;
    }
    for (const auto& ec : comp) table->get(ec.symbol);
  } catch (const IsotopeTableError& e) {
    err << "error: isotope table: " << e.what() << '\n';
    return kTableError;
  } catch (const UnknownElementError& e) {
    err << "error: " << e.what() << '\n';
    return kTableError;
  }

  std::vector<Peak> peaks;
  bool exhausted = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (cfg.oracle) {
      peaks = cfg.k ? oracle::top_k_reference(comp, *table, *cfg.k)
                    : oracle::cumulative_reference(comp, *table, *cfg.p);
      exhausted = cfg.k && peaks.size() < *cfg.k;
    } else {
      IsotopologueTree tree(comp, *table, cfg.alpha);
      Selection sel = cfg.k ? tree.top_k(*cfg.k) : tree.until_cumulative(*cfg.p);
      peaks = std::move(sel.peaks);
      exhausted = sel.exhausted;
    }
  } catch (const oracle::LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (exhausted && cfg.k)
    err << "warning: only " << peaks.size() << " isotopologues exist; fewer than k = " << *cfg.k << '\n';

  if (cfg.sorted)
    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
      if (a.logp != b.logp) return a.logp > b.logp;
      return a.mass < b.mass;
    });

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output '" << *cfg.output_path << "'\n";
      return kParameterError;
    }
    write_peaks(file, peaks, cfg.format, cfg.log10);
  } else {
    write_peaks(out, peaks, cfg.format, cfg.log10);
  }

  if (cfg.time) err << "selection_seconds\t" << format_double(seconds) << '\n';
  return kOk;
}

}  // namespace topiso::cli
