// topiso: most abundant isotopologue peaks of a chemical formula.
//
//   topiso --formula C16802H26738N4640O5411S121 --k 10000 --sorted
//   topiso --formula Au2Ca10Ga10Pd76 --p 0.1 --time

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli_app.hpp"

int main(int argc, char** argv) {
  using topiso::cli::Format;
  topiso::cli::RunConfig cfg;

  CLI::App app{"Top-k isotopologue peaks (exact mass, natural-log probability)"};
  app.add_option("--formula", cfg.formula, "Molecular formula, e.g. C2H6O or (CH3)2O")->required();
  auto* k_opt = app.add_option("--k", cfg.k, "Number of most abundant peaks");
  auto* p_opt = app.add_option("--p", cfg.p, "Smallest top set with total abundance >= p");
  k_opt->excludes(p_opt);
  app.add_option("--alpha", cfg.alpha, "Layer growth rate (>= 1)")->capture_default_str();
  app.add_option("--isotopes", cfg.isotopes_path, "Isotope table file (<symbol> <mass> <abundance> per line)");
  app.add_flag("--sorted", cfg.sorted, "Sort rows by descending probability");
  app.add_option("--output", cfg.output_path, "Output file (default: standard output)");
  const std::map<std::string, Format> formats{{"tsv", Format::Tsv}, {"csv", Format::Csv}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("tsv|csv [tsv]");
  app.add_flag("--time", cfg.time, "Report selection wall time on standard error");
  app.add_flag("--oracle", cfg.oracle, "Use brute-force enumeration (small compounds only)");
  app.add_flag("--log10", cfg.log10, "Print base-10 log-probabilities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return topiso::cli::kParameterError;
  }

  std::ios::sync_with_stdio(false);
  return topiso::cli::run(cfg, std::cout, std::cerr);
}
