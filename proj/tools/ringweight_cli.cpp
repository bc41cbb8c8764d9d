// Command-line front end: ring structure reports, Mobius tables, weight
// tables, the extension criterion, and the brute-force extension oracle.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ringweight/criterion.hpp"
#include "ringweight/oracle.hpp"
#include "ringweight/reports.hpp"
#include "ringweight/ring.hpp"
#include "ringweight/weight_io.hpp"
#include "ringweight/weights.hpp"

namespace {

using namespace ringweight;

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

struct WeightSource {
  std::string file;
  bool use_hamming = false;
  bool use_homogeneous = false;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--weight", file, "weight file (JSON)");
    cmd->add_flag("--hamming", use_hamming, "use the Hamming weight");
    cmd->add_flag("--homogeneous", use_homogeneous, "use the normalized homogeneous weight");
  }

  std::string name() const {
    if (use_hamming) return "hamming";
    if (use_homogeneous) return "homogeneous";
    return file;
  }

  Weight resolve(const ProductRing& ring) const {
    int sources = (file.empty() ? 0 : 1) + (use_hamming ? 1 : 0) + (use_homogeneous ? 1 : 0);
    if (sources != 1)
      throw std::invalid_argument("exactly one of --weight, --hamming, --homogeneous is required");
    if (use_hamming) return hamming(ring);
    if (use_homogeneous) return homogeneous(ring);
    return load_weight_file(ring, file);
  }
};

Format resolve_format(const std::string& name) {
  auto format = parse_format(name);
  if (!format) throw std::invalid_argument("unknown format '" + name + "'");
  return *format;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + output_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for invariant weights and code equivalence over finite "
               "products of chain rings"};
  app.require_subcommand(1);

  std::string ring_spec;
  std::string format_name;
  std::string output_path;
  WeightSource weight_source;
  size_t oracle_n = 1;
  OracleBudgets budgets;

  std::map<const CLI::App*, std::string> default_formats;
  auto add_common = [&](CLI::App* cmd, const char* default_format) {
    cmd->add_option("--ring", ring_spec, "ring spec, e.g. Z4 or Z2*F2x2")->required();
    cmd->add_option("--format", format_name, std::string("output format (default ") +
                                                 default_format + ")");
    cmd->add_option("--output", output_path, "output path (default standard output)");
    default_formats[cmd] = default_format;
  };

  CLI::App* ring_info = app.add_subcommand("ring-info", "ring structure report");
  add_common(ring_info, "text");
  CLI::App* mobius = app.add_subcommand("mobius", "Mobius table of the ideal lattice");
  add_common(mobius, "csv");
  CLI::App* weight_cmd = app.add_subcommand("weight", "weight table and its dense expansion");
  add_common(weight_cmd, "text");
  weight_source.add_flags(weight_cmd);
  CLI::App* eta_cmd = app.add_subcommand("eta-matrix", "eta-to-epsilon change of basis");
  add_common(eta_cmd, "csv");
  CLI::App* criterion_cmd =
      app.add_subcommand("criterion", "sufficient extension criterion per nonzero ideal");
  add_common(criterion_cmd, "text");
  weight_source.add_flags(criterion_cmd);
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force isometry extension verification");
  add_common(oracle_cmd, "text");
  weight_source.add_flags(oracle_cmd);
  oracle_cmd->add_option("--n", oracle_n, "code length (default 1)");
  oracle_cmd->add_option("--max-codes", budgets.max_codes, "cap on distinct submodules");
  oracle_cmd->add_option("--max-maps", budgets.max_maps,
                         "generator-image assignments per code (codes past it are skipped)");
  oracle_cmd->add_option("--max-space", budgets.max_space, "cap on |R|^n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const CLI::App* active = app.get_subcommands().front();
    if (active->count("--format") == 0) format_name = default_formats.at(active);
    Format format = resolve_format(format_name);
    ProductRing ring = parse_ring(ring_spec);

    if (*ring_info) {
      emit(render_ring_info(ring, format), output_path);
      return kExitOk;
    }
    if (*mobius) {
      emit(render_mobius(ring, format), output_path);
      return kExitOk;
    }
    if (*weight_cmd) {
      Weight w = weight_source.resolve(ring);
      emit(render_weight(w, weight_source.name(), format), output_path);
      return kExitOk;
    }
    if (*eta_cmd) {
      emit(render_eta_matrix(ring, format), output_path);
      return kExitOk;
    }
    if (*criterion_cmd) {
      Weight w = weight_source.resolve(ring);
      CriterionReport report = criterion_check(w);
      emit(render_criterion(report, format), output_path);
      return report.pass ? kExitOk : kExitFindings;
    }
    if (*oracle_cmd) {
      Weight w = weight_source.resolve(ring);
      ExtensionReport report =
          verify_extension_theorem(ring, w, oracle_n, budgets, weight_source.name());
      emit(render_extension(report, format), output_path);
      return report.witnesses.empty() ? kExitOk : kExitFindings;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
