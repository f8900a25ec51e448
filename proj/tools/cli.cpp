#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "binent/approx.hpp"
#include "binent/entropy.hpp"
#include "binent/inverse.hpp"
#include "binent/sweep.hpp"

namespace binent::cli {
namespace {

Unit parse_unit(const std::string& name) {
  return name == "bits" ? Unit::bits : Unit::nats;
}

Method parse_method(const std::string& name) {
  if (name == "exact") return Method::exact;
  if (name == "kc") return Method::kimura_crow;
  return Method::improved;
}

Branch parse_branch(const std::string& name) {
  if (name == "lower") return Branch::lower;
  if (name == "upper") return Branch::upper;
  return Branch::both;
}

void write_table(const Table& table, std::ostream& os) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) os << ',';
    os << table.columns[c];
  }
  os << '\n';
  for (const std::vector<double>& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << format_double(row[c]);
    }
    os << '\n';
  }
}

// CSV goes to the named file when a path is given, otherwise to out.
void emit(const Table& table, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_table(table, out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  write_table(table, file);
  file.flush();
  if (!file) throw std::invalid_argument("failed while writing output file: " + path);
}

Table sweep_table(const SweepConfig& cfg, bool relative,
                  const std::vector<ErrorRow>& rows) {
  Table table;
  table.columns.push_back("h");
  if (cfg.with_kimura_crow) table.columns.push_back("abs_err_kc");
  if (cfg.with_improved) table.columns.push_back("abs_err_improved");
  table.columns.push_back("p_exact_lower");
  if (cfg.with_kimura_crow) table.columns.push_back("p_kc_lower");
  if (cfg.with_improved) table.columns.push_back("p_improved_lower");
  if (relative) {
    if (cfg.with_kimura_crow) table.columns.push_back("rel_err_kc");
    if (cfg.with_improved) table.columns.push_back("rel_err_improved");
  }

  table.rows.reserve(rows.size());
  for (const ErrorRow& row : rows) {
    std::vector<double> out;
    out.reserve(table.columns.size());
    out.push_back(row.h);
    if (cfg.with_kimura_crow) out.push_back(row.abs_err_kc);
    if (cfg.with_improved) out.push_back(row.abs_err_improved);
    out.push_back(row.p_exact_lower);
    if (cfg.with_kimura_crow) out.push_back(row.p_kc_lower);
    if (cfg.with_improved) out.push_back(row.p_improved_lower);
    if (relative) {
      const double denom = std::max(row.p_exact_lower, 1e-300);
      if (cfg.with_kimura_crow) out.push_back(row.abs_err_kc / denom);
      if (cfg.with_improved) out.push_back(row.abs_err_improved / denom);
    }
    table.rows.push_back(std::move(out));
  }
  return table;
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  const auto result =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"binary entropy, its exact inverse, and two closed-form estimates"};
  app.require_subcommand(1);
  // The invert contract uses --h, so no subcommand may own the short -h.
  app.set_help_flag("--help", "print this help message and exit");

  double p_value = 0.0;
  std::string entropy_unit = "nats";
  CLI::App* entropy_cmd = app.add_subcommand("entropy", "binary entropy of a probability");
  entropy_cmd->set_help_flag("--help", "print this help message and exit");
  entropy_cmd->add_option("--p", p_value, "probability in [0, 1]")->required();
  entropy_cmd->add_option("--unit", entropy_unit, "output unit")
      ->check(CLI::IsMember({"nats", "bits"}));

  double h_value = 0.0;
  std::string invert_unit = "nats";
  std::string method_name;
  std::string branch_name = "both";
  double tol = SolverConfig{}.abs_tol_p;
  CLI::App* invert_cmd = app.add_subcommand("invert", "probabilities with a given entropy");
  invert_cmd->set_help_flag("--help", "print this help message and exit");
  invert_cmd->add_option("--h", h_value, "entropy value")->required();
  invert_cmd->add_option("--unit", invert_unit, "unit of h")
      ->check(CLI::IsMember({"nats", "bits"}));
  invert_cmd->add_option("--method", method_name, "inversion method")
      ->required()
      ->check(CLI::IsMember({"exact", "kc", "improved"}));
  invert_cmd->add_option("--branch", branch_name, "which preimage to print")
      ->check(CLI::IsMember({"lower", "upper", "both"}));
  invert_cmd->add_option("--tol", tol, "absolute tolerance in p for the exact method")
      ->check(CLI::PositiveNumber);

  SweepConfig sweep_cfg;
  std::vector<std::string> method_names{"kc", "improved"};
  bool relative = false;
  std::string sweep_out;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "error sweep over an entropy grid, as CSV");
  sweep_cmd->set_help_flag("--help", "print this help message and exit");
  sweep_cmd->add_option("--h-min", sweep_cfg.h_min, "grid start in nats");
  sweep_cmd->add_option("--h-max", sweep_cfg.h_max, "grid end in nats");
  sweep_cmd->add_option("--step", sweep_cfg.step, "grid step in nats");
  sweep_cmd->add_option("--methods", method_names, "estimates to include")
      ->delimiter(',')
      ->check(CLI::IsMember({"kc", "improved"}));
  sweep_cmd->add_flag("--relative", relative, "append relative-error columns");
  sweep_cmd->add_option("--out", sweep_out, "write CSV to this file instead of stdout");

  int which = 0;
  double figure_step = 1e-4;
  std::string figure_out;
  CLI::App* figure_cmd = app.add_subcommand("figure", "branch or error curves, as CSV");
  figure_cmd->set_help_flag("--help", "print this help message and exit");
  figure_cmd->add_option("--which", which, "1 = branch curves, 2 = error curves")
      ->required()
      ->check(CLI::Range(1, 2));
  figure_cmd->add_option("--step", figure_step, "grid step in nats");
  figure_cmd->add_option("--out", figure_out, "write CSV to this file instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("binent");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (entropy_cmd->parsed()) {
      const EntropyValue h = binary_entropy(Probability(p_value), parse_unit(entropy_unit));
      out << format_double(h.value()) << '\n';
    } else if (invert_cmd->parsed()) {
      const EntropyValue h(h_value, parse_unit(invert_unit));
      SolverConfig solver;
      solver.abs_tol_p = tol;
      const InversionResult result = [&] {
        switch (parse_method(method_name)) {
          case Method::exact:
            return invert_exact(h, solver);
          case Method::kimura_crow:
            return invert_kimura_crow(h);
          default:
            return invert_improved(h);
        }
      }();
      const Branch branch = parse_branch(branch_name);
      if (branch == Branch::both)
        out << format_double(result.lower.value()) << ','
            << format_double(result.upper.value()) << '\n';
      else
        out << format_double(result.branch(branch).value()) << '\n';
    } else if (sweep_cmd->parsed()) {
      const auto wants = [&](const char* name) {
        return std::find(method_names.begin(), method_names.end(), name) !=
               method_names.end();
      };
      sweep_cfg.with_kimura_crow = wants("kc");
      sweep_cfg.with_improved = wants("improved");
      const std::vector<ErrorRow> rows = sweep(sweep_cfg);
      emit(sweep_table(sweep_cfg, relative, rows), sweep_out, out);
    } else {
      SweepConfig figure_cfg;
      figure_cfg.step = figure_step;
      emit(figure_data(which, figure_cfg), figure_out, out);
    }
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace binent::cli
