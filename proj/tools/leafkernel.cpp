// leafkernel: evaluate leaf functions, print tables and constants, run the
// verification suites.

#include "commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using leaf::cli::OutputSpec;

struct CommonFlags {
  std::string format = "pretty";
  int precision = 6;
  std::string out;

  void attach(CLI::App& cmd) {
    cmd.add_option("--format", format, "csv | json | pretty")->capture_default_str();
    cmd.add_option("--precision", precision, "digits after the decimal point (1-17)")->capture_default_str();
    cmd.add_option("--out", out, "write to PATH instead of standard output");
  }

  OutputSpec spec() const { return {leaf::cli::parse_format(format), precision, out}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"leafkernel: leaf functions sleaf_n / cleaf_n and their identities"};
  app.require_subcommand(1);

  int n = 3;
  std::string fn = "sleaf";
  double value = 0.0;
  double start = 0.0, end = 4.1, step = 0.1;
  std::string suite = "all";

  CommonFlags eval_flags, table_flags, const_flags, verify_flags;

  auto* eval = app.add_subcommand("eval", "evaluate sleaf, cleaf or arcsleaf at one point");
  eval->add_option("--n", n, "family order")->capture_default_str();
  eval->add_option("--fn", fn, "sleaf | cleaf | arcsleaf")->capture_default_str();
  eval->add_option("value", value, "argument")->required();
  eval_flags.attach(*eval);

  auto* table = app.add_subcommand("table", "tabulate sleaf_n and cleaf_n on a grid");
  table->add_option("--n", n, "family order")->capture_default_str();
  table->add_option("--start", start)->capture_default_str();
  table->add_option("--end", end)->capture_default_str();
  table->add_option("--step", step)->capture_default_str();
  table_flags.attach(*table);

  auto* constants = app.add_subcommand("constants", "print pi_n and the periods for n = 1, 2, 3");
  const_flags.attach(*constants);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "identities | symbolic | oracle | all")->capture_default_str();
  verify_flags.attach(*verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return leaf::cli::kExitUsage;
  }

  try {
    const CommonFlags& flags = eval->parsed()        ? eval_flags
                               : table->parsed()     ? table_flags
                               : constants->parsed() ? const_flags
                                                     : verify_flags;
    const OutputSpec spec = flags.spec();

    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;
    if (!spec.destination.empty()) {
      file = std::make_unique<std::ofstream>(spec.destination);
      if (!*file) throw leaf::cli::usage_error("cannot open " + spec.destination);
      os = file.get();
    }

    if (eval->parsed()) return leaf::cli::cmd_eval(n, leaf::cli::parse_function(fn), value, spec, *os);
    if (table->parsed()) return leaf::cli::cmd_table(n, start, end, step, spec, *os);
    if (constants->parsed()) return leaf::cli::cmd_constants(spec, *os);
    return leaf::cli::cmd_verify(leaf::cli::parse_suite(suite), spec, *os);
  } catch (const leaf::cli::usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return leaf::cli::kExitUsage;
  } catch (const leaf::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return leaf::cli::kExitUsage;
  }
}
