#pragma once

// Subcommands of the leafkernel tool.  Each writes to a stream and returns
// the process exit code: 0 success, 1 verification failure, 2 usage error.

#include <leafkernel/core.hpp>
#include <leafkernel/verify.hpp>

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace leaf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Format { csv, json, pretty };

struct OutputSpec {
  Format format = Format::pretty;
  int precision = 6;
  std::string destination;  // empty: standard output

  bool valid() const { return precision >= 1 && precision <= 17; }
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-point text, never "-0.000…".
inline std::string format_value(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

/// Rounded to `precision` decimals so JSON matches the text formats.
inline double rounded(double v, int precision) {
  double out = std::stod(format_value(v, precision));
  return out == 0.0 ? 0.0 : out;
}

// Decimals needed to print a grid coordinate with the given step.
inline int grid_decimals(double step) {
  for (int d = 0; d <= 12; ++d) {
    const double scaled = step * std::pow(10.0, d);
    if (std::abs(scaled - std::round(scaled)) < 1e-9 * std::max(1.0, scaled)) return d;
  }
  return 12;
}

enum class Function { sleaf, cleaf, arcsleaf };

inline Function parse_function(const std::string& name) {
  if (name == "sleaf") return Function::sleaf;
  if (name == "cleaf") return Function::cleaf;
  if (name == "arcsleaf") return Function::arcsleaf;
  throw usage_error("unknown function '" + name + "' (expected sleaf, cleaf or arcsleaf)");
}

inline Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "pretty") return Format::pretty;
  throw usage_error("unknown format '" + name + "' (expected csv, json or pretty)");
}

inline void require_valid(const OutputSpec& out) {
  if (!out.valid()) throw usage_error("precision must lie in [1, 17]");
}

inline int cmd_eval(int n, Function fn, double value, const OutputSpec& spec, std::ostream& os) {
  require_valid(spec);
  double result = 0.0;
  const char* name = "sleaf";
  switch (fn) {
    case Function::sleaf:
      result = sleaf(n, value).r;
      break;
    case Function::cleaf:
      name = "cleaf";
      result = cleaf(n, value).r;
      break;
    case Function::arcsleaf:
      name = "arcsleaf";
      result = arcsleaf(n, value);
      break;
  }
  switch (spec.format) {
    case Format::pretty:
      os << format_value(result, spec.precision) << '\n';
      break;
    case Format::csv:
      os << "n,fn,x,value\n" << n << ',' << name << ',' << value << ',' << format_value(result, spec.precision) << '\n';
      break;
    case Format::json:
      os << nlohmann::json{{"n", n}, {"fn", name}, {"x", value}, {"value", rounded(result, spec.precision)}}.dump()
         << '\n';
      break;
  }
  return kExitOk;
}

struct TableRow {
  double l;
  double sleaf;
  double cleaf;
};

inline std::vector<TableRow> table_rows(int n, double start, double end, double step) {
  if (!(step > 0.0)) throw usage_error("step must be positive");
  if (!(end >= start)) throw usage_error("end must not precede start");
  const long count = static_cast<long>(std::floor((end - start) / step + 1e-9));
  std::vector<TableRow> rows;
  rows.reserve(static_cast<std::size_t>(count + 1));
  for (long i = 0; i <= count; ++i) {
    const double l = start + static_cast<double>(i) * step;
    rows.push_back({l, sleaf(n, l).r, cleaf(n, l).r});
  }
  return rows;
}

inline int cmd_table(int n, double start, double end, double step, const OutputSpec& spec, std::ostream& os) {
  require_valid(spec);
  const auto rows = table_rows(n, start, end, step);
  const int l_digits = std::max(grid_decimals(step), grid_decimals(start));
  switch (spec.format) {
    case Format::csv:
      os << "l,sleaf,cleaf\n";
      for (const auto& r : rows)
        os << format_value(r.l, l_digits) << ',' << format_value(r.sleaf, spec.precision) << ','
           << format_value(r.cleaf, spec.precision) << '\n';
      break;
    case Format::pretty: {
      const int width = spec.precision + 4;
      char buf[128];
      std::snprintf(buf, sizeof buf, "%8s  %*s  %*s\n", "l", width, "sleaf", width, "cleaf");
      os << buf;
      for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%8s  %*s  %*s\n", format_value(r.l, l_digits).c_str(), width,
                      format_value(r.sleaf, spec.precision).c_str(), width,
                      format_value(r.cleaf, spec.precision).c_str());
        os << buf;
      }
      break;
    }
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"l", rounded(r.l, l_digits)},
                       {"sleaf", rounded(r.sleaf, spec.precision)},
                       {"cleaf", rounded(r.cleaf, spec.precision)}});
      os << arr.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

inline int cmd_constants(const OutputSpec& spec, std::ostream& os) {
  require_valid(spec);
  std::vector<PeriodConstants> all;
  for (int n = 1; n <= 3; ++n) all.push_back(period_constants(n));
  const int p = spec.precision;
  switch (spec.format) {
    case Format::pretty:
      for (const auto& c : all) {
        const int n = c.n.value();
        os << "half_pi(" << n << ") = " << format_value(c.half_pi_n, p) << '\n'
           << "pi(" << n << ") = " << format_value(c.pi_n, p) << '\n'
           << "period(" << n << ") = " << format_value(c.period, p) << '\n';
      }
      break;
    case Format::csv:
      os << "n,half_pi_n,pi_n,period\n";
      for (const auto& c : all)
        os << c.n.value() << ',' << format_value(c.half_pi_n, p) << ',' << format_value(c.pi_n, p) << ','
           << format_value(c.period, p) << '\n';
      break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (const auto& c : all)
        arr.push_back({{"n", c.n.value()},
                       {"half_pi_n", rounded(c.half_pi_n, p)},
                       {"pi_n", rounded(c.pi_n, p)},
                       {"period", rounded(c.period, p)}});
      os << arr.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

inline verify::Suite parse_suite(const std::string& name) {
  if (name == "identities") return verify::Suite::identities;
  if (name == "symbolic") return verify::Suite::symbolic;
  if (name == "oracle") return verify::Suite::oracle;
  if (name == "all") return verify::Suite::all;
  throw usage_error("unknown suite '" + name + "' (expected identities, symbolic, oracle or all)");
}

inline std::string format_residual(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline int cmd_verify(verify::Suite suite, const OutputSpec& spec, std::ostream& os) {
  require_valid(spec);
  const auto checks = verify::run(suite);
  const bool ok = verify::all_passed(checks);
  switch (spec.format) {
    case Format::pretty:
      for (const auto& c : checks) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  max residual " << format_residual(c.max_residual)
           << "  tolerance " << format_residual(c.tolerance) << '\n';
        for (const auto& d : c.details) os << "       " << d << '\n';
      }
      os << (ok ? "all checks passed" : "verification FAILED") << '\n';
      break;
    case Format::csv:
      os << "check,max_residual,tolerance,passed\n";
      for (const auto& c : checks) {
        std::string quoted = c.name;
        for (std::size_t pos = 0; (pos = quoted.find('"', pos)) != std::string::npos; pos += 2) quoted.insert(pos, "\"");
        os << '"' << quoted << "\"," << format_residual(c.max_residual) << ',' << format_residual(c.tolerance) << ','
           << (c.passed ? "true" : "false") << '\n';
      }
      break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (const auto& c : checks)
        arr.push_back({{"check", c.name},
                       {"max_residual", c.max_residual},
                       {"tolerance", c.tolerance},
                       {"passed", c.passed},
                       {"details", c.details}});
      os << nlohmann::json{{"passed", ok}, {"checks", arr}}.dump(2) << '\n';
      break;
    }
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace leaf::cli
