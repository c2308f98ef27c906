#include "tomolab/cli/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace tomolab::cli {

namespace {

std::ofstream open_output(const std::string& path) {
  if (path.empty()) {
    throw InvalidInputError("output: no path given (set --out or config output.path)");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InvalidInputError("output: cannot open " + path + " for writing");
  }
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_report_json(const std::string& path,
                       std::span<const InequalityReport> reports) {
  std::ofstream out = open_output(path);
  out << "{\n  \"schema_version\": 1,\n  \"reports\": [";
  for (size_t i = 0; i < reports.size(); ++i) {
    const InequalityReport& r = reports[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"name\": \"" << json_escape(r.name) << "\", \"params\": {";
    for (size_t p = 0; p < r.params.size(); ++p) {
      if (p > 0) out << ", ";
      out << '"' << json_escape(r.params[p].first)
          << "\": " << format_g17(r.params[p].second);
    }
    out << "}, \"lhs\": " << format_g17(r.lhs)
        << ", \"rhs\": " << format_g17(r.rhs)
        << ", \"margin\": " << format_g17(r.margin)
        << ", \"satisfied\": " << (r.satisfied ? "true" : "false")
        << ", \"tolerance\": " << format_g17(r.tolerance) << "}";
  }
  out << "\n  ]\n}\n";
}

void write_report_csv(const std::string& path,
                      std::span<const InequalityReport> reports) {
  std::ofstream out = open_output(path);
  std::vector<std::string> param_columns;
  for (const InequalityReport& r : reports) {
    for (const auto& [key, value] : r.params) {
      if (std::find(param_columns.begin(), param_columns.end(), key) ==
          param_columns.end()) {
        param_columns.push_back(key);
      }
    }
  }
  out << "# schema_version=1\nname";
  for (const std::string& key : param_columns) out << ',' << key;
  out << ",lhs,rhs,margin,satisfied,tolerance\n";
  for (const InequalityReport& r : reports) {
    out << r.name;
    for (const std::string& key : param_columns) {
      out << ',';
      const auto it =
          std::find_if(r.params.begin(), r.params.end(),
                       [&](const auto& kv) { return kv.first == key; });
      if (it != r.params.end()) out << format_g17(it->second);
    }
    out << ',' << format_g17(r.lhs) << ',' << format_g17(r.rhs) << ','
        << format_g17(r.margin) << ',' << (r.satisfied ? "true" : "false")
        << ',' << format_g17(r.tolerance) << '\n';
  }
}

void write_reports(const std::string& path, OutputFormat format,
                   std::span<const InequalityReport> reports) {
  if (format == OutputFormat::json) {
    write_report_json(path, reports);
  } else {
    write_report_csv(path, reports);
  }
}

void write_tomogram_csv(const std::string& path, bool symplectic,
                        std::span<const TomogramRow> rows) {
  std::ofstream out = open_output(path);
  out << "# schema_version=1\n" << (symplectic ? "mu,nu,X,w" : "theta,X,w")
      << '\n';
  for (const TomogramRow& row : rows) {
    for (double f : row.frame) out << format_g17(f) << ',';
    out << format_g17(row.x) << ',' << format_g17(row.w) << '\n';
  }
}

void write_density_matrix_csv(const std::string& path,
                              const DensityMatrix& rho) {
  std::ofstream out = open_output(path);
  out << "# schema_version=1\nx,xp,re,im\n";
  const ModeGrid& grid = rho.grid();
  for (int i = 0; i < grid.size(); ++i) {
    for (int j = 0; j < grid.size(); ++j) {
      out << format_g17(grid.point(i)) << ',' << format_g17(grid.point(j))
          << ',' << format_g17(rho.elements()(i, j).real()) << ','
          << format_g17(rho.elements()(i, j).imag()) << '\n';
    }
  }
}

}  // namespace tomolab::cli
