#include "hardylab/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace hardylab {
namespace {

std::string opt_str(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

nlohmann::json opt_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const ReportHeader& header,
                   const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "# hardylab report\n";
  out << "# command=" << header.command << "\n";
  for (const auto& [k, v] : header.params) out << "# " << k << "=" << v << "\n";
  out << "# rel_tol=" << format_double(header.spec.rel_tol)
      << " abs_tol=" << format_double(header.spec.abs_tol)
      << " tail_tol=" << format_double(header.spec.tail_tol)
      << " max_subdivisions=" << header.spec.max_subdivisions << "\n";
  if (header.seed) out << "# seed=" << *header.seed << "\n";
  out << "command,n,p,q,pbar1,pbar2,beta,family_param,numerical_ratio,"
         "closed_form_constant,lower_bound,relative_gap,anchor\n";
  for (const ReportRow& r : rows) {
    out << r.command << ',' << r.n << ',' << opt_str(r.p) << ','
        << opt_str(r.q) << ',' << opt_str(r.pbar1) << ',' << opt_str(r.pbar2)
        << ',' << opt_str(r.beta) << ',' << opt_str(r.family_param) << ','
        << opt_str(r.numerical_ratio) << ','
        << opt_str(r.closed_form_constant) << ',' << opt_str(r.lower_bound)
        << ',' << opt_str(r.relative_gap) << ',' << r.anchor << '\n';
  }
  return out.str();
}

std::string to_json(const ReportHeader& header,
                    const std::vector<ReportRow>& rows) {
  nlohmann::json j;
  j["command"] = header.command;
  j["parameters"] = header.params;
  j["quadrature"] = {{"rel_tol", header.spec.rel_tol},
                     {"abs_tol", header.spec.abs_tol},
                     {"tail_tol", header.spec.tail_tol},
                     {"max_subdivisions", header.spec.max_subdivisions}};
  if (header.seed) j["seed"] = *header.seed;
  j["rows"] = nlohmann::json::array();
  for (const ReportRow& r : rows) {
    nlohmann::json row;
    row["command"] = r.command;
    row["n"] = r.n;
    row["p"] = opt_json(r.p);
    row["q"] = opt_json(r.q);
    row["pbar1"] = opt_json(r.pbar1);
    row["pbar2"] = opt_json(r.pbar2);
    row["beta"] = opt_json(r.beta);
    row["family_param"] = opt_json(r.family_param);
    row["numerical_ratio"] = opt_json(r.numerical_ratio);
    row["closed_form_constant"] = opt_json(r.closed_form_constant);
    row["lower_bound"] = opt_json(r.lower_bound);
    row["relative_gap"] = opt_json(r.relative_gap);
    row["anchor"] = r.anchor;
    j["rows"].push_back(row);
  }
  return j.dump();
}

void write_report(const std::string& path, ReportFormat format,
                  const ReportHeader& header,
                  const std::vector<ReportRow>& rows) {
  const std::string text =
      format == ReportFormat::csv ? to_csv(header, rows) : to_json(header, rows);
  if (path == "-" || path.empty()) {
    std::cout << text;
    if (!std::cout.good()) throw std::runtime_error("write to stdout failed");
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open report file: " + path);
  f << text;
  f.flush();
  if (!f.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace hardylab
