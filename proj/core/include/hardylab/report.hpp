#ifndef HARDYLAB_REPORT_HPP_
#define HARDYLAB_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/quadrature.hpp"
#include "hardylab/sharpness.hpp"

namespace hardylab {

enum class ReportFormat { csv, json };

// Header block recorded with every report: the command, its parameters, the
// quadrature tolerances and the seed (when a randomized family is involved).
struct ReportHeader {
  std::string command;
  std::map<std::string, std::string> params;
  QuadratureSpec spec;
  std::optional<unsigned> seed;
};

// Doubles serialized with 17 significant digits (round-trip exact).
std::string format_double(double v);

// CSV schema, fixed column order:
// command,n,p,q,pbar1,pbar2,beta,family_param,numerical_ratio,
// closed_form_constant,lower_bound,relative_gap,anchor
std::string to_csv(const ReportHeader& header,
                   const std::vector<ReportRow>& rows);
std::string to_json(const ReportHeader& header,
                    const std::vector<ReportRow>& rows);

// Writes to the path, or to stdout when path is "-".  Throws
// std::runtime_error on I/O failure.
void write_report(const std::string& path, ReportFormat format,
                  const ReportHeader& header,
                  const std::vector<ReportRow>& rows);

}  // namespace hardylab

#endif  // HARDYLAB_REPORT_HPP_
