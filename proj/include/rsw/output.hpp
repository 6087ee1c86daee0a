#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rsw/cases.hpp"
#include "rsw/scheme.hpp"

namespace rsw {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Parses the whole of `text` as a double; throws std::invalid_argument.
double parse_double(std::string_view text);

/// Column-wise contents of a snapshot CSV file.
struct SnapshotTable {
  std::vector<double> x;
  std::vector<double> h;
  std::vector<double> hu;
  std::vector<double> hv;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> z;

  std::size_t rows() const { return x.size(); }
  State state(std::size_t i) const { return {h[i], hu[i], hv[i]}; }
};

inline constexpr std::string_view kSnapshotHeader = "x,h,hu,hv,u,v,z";
inline constexpr std::string_view kDiagnosticsHeader = "t,dt,E_inf,mass";
inline constexpr std::string_view kProbeHeader = "t,h,hu,hv";

void write_snapshot_csv(std::ostream& os, const FieldSnapshot& snapshot);
SnapshotTable read_snapshot_csv(std::istream& is);

void write_diagnostics_csv(std::ostream& os, const std::vector<DiagnosticRow>& rows);
std::vector<DiagnosticRow> read_diagnostics_csv(std::istream& is);

void write_probe_csv(std::ostream& os, const std::vector<ProbeSample>& samples);
std::vector<ProbeSample> read_probe_csv(std::istream& is);

struct ConvergenceRow {
  int n_cells = 0;
  VariableErrors error;
};

/// Columns N,h,rate_h,hu,rate_hu,hv,rate_hv; the rate cells of the first row
/// are empty.
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

}  // namespace rsw
