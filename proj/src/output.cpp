#include "rsw/output.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace rsw {

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

/// Reads a header-checked CSV and hands each row of doubles to `sink`.
template <typename Sink>
void read_rows(std::istream& is, std::string_view header, Sink&& sink) {
  std::string line;
  if (!std::getline(is, line) || strip_cr(line) != header) {
    throw std::runtime_error("csv: expected header '" + std::string(header) + "'");
  }
  const std::size_t columns = split_commas(header).size();
  std::vector<double> values(columns);
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string_view text = strip_cr(line);
    if (text.empty()) continue;
    const auto cells = split_commas(text);
    if (cells.size() != columns) {
      throw std::runtime_error("csv: line " + std::to_string(line_no) + " has " +
                               std::to_string(cells.size()) + " fields, expected " +
                               std::to_string(columns));
    }
    for (std::size_t c = 0; c < columns; ++c) {
      try {
        values[c] = parse_double(cells[c]);
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error("csv: line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    sink(values);
  }
}

void write_row(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << format_double(v);
    first = false;
  }
  os << '\n';
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end || text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

void write_snapshot_csv(std::ostream& os, const FieldSnapshot& snapshot) {
  os << kSnapshotHeader << '\n';
  const Mesh& mesh = *snapshot.mesh;
  for (int i = 0; i < snapshot.n_cells(); ++i) {
    const State& w = snapshot.states[i];
    write_row(os, {mesh.center(i), w.h, w.hu, w.hv, w.hu / w.h, w.hv / w.h, mesh.z()[i]});
  }
}

SnapshotTable read_snapshot_csv(std::istream& is) {
  SnapshotTable t;
  read_rows(is, kSnapshotHeader, [&t](const std::vector<double>& r) {
    t.x.push_back(r[0]);
    t.h.push_back(r[1]);
    t.hu.push_back(r[2]);
    t.hv.push_back(r[3]);
    t.u.push_back(r[4]);
    t.v.push_back(r[5]);
    t.z.push_back(r[6]);
  });
  return t;
}

void write_diagnostics_csv(std::ostream& os, const std::vector<DiagnosticRow>& rows) {
  os << kDiagnosticsHeader << '\n';
  for (const auto& r : rows) write_row(os, {r.t, r.dt, r.e_inf, r.mass});
}

std::vector<DiagnosticRow> read_diagnostics_csv(std::istream& is) {
  std::vector<DiagnosticRow> rows;
  read_rows(is, kDiagnosticsHeader, [&rows](const std::vector<double>& r) {
    rows.push_back({rows.size(), r[0], r[1], r[2], r[3]});
  });
  return rows;
}

void write_probe_csv(std::ostream& os, const std::vector<ProbeSample>& samples) {
  os << kProbeHeader << '\n';
  for (const auto& s : samples) write_row(os, {s.t, s.w.h, s.w.hu, s.w.hv});
}

std::vector<ProbeSample> read_probe_csv(std::istream& is) {
  std::vector<ProbeSample> samples;
  read_rows(is, kProbeHeader, [&samples](const std::vector<double>& r) {
    samples.push_back({r[0], {r[1], r[2], r[3]}});
  });
  return samples;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "N,h,rate_h,hu,rate_hu,hv,rate_hv\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const VariableErrors& e = rows[k].error;
    auto rate = [&](double VariableErrors::*field) -> std::string {
      if (k == 0) return "";
      const double prev = rows[k - 1].error.*field;
      const double cur = e.*field;
      if (!(prev > 0.0) || !(cur > 0.0)) return "";
      return format_double(convergence_rates({prev, cur}).front());
    };
    os << rows[k].n_cells << ',' << format_double(e.h) << ',' << rate(&VariableErrors::h) << ','
       << format_double(e.hu) << ',' << rate(&VariableErrors::hu) << ',' << format_double(e.hv)
       << ',' << rate(&VariableErrors::hv) << '\n';
  }
}

}  // namespace rsw
