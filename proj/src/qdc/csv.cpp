// SPDX-License-Identifier: Apache-2.0
#include "qdc/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>

#include "qdc/errors.hpp"

namespace qdc {

std::string format_g12(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::string field(const std::optional<double>& v) { return v ? format_g12(*v) : ""; }

std::string field(const std::optional<long long>& v) { return v ? std::to_string(*v) : ""; }

std::string field(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::vector<const IntensityRecord*> sorted_view(const std::vector<IntensityRecord>& records) {
  std::vector<const IntensityRecord*> view;
  view.reserve(records.size());
  for (const auto& r : records) view.push_back(&r);
  std::stable_sort(view.begin(), view.end(), [](const auto* a, const auto* b) {
    return std::make_tuple(a->alpha, a->phi, a->branch.value_or(-1)) <
           std::make_tuple(b->alpha, b->phi, b->branch.value_or(-1));
  });
  return view;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

double parse_double(const std::string& text, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw ParseError(std::string("csv: bad ") + what + " value '" + text + "'");
  }
  return v;
}

}  // namespace

std::string format_records_csv(const std::vector<IntensityRecord>& records) {
  std::ostringstream out;
  out << kRecordCsvHeader << '\n';
  for (const IntensityRecord* r : sorted_view(records)) {
    out << scheme_name(r->scheme) << ',' << format_g12(r->alpha) << ',' << format_g12(r->phi)
        << ',' << field(r->branch) << ',' << mode_name(r->mode) << ',' << format_g12(r->e0)
        << ',' << format_g12(r->e1) << ',' << field(r->joint_e0) << ','
        << field(r->branch_prob) << ',' << field(r->shots_used) << ',' << field(r->stderr0)
        << ',' << field(r->stderr1) << '\n';
  }
  return out.str();
}

void write_records_csv(const std::vector<IntensityRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << format_records_csv(records);
  if (!out.flush()) throw IoError("write failed: " + path);
}

std::vector<IntensityRecord> parse_records_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("csv: empty document");
  if (line == std::string(kRecordCsvHeader) + "\r") line.pop_back();
  if (line != kRecordCsvHeader) throw ParseError("csv: unexpected header '" + line + "'");

  std::vector<IntensityRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 12) {
      throw ParseError("csv line " + std::to_string(line_no) + ": expected 12 fields, got " +
                       std::to_string(fields.size()));
    }
    IntensityRecord r;
    const auto scheme = scheme_from_name(fields[0]);
    if (!scheme) throw ParseError("csv line " + std::to_string(line_no) + ": bad scheme");
    r.scheme = *scheme;
    r.alpha = parse_double(fields[1], "alpha");
    r.phi = parse_double(fields[2], "phi");
    if (!fields[3].empty()) r.branch = static_cast<int>(parse_double(fields[3], "branch"));
    const auto mode = mode_from_name(fields[4]);
    if (!mode) throw ParseError("csv line " + std::to_string(line_no) + ": bad mode");
    r.mode = *mode;
    r.e0 = parse_double(fields[5], "e0");
    r.e1 = parse_double(fields[6], "e1");
    if (!fields[7].empty()) r.joint_e0 = parse_double(fields[7], "joint_e0");
    if (!fields[8].empty()) r.branch_prob = parse_double(fields[8], "branch_prob");
    if (!fields[9].empty()) r.shots_used = std::stoll(fields[9]);
    if (!fields[10].empty()) r.stderr0 = parse_double(fields[10], "stderr0");
    if (!fields[11].empty()) r.stderr1 = parse_double(fields[11], "stderr1");
    records.push_back(r);
  }
  return records;
}

}  // namespace qdc
