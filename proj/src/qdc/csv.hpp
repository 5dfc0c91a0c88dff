// SPDX-License-Identifier: Apache-2.0
//
// CSV emission for sweep records. Fixed header, 12 significant digits,
// rows sorted by (alpha, phi, branch); exact-mode outputs are byte-stable
// so identical runs produce identical files.
#pragma once

#include <string>
#include <vector>

#include "qdc/experiment.hpp"

namespace qdc {

inline constexpr const char* kRecordCsvHeader =
    "scheme,alpha,phi,branch,mode,e0,e1,joint_e0,branch_prob,shots,stderr0,stderr1";

/// Shortest-round-trip style formatting with 12 significant digits ("%.12g").
std::string format_g12(double value);

/// Render records as CSV text (header + one row per record).
std::string format_records_csv(const std::vector<IntensityRecord>& records);

/// format_records_csv to a file.
void write_records_csv(const std::vector<IntensityRecord>& records, const std::string& path);

/// Parse text produced by format_records_csv back into records.
std::vector<IntensityRecord> parse_records_csv(const std::string& text);

}  // namespace qdc
