// SPDX-License-Identifier: Apache-2.0
//
// CSV and plain-text emission of the QM-vs-HV comparison, including the
// disagreement between the closed-form three-qubit intensity expression and
// the circuit simulation.
#pragma once

#include <string>

#include "qdc/experiment.hpp"

namespace qdc {

/// Header: alpha,phi,qm_e0_branch0,hv_e0,abs_diff — one row per (alpha, phi).
std::string format_comparison_csv(const QmHvComparison& cmp);
void write_comparison_csv(const QmHvComparison& cmp, const std::string& path);

/// Human-readable comparison report: per-alpha max |QM - HV|, the
/// alpha-independence of the HV column, and the labeled discrepancy of the
/// closed-form expression at (alpha=0, phi=0, branch 0).
std::string format_comparison_report(const QmHvComparison& cmp);
void write_comparison_report(const QmHvComparison& cmp, const std::string& path);

}  // namespace qdc
