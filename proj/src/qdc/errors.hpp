// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

/// Post-selection on an outcome whose branch probability is numerically zero.
struct ImpossibleBranchError : std::runtime_error {
  explicit ImpossibleBranchError(const std::string& what) : std::runtime_error(what) {}
};

/// A value is outside its allowed domain (bad probability, empty grid, ...).
/// The message names the offending field.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (JSON syntax, wrong type, unknown key).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem read/write failure.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdc
