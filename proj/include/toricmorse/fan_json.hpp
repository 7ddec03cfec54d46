#pragma once

#include "toricmorse/fan.hpp"

#include <string>

namespace toricmorse {

/// Raised on malformed fan files (JSON syntax, wrong shapes or types).
/// Distinct from FanValidationError, which reports a structurally valid
/// file describing an invalid fan.
class FanFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/*
 * Fan file format: a JSON object with keys
 *   rank      positive integer n
 *   rays      list of integer vectors of length n
 *   max_cones list of lists of 0-based ray indices, each of size n
 */
Fan parseFanFile(const std::string& path);
Fan parseFanText(const std::string& text, const std::string& origin = "<string>");

}  // namespace toricmorse
