#pragma once

#include <string>

#include "gapwave/design.hpp"
#include "gapwave/io/compare.hpp"

namespace gapwave::io {

/// JSON documents emitted by the CLI; mm / GHz / degrees at the boundary.
/// Output is pretty-printed with two-space indentation and keys in a fixed
/// order, so identical inputs give identical bytes.
std::string design_report_json(const DesignResult& result, const DesignTargets& targets);
std::string comparison_report_json(const ComparisonReport& report);

}  // namespace gapwave::io
