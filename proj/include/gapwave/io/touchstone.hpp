#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "gapwave/tmm.hpp"

namespace gapwave::io {

inline constexpr int kTouchstoneDigits = 9;

/// Version-1 two-port Touchstone, real/imaginary, frequencies in GHz:
///
///   ! <comment lines>
///   # GHz S RI R 1
///   f Re(S11) Im(S11) Re(S21) Im(S21) Re(S12) Im(S12) Re(S22) Im(S22)
///
/// The data are normalized to the TE10 wave impedance of the port guide, so
/// the declared reference is 1. Throws InvalidArgument for an empty or
/// unsorted sweep.
void write_touchstone(std::ostream& out, std::span<const SParamPoint> sweep);
void write_touchstone(const std::filesystem::path& path, std::span<const SParamPoint> sweep);

/// Reads a two-port Touchstone v1 stream. Accepts Hz/kHz/MHz/GHz and RI, MA or
/// DB data. Throws ParseError naming the line.
std::vector<SParamPoint> read_touchstone(std::istream& in);

}  // namespace gapwave::io
