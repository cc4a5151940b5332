#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "uncert/frames.hpp"

namespace uncert::io {

/// Complex scalar as "re+imi" with both parts in C99 hexadecimal float
/// notation, e.g. "0x1.8p+1-0x1p-2i".  Round-trips to the last bit.
std::string format_complex_hex(std::complex<double> z);

/// Inverse of format_complex_hex.  `where` names the location for errors.
std::complex<double> parse_complex_hex(const std::string& cell, const std::string& where);

/// Pair file layout: first line "d,m", then the m analysis rows (d cells
/// each), then the d synthesis rows (m cells each), row-major.
void write_pair_csv(std::ostream& out, const FramePair& pair);
FramePair read_pair_csv(std::istream& in, const std::string& source);

/// Vector file layout: first line "n", then one row of n cells.
void write_vector_csv(std::ostream& out, const CVec& x);
CVec read_vector_csv(std::istream& in, const std::string& source);

} // namespace uncert::io
