#pragma once

#include <complex>
#include <string>

#include "rvac/mat.hpp"

namespace rvac {

// 17-significant-digit decimal form: doubles survive a write/parse round trip.
std::string fmt_g17(double v);

std::string json_escape(const std::string& s);
std::string json_num(double v);  // non-finite values serialize as null
std::string json_bool(bool b);
std::string json_complex(const std::complex<double>& z);  // [re, im]

// Matrix dump: "# matrix <name> dim <n>" (square) or "dim <rows> <cols>",
// then one comma-separated row per line.
std::string dump_matrix(const std::string& name, const Mat& m);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace rvac
