#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "circbut/circulant.hpp"

namespace circbut {

// Text format for exponent rows:
//   # n=<n> l=<l>
//   e0,e1,...,e{n-1}        (one row per line, decimal exponents in [0,l))
// Round-trips bit-exactly.
struct RowFile {
  int n = 0;
  int l = 1;
  std::vector<std::vector<int>> rows;

  std::vector<ExponentRow> exponent_rows() const;
};

std::string write_row_file(const RowFile& file);
std::string write_row_file(const ExponentRow& row);
RowFile parse_row_file(std::string_view text);

// Complex-valued variant:
//   # n=<n> complex
//   re0,im0,re1,im1,...     (2n decimals per line)
struct ComplexRowFile {
  int n = 0;
  std::vector<std::vector<std::complex<double>>> rows;
};

std::string write_complex_row_file(const ComplexRowFile& file);
ComplexRowFile parse_complex_row_file(std::string_view text);

struct RowFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dispatches on the header: exponent rows parse as-is, complex files must be
// read with parse_complex_row_file.
bool is_complex_row_text(std::string_view text);

}  // namespace circbut
