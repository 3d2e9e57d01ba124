#include "circbut/row_io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>

namespace circbut {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) next = s.size();
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw RowFormatError(std::string("bad integer in ") + what);
  return value;
}

double parse_double(std::string_view s) {
  s = trim(s);
  // std::from_chars<double> is available but strtod keeps this libc++-portable
  std::string buf(s);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty())
    throw RowFormatError("bad decimal in complex row");
  return v;
}

// header: "# n=<n> l=<l>" or "# n=<n> complex"
struct Header {
  int n = 0;
  int l = 0;
  bool complex_kind = false;
};

Header parse_header(std::string_view line) {
  line = trim(line);
  if (line.empty() || line.front() != '#') throw RowFormatError("missing '# n=... ' header");
  line.remove_prefix(1);
  Header h;
  bool have_n = false;
  for (std::string_view tok : split(line, ' ')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    if (tok.starts_with("n=")) {
      h.n = parse_int(tok.substr(2), "header n");
      have_n = true;
    } else if (tok.starts_with("l=")) {
      h.l = parse_int(tok.substr(2), "header l");
    } else if (tok == "complex") {
      h.complex_kind = true;
    } else {
      throw RowFormatError("unrecognized header token: " + std::string(tok));
    }
  }
  if (!have_n || h.n < 1) throw RowFormatError("header must set n >= 1");
  if (!h.complex_kind && h.l < 1) throw RowFormatError("header must set l >= 1 or 'complex'");
  return h;
}

}  // namespace

std::vector<ExponentRow> RowFile::exponent_rows() const {
  std::vector<ExponentRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(n, l, r);
  return out;
}

std::string write_row_file(const RowFile& file) {
  std::string out = "# n=" + std::to_string(file.n) + " l=" + std::to_string(file.l) + "\n";
  for (const auto& row : file.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string write_row_file(const ExponentRow& row) {
  RowFile f;
  f.n = row.n;
  f.l = row.l;
  f.rows.push_back(row.e);
  return write_row_file(f);
}

RowFile parse_row_file(std::string_view text) {
  RowFile file;
  bool have_header = false;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      Header h = parse_header(line);
      if (h.complex_kind) throw RowFormatError("complex row file passed to exponent parser");
      file.n = h.n;
      file.l = h.l;
      have_header = true;
      continue;
    }
    if (!have_header) throw RowFormatError("data line before header");
    std::vector<int> row;
    for (std::string_view tok : split(line, ',')) row.push_back(parse_int(tok, "exponent"));
    if (static_cast<int>(row.size()) != file.n)
      throw RowFormatError("expected " + std::to_string(file.n) + " exponents per line");
    for (int v : row)
      if (v < 0 || v >= file.l) throw RowFormatError("exponent out of [0,l)");
    file.rows.push_back(std::move(row));
  }
  if (!have_header) throw RowFormatError("empty row file");
  return file;
}

std::string write_complex_row_file(const ComplexRowFile& file) {
  std::string out = "# n=" + std::to_string(file.n) + " complex\n";
  char buf[64];
  for (const auto& row : file.rows) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", row[k].real(), row[k].imag());
      if (k) line += ',';
      line += buf;
    }
    out += line;
    out += '\n';
  }
  return out;
}

ComplexRowFile parse_complex_row_file(std::string_view text) {
  ComplexRowFile file;
  bool have_header = false;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      Header h = parse_header(line);
      if (!h.complex_kind) throw RowFormatError("exponent row file passed to complex parser");
      file.n = h.n;
      have_header = true;
      continue;
    }
    if (!have_header) throw RowFormatError("data line before header");
    auto toks = split(line, ',');
    if (static_cast<int>(toks.size()) != 2 * file.n)
      throw RowFormatError("expected 2n decimals per complex line");
    std::vector<std::complex<double>> row(file.n);
    for (int k = 0; k < file.n; ++k)
      row[k] = {parse_double(toks[2 * k]), parse_double(toks[2 * k + 1])};
    file.rows.push_back(std::move(row));
  }
  if (!have_header) throw RowFormatError("empty complex row file");
  return file;
}

bool is_complex_row_text(std::string_view text) {
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') return parse_header(line).complex_kind;
    break;
  }
  return false;
}

}  // namespace circbut
