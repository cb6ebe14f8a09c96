// Copyright 2026 The enwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csv_format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "enwit/errors.hpp"

namespace enwit::cli {

std::string format_double(double value, int max_digits) {
  if (value == 0.0) return "0";
  char buf[64];
  for (int p = 1; p <= max_digits; ++p) {
    const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                   std::chars_format::general, p);
    double back = 0.0;
    std::from_chars(buf, res.ptr, back);
    if (back == value || p == max_digits) return std::string(buf, res.ptr);
  }
  return std::string(buf);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& rows,
                     int digits) {
  out << kSweepCsvHeader << '\n';
  for (const SweepCell& c : rows) {
    const BoundReport& r = c.report;
    out << format_double(c.field_b, digits) << ','
        << format_double(c.temperature, digits) << ','
        << format_double(r.mean_energy, digits) << ','
        << format_double(r.esep, digits) << ','
        << format_double(r.normalizer, digits) << ','
        << format_double(r.bound, digits) << ','
        << format_double(r.clipped(), digits) << ','
        << (r.detected ? "true" : "false") << '\n';
  }
}

namespace {

double parse_field(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("sweep csv line " + std::to_string(line_no) +
                          ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<SweepCsvRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw InvalidArgument("sweep csv: missing or unexpected header");
  }
  std::vector<SweepCsvRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 8) {
      throw InvalidArgument("sweep csv line " + std::to_string(line_no) +
                            ": expected 8 fields");
    }
    SweepCsvRow r;
    r.field_b = parse_field(fields[0], line_no);
    r.temperature = parse_field(fields[1], line_no);
    r.mean_energy = parse_field(fields[2], line_no);
    r.esep = parse_field(fields[3], line_no);
    r.normalizer = parse_field(fields[4], line_no);
    r.bound_raw = parse_field(fields[5], line_no);
    r.bound_clipped = parse_field(fields[6], line_no);
    if (fields[7] != "true" && fields[7] != "false") {
      throw InvalidArgument("sweep csv line " + std::to_string(line_no) +
                            ": detected must be true or false");
    }
    r.detected = fields[7] == "true";
    rows.push_back(r);
  }
  return rows;
}

}  // namespace enwit::cli
