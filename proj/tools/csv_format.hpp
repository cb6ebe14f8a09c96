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

#ifndef ENWIT_TOOLS_CSV_FORMAT_HPP_
#define ENWIT_TOOLS_CSV_FORMAT_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "enwit/witness.hpp"

namespace enwit::cli {

// Shortest decimal (general notation) that parses back to `value`, using at
// most `max_digits` significant digits; otherwise rounded to `max_digits`.
// Negative zero prints as "0".
std::string format_double(double value, int max_digits);

inline constexpr const char* kSweepCsvHeader =
    "B,T,mean_energy,esep,A,bound_raw,bound_clipped,detected";

// Header plus one LF-terminated row per cell.
void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& rows,
                     int digits);

struct SweepCsvRow {
  double field_b = 0.0;
  double temperature = 0.0;
  double mean_energy = 0.0;
  double esep = 0.0;
  double normalizer = 0.0;
  double bound_raw = 0.0;
  double bound_clipped = 0.0;
  bool detected = false;
};

// Parses what write_sweep_csv emits; throws InvalidArgument on malformed
// input.
std::vector<SweepCsvRow> read_sweep_csv(std::istream& in);

}  // namespace enwit::cli

#endif  // ENWIT_TOOLS_CSV_FORMAT_HPP_
