// Copyright 2026 The taskdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TASKDP_CSV_HPP_
#define TASKDP_CSV_HPP_

#include <string>
#include <vector>

namespace taskdp {

// Shortest round-trippable decimal representation of a double.
// All CSV output goes through this so identical runs give identical bytes.
std::string format_double(double value);

std::vector<std::string> split_csv_line(const std::string& line);

std::string trim(const std::string& s);

double parse_double(const std::string& s, const std::string& context);

long long parse_int(const std::string& s, const std::string& context);

}  // namespace taskdp

#endif  // TASKDP_CSV_HPP_
