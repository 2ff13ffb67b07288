// Copyright 2026 The boundread Authors.
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

#ifndef BOUNDREAD_CLI_REPORT_H_
#define BOUNDREAD_CLI_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "json.hpp"

namespace boundread::cli {

// Library version string embedded in every report.
std::string Version();

// Runs body(0..count-1) on up to `threads` workers. Results must be written
// by index so the outcome never depends on scheduling. The exception thrown
// by the lowest failing index is rethrown after all workers finish.
void ParallelFor(size_t count, int threads, const std::function<void(size_t)>& body);

// One row per entry of report["trials"], columns the sorted union of keys.
// Nested values are written as JSON text.
std::string ReportToCsv(const nlohmann::json& report);

// Parses JSON text; kParse with line and column on failure.
nlohmann::json ParseJsonText(const std::string& text, const std::string& source);
nlohmann::json ReadJsonFile(const std::string& path);

// Rounded so reports stay readable; the rounding itself is deterministic.
double Round6(double x);

}  // namespace boundread::cli

#endif  // BOUNDREAD_CLI_REPORT_H_
