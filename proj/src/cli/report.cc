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

#include "boundread/cli/report.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "boundread/core/error.h"

#ifndef BOUNDREAD_VERSION
#define BOUNDREAD_VERSION "unknown"
#endif

namespace boundread::cli {

std::string Version() { return BOUNDREAD_VERSION; }

void ParallelFor(size_t count, int threads, const std::function<void(size_t)>& body) {
  const size_t workers = std::min(count, static_cast<size_t>(std::max(1, threads)));
  std::atomic<size_t> next{0};
  std::mutex mu;
  size_t failed_at = count;
  std::exception_ptr failure;
  auto run = [&] {
    for (size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

namespace {

std::string CsvCell(const nlohmann::json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ReportToCsv(const nlohmann::json& report) {
  const nlohmann::json& trials = report.at("trials");
  std::set<std::string> keys;
  for (const auto& t : trials)
    for (const auto& [k, _] : t.items()) keys.insert(k);
  std::ostringstream out;
  bool first = true;
  for (const auto& k : keys) {
    out << (first ? "" : ",") << k;
    first = false;
  }
  out << "\n";
  for (const auto& t : trials) {
    first = true;
    for (const auto& k : keys) {
      out << (first ? "" : ",");
      if (t.contains(k)) out << CsvCell(t.at(k));
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json ParseJsonText(const std::string& text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const size_t at = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const size_t line = 1 + std::count(text.begin(), text.begin() + at, '\n');
    size_t start = at == 0 ? std::string::npos : text.rfind('\n', at - 1);
    start = start == std::string::npos ? 0 : start + 1;
    const size_t col = at - start + 1;
    std::ostringstream msg;
    msg << source << ":" << line << ":" << col << ": malformed JSON";
    throw Error(ErrorCode::kParse, msg.str());
  }
}

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseJsonText(buf.str(), path);
}

double Round6(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace boundread::cli
