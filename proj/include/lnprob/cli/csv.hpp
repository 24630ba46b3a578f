#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The lnprob Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace lnprob::cli {

/**
 * RFC 4180 CSV with LF line endings. The first line is a comment carrying the
 * configuration hash and the seed, the second the column names.
 */
class CsvWriter
{
public:
  CsvWriter(std::filesystem::path const &file, std::string const &config_hash, std::uint64_t seed,
            std::vector<std::string> const &columns);

  void row(std::vector<std::string> const &fields);

  /// Flushes and throws IoError if any write failed.
  void close();

private:
  std::filesystem::path file_;
  std::ofstream         out_;
  std::size_t           width_;
};

/// Quotes a field when it holds a comma, a quote or a line break.
std::string csv_escape(std::string const &field);

/// Shortest round-trip-stable text for tables: 12 significant digits.
std::string fmt(double x);
std::string fmt(std::int64_t x);
std::string fmt(std::size_t x);
std::string fmt(int x);
std::string fmt(bool x);

}  // namespace lnprob::cli
