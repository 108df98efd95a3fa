// Copyright 2026 The ugcsat Authors.
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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ugcsat {

// Locale-independent shortest-ish representation ("%.10g"), used by every
// CSV writer so outputs are byte-stable across runs and machines.
std::string format_double(double v);

// Quotes a field only when it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

// Splits one CSV record; supports quoted fields with doubled quotes.
std::vector<std::string> parse_csv_line(const std::string& line);

// Reads all records of a CSV file, skipping blank lines. Does not treat any
// row as a header.
std::vector<std::vector<std::string>> read_csv_file(const std::filesystem::path& path);

// Writes the file only through a complete buffer so partial outputs are not
// left behind on error.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace ugcsat
