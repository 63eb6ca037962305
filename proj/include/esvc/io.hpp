/*
 * Copyright 2026 The ESVC Foot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace esvc {

/// Shortest decimal text that parses back to the same double.
std::string fmt(double v);

/// Joins already formatted fields with commas.
std::string csv_row(const std::vector<std::string>& fields);

/// Parses a double written by fmt(); throws Io on malformed text.
double parse_double(std::string_view text);

std::vector<std::string> split(std::string_view line, char sep);

/// Writes the whole file or throws Io naming the path.
void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

}  // namespace esvc
