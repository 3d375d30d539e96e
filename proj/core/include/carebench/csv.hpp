#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carebench::csv {

// Record-level CSV helpers shared by the dataset loader and report writers.
// Quoting follows the usual convention: a field containing the delimiter or a
// double quote is wrapped in quotes, embedded quotes are doubled. Fields must
// not contain newlines; records map 1:1 to lines.

std::vector<std::string> split_record(std::string_view line, char delimiter = ',');

// Fast path for lines without quotes; views point into `line`.
void split_unquoted(std::string_view line, char delimiter, std::vector<std::string_view>& out);

std::string join_record(std::span<const std::string> fields, char delimiter = ',');

std::string quote_if_needed(std::string_view field, char delimiter = ',');

}  // namespace carebench::csv
