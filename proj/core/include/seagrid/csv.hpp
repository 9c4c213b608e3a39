#pragma once

#include <istream>
#include <string>
#include <vector>

namespace seagrid {

/// Split one CSV line into fields. Handles double-quoted fields with
/// embedded commas and "" escapes; no multi-line fields.
std::vector<std::string> split_csv_line(const std::string& line);

/// Quote a field for CSV output when it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

/// Minimal line reader that tolerates both \n and \r\n endings.
/// Returns false at end of stream.
bool read_line(std::istream& in, std::string& line);

} // namespace seagrid
