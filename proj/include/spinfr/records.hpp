#pragma once

#include <string>
#include <vector>

namespace spinfr {

// Measurement-record files: plain text, one radian value per line,
// '#'-prefixed lines are comments.
std::vector<double> read_record(const std::string& path);
void write_record(const std::string& path, const std::vector<double>& record,
                  const std::string& comment = "");

}  // namespace spinfr
