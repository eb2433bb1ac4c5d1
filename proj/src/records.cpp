#include "spinfr/records.hpp"

#include <fstream>
#include <sstream>

#include "spinfr/errors.hpp"

namespace spinfr {

std::vector<double> read_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open record file: " + path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ss(line);
    double v;
    if (!(ss >> v))
      throw io_error(path + ":" + std::to_string(line_no) + ": not a number: '" + line + "'");
    values.push_back(v);
  }
  return values;
}

void write_record(const std::string& path, const std::vector<double>& record,
                  const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open record file for writing: " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  char buf[40];
  for (double v : record) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out << buf;
  }
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace spinfr
