#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace stumpbounds {

struct CsvTable {
    std::vector<std::vector<std::string>> rows;
};

/// Reads a comma-separated file (no quoting; fields are numbers or plain
/// tokens). Throws DataError when the file cannot be opened.
CsvTable read_csv(const std::string& path);

/// Shortest round-trip decimal representation; infinities print as "inf".
/// Used everywhere a double goes into a file so output is byte-stable.
std::string format_number(double v);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void write_row(const std::vector<std::string>& fields);

private:
    std::ofstream out_;
};

}  // namespace stumpbounds
