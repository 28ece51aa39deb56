#include "data_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ewg::cli {

std::vector<double> read_data_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open data file: " + path);
    std::vector<double> values;
    std::string line;
    long row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        const std::string token = line.substr(start);
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        bool trailing_junk = false;
        for (const char* c = end; c && *c; ++c)
            if (!std::isspace(static_cast<unsigned char>(*c))) trailing_junk = true;
        if (end == token.c_str() || trailing_junk) {
            std::ostringstream msg;
            msg << path << ": row " << row << ": not a number: '" << token << "'";
            throw DataError(msg.str());
        }
        if (!(std::isfinite(v) && v > 0.0)) {
            std::ostringstream msg;
            msg << path << ": row " << row << ": value must be positive and finite, got " << v;
            throw DataError(msg.str());
        }
        values.push_back(v);
    }
    if (values.empty()) throw DataError(path + ": no data rows");
    return values;
}

void write_data_file(const std::string& path, const std::vector<double>& values) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open output file: " + path);
    out.precision(17);
    for (double v : values) out << v << "\n";
    if (!out) throw DataError("write failed: " + path);
}

} // namespace ewg::cli
