#ifndef EWG_TOOLS_DATA_IO_HPP
#define EWG_TOOLS_DATA_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ewg::cli {

/// Raised for unreadable files and malformed rows; the message carries the
/// offending row number. Mapped to exit code 2 by the commands.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads one positive decimal per line. Lines starting with '#' and blank
/// lines are skipped; both \n and \r\n endings are accepted. Non-numeric or
/// non-positive rows raise DataError naming the row.
std::vector<double> read_data_file(const std::string& path);

/// Writes one value per line ('\n' endings, 17 significant digits).
void write_data_file(const std::string& path, const std::vector<double>& values);

} // namespace ewg::cli

#endif
