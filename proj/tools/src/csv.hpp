#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hz::cli {

// Shortest-safe fixed format: scientific with 17 significant digits,
// independent of the C++ and C locales.
std::string format_number(double v);

using Cell = std::variant<double, std::string>;

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(std::string_view text);  // "# text"
    void columns(const std::vector<std::string>& names);
    void row(const std::vector<Cell>& cells);

private:
    std::ostream& out_;
};

}  // namespace hz::cli
