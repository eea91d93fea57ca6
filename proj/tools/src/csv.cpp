#include "csv.hpp"

#include <charconv>
#include <cmath>

namespace hz::cli {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    return std::string(buf, r.ptr);
}

void CsvWriter::comment(std::string_view text) {
    std::size_t start = 0;
    while (true) {
        const std::size_t nl = text.find('\n', start);
        out_ << "# " << text.substr(start, nl - start) << '\n';
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
}

void CsvWriter::columns(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) out_ << (i ? "," : "") << names[i];
    out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        if (const double* d = std::get_if<double>(&cells[i]))
            out_ << format_number(*d);
        else
            out_ << std::get<std::string>(cells[i]);
    }
    out_ << '\n';
}

}  // namespace hz::cli
