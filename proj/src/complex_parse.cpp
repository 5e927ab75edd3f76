#include "mcz/complex_parse.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace mcz {

namespace {

[[noreturn]] void fail(const std::string& text, std::size_t pos, const char* why) {
    throw std::invalid_argument("parse error in \"" + text + "\" at position " +
                                std::to_string(pos) + ": " + why);
}

// number with optional sign; "i" alone stands for coefficient 1
double read_number(const std::string& text, std::size_t& pos) {
    double sign = 1.0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1.0;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') return sign;
    const char* start = text.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start) fail(text, pos, "expected a decimal literal");
    pos += static_cast<std::size_t>(end - start);
    return sign * v;
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) fail(text, pos, "empty input");

    const double first = read_number(text, pos);
    if (pos < text.size() && text[pos] == 'i') {
        ++pos;
        if (pos != text.size()) fail(text, pos, "trailing characters");
        return {0.0, first};
    }
    if (pos == text.size()) return {first, 0.0};
    if (text[pos] != '+' && text[pos] != '-') fail(text, pos, "expected '+' or '-'");

    const double second = read_number(text, pos);
    if (pos >= text.size() || text[pos] != 'i') fail(text, pos, "expected trailing 'i'");
    ++pos;
    if (pos != text.size()) fail(text, pos, "trailing characters");
    return {first, second};
}

}  // namespace mcz
