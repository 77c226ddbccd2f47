#pragma once

#include <stdexcept>
#include <string>

namespace fillin {

// Internal consistency failure (a defect signal, distinct from NO).
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed; line is 1-based.
struct parse_error : std::runtime_error {
    parse_error(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no)
    {
    }
    int line;
};

} // namespace fillin
