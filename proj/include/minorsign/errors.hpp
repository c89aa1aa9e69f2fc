#pragma once

#include <stdexcept>
#include <string>

namespace minorsign {

// Thrown when a principal-minor enumeration (or a classification that needs
// one) is requested for a dimension above the configured cap.
class capacity_error : public std::runtime_error {
public:
    capacity_error(int n, int cap)
        : std::runtime_error("minor enumeration for n=" + std::to_string(n) +
                             " needs 2^" + std::to_string(n) +
                             "-1 determinants, above the cap n=" + std::to_string(cap) +
                             "; raise the cap to proceed"),
          n_(n), cap_(cap) {}

    int n() const { return n_; }
    int cap() const { return cap_; }

private:
    int n_;
    int cap_;
};

// Thrown by the document readers on malformed input.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, int line, int column)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace minorsign
