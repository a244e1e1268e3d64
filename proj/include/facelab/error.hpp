#pragma once

#include <stdexcept>
#include <string>

namespace facelab {

/// Every failure raised by the library carries a short machine-readable kind
/// (e.g. "IllegalMove", "NotPure") plus a human readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class NotSimpleTree : public Error {
public:
    NotSimpleTree(std::size_t index, const std::string& msg)
        : Error("NotSimpleTree", "facet " + std::to_string(index) + ": " + msg), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error("ParseError", "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg)
{
    throw Error(kind, msg);
}

} // namespace facelab
