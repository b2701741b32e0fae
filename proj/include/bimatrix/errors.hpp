#pragma once

#include <stdexcept>
#include <string>

namespace bimatrix {

// Which half of a bimatrix an error or flag refers to.
enum class Component { First, Second, Both };

inline const char* to_string(Component c)
{
    switch (c) {
    case Component::First: return "first";
    case Component::Second: return "second";
    case Component::Both: return "both";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimMismatch : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// Both components of a result coincide and are neither zero nor identity.
class DegenerateCollapse : public Error {
public:
    DegenerateCollapse() : Error("degenerate collapse: both components are equal") {}
};

// An inverse was requested but `which` component is singular.
class SingularError : public Error {
public:
    explicit SingularError(Component which)
        : Error(std::string("singular component: ") + to_string(which)), which_(which) {}
    Component which() const { return which_; }

private:
    Component which_;
};

class NotDiagonalizable : public Error {
public:
    using Error::Error;
};

class Inconsistent : public Error {
public:
    explicit Inconsistent(Component which)
        : Error(std::string("inconsistent system in component: ") + to_string(which)), which_(which) {}
    Component which() const { return which_; }

private:
    Component which_;
};

class SingularWitness : public Error {
public:
    SingularWitness() : Error("similarity witness is singular in both components") {}
};

class IOError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace bimatrix
