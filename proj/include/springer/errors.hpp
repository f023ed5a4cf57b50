#pragma once

#include <stdexcept>
#include <string>

namespace springer {

// Bad input text or a structurally invalid object received on an input path.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computation routes disagreed, or a derived chain failed
// a well-formedness check. Always indicates an implementation bug.
class cross_check_error : public std::logic_error {
public:
    explicit cross_check_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace springer
