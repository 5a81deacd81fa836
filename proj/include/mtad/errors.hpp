#pragma once

#include <stdexcept>
#include <string>

namespace mtad {

// Malformed or unreadable input: missing files, ragged CSV rows, bad labels.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate numeric input or an unrecoverable numeric condition
// (fewer points than clusters, zero covariance, undecodable sequence, ...).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mtad
