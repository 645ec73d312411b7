#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cangle {

// Thrown when the gauge solver hits its iteration cap before reaching the
// requested certificate gap. Carries the best certified bracket found.
class iteration_limit_error : public std::runtime_error {
public:
    iteration_limit_error(const std::string& what, double lower, double upper)
        : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}
    double lower_bound;
    double upper_bound;
};

// Thrown by Gram-Schmidt when the input loses rank; `index` is the offending
// input position.
class rank_error : public std::runtime_error {
public:
    rank_error(const std::string& what, std::size_t index)
        : std::runtime_error(what), index(index) {}
    std::size_t index;
};

}  // namespace cangle
