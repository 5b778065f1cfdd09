#ifndef MARKOVHULL_ERRORS_HPP
#define MARKOVHULL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace markovhull {

// Malformed or out-of-domain input: bad matrix files, illegal words,
// non-constructible middle sets, unknown letters.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// API misuse: mixing elements of different matrices, calling an
// idempotent-only operation on a non-idempotent, source/range of zero.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Truncation depth too small for the requested comparison or realization.
class depth_error : public std::runtime_error {
public:
    explicit depth_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical non-convergence (iteration cap reached before the requested
// tolerance). The message carries the last rigorous enclosure.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource guard (candidate cap, family-size cap) tripped.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace markovhull

#endif
