#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace fbase {

// All arithmetic in the library is exact: factorial-type products
// overflow fixed-width integers around n = 20 already.
using Nat = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

// Narrowing for code paths that materialize structures indexed by a Nat.
inline std::size_t to_index(const Nat& v, const char* what) {
    if (v < 0 || v > std::numeric_limits<std::size_t>::max()) {
        throw std::overflow_error(std::string(what) + ": value does not fit a machine index");
    }
    return static_cast<std::size_t>(v);
}

} // namespace fbase
