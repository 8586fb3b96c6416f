#pragma once
// Greedy representation of a natural number as a sum of distinct,
// non-consecutive Fibonacci numbers (values 1, 2, 3, 5, 8, ...).

#include <fbase/bignum.hpp>
#include <fbase/error.hpp>

#include <cstddef>
#include <vector>

namespace fbase {

namespace detail {

// Distinct-value Fibonacci list 1, 2, 3, 5, ... up to the last value <= limit.
inline std::vector<Nat> fibonacci_values_up_to(const Nat& limit) {
    std::vector<Nat> values;
    Nat a(1), b(2);
    while (a <= limit) {
        values.push_back(a);
        Nat next = a + b;
        a = b;
        b = next;
    }
    return values;
}

} // namespace detail

// 0/1 digits, least significant first; digit s selects the s-th value of
// the distinct Fibonacci list. Zero yields an empty digit list. The greedy
// choice never selects two consecutive values.
inline std::vector<int> zeckendorf_digits(const Nat& alpha) {
    if (alpha < 0) throw InvalidRange("zeckendorf requires a non-negative value");
    const std::vector<Nat> values = detail::fibonacci_values_up_to(alpha);
    std::vector<int> digits(values.size(), 0);
    Nat rest = alpha;
    for (std::size_t i = values.size(); i-- > 0 && rest > 0;) {
        if (values[i] <= rest) {
            digits[i] = 1;
            rest -= values[i];
        }
    }
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
    return digits;
}

// The selected Fibonacci values, largest first.
inline std::vector<Nat> zeckendorf_terms(const Nat& alpha) {
    const std::vector<int> digits = zeckendorf_digits(alpha);
    const std::vector<Nat> values = detail::fibonacci_values_up_to(alpha);
    std::vector<Nat> terms;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i]) terms.push_back(values[i]);
    }
    return terms;
}

} // namespace fbase
