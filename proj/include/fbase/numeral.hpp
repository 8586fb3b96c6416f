#pragma once
// Mixed-radix numerals over a Sequence. Position s of a numeral with
// origin k has radix (k+s)_F and weight k_F (k+1)_F ... (k+s-1)_F, so
// each weight is the previous one times the previous radix. A numeral
// doubles as the coordinate tuple of a maximal chain inside the box
// [k_F] x [(k+1)_F] x ... (see hyper_box.hpp).

#include <fbase/bignum.hpp>
#include <fbase/error.hpp>
#include <fbase/sequence.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fbase {

using Digits = std::vector<Nat>;

// Positions scanned before giving up on a digit expansion; only
// degenerate sequences (eventually all-1 radices) ever get near it.
inline constexpr std::size_t kMaxPositionScan = 1'000'000;

// An immutable little-endian digit vector with an origin index and a
// sequence. Construction accepts any non-negative digits: raw digit
// lists (possibly exceeding their radix) are useful as inputs to the
// carry arithmetic, and decode/parse enforce the bounds where the
// contract needs them. Library arithmetic always returns normalized
// numerals (radix-bounded, no trailing zeros; zero is the empty list).
class Numeral {
public:
    Numeral(Sequence sequence, std::size_t origin, Digits digits_lsb)
        : sequence_(std::move(sequence)), origin_(origin), digits_(std::move(digits_lsb)) {
        if (origin_ < 1) throw InvalidRange("numeral origin must be >= 1");
        for (std::size_t s = 0; s < digits_.size(); ++s) {
            if (digits_[s] < 0) throw DigitOutOfRange(s, "digit at position " + std::to_string(s) + " is negative");
        }
    }

    static Numeral zero(Sequence sequence, std::size_t origin = 1) {
        return Numeral(std::move(sequence), origin, {});
    }

    const Sequence& sequence() const { return sequence_; }
    std::size_t origin() const { return origin_; }
    const Digits& digits_lsb() const { return digits_; }
    std::size_t length() const { return digits_.size(); }

    bool is_zero() const {
        return std::all_of(digits_.begin(), digits_.end(), [](const Nat& d) { return d == 0; });
    }

    // (origin + s)_F
    Nat radix_at(std::size_t s) const { return sequence_.value(origin_ + s); }

    // origin_F (origin+1)_F ... (origin+s-1)_F
    Nat weight_at(std::size_t s) const { return rising_factorial(sequence_, origin_, s); }

    bool digit_bounded() const {
        for (std::size_t s = 0; s < digits_.size(); ++s) {
            if (digits_[s] >= radix_at(s)) return false;
        }
        return true;
    }

    // Structural equality: same generating rule, origin and digit list
    // (trailing zeros count). Use compare() for the value order.
    friend bool operator==(const Numeral& a, const Numeral& b) {
        return a.origin_ == b.origin_ && a.digits_ == b.digits_ && a.sequence_ == b.sequence_;
    }
    friend bool operator!=(const Numeral& a, const Numeral& b) { return !(a == b); }

private:
    Sequence sequence_;
    std::size_t origin_;
    Digits digits_;
};

namespace detail {

inline Nat radix_or_throw(const Sequence& f, std::size_t origin, std::size_t s) {
    try {
        return f.value(origin + s);
    } catch (const IndexBeyondExplicitList&) {
        throw NonRepresentable("sequence exhausted at position " + std::to_string(s) +
                               " before the expansion terminated");
    }
}

inline void strip_trailing_zeros(Digits& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// Digit-wise sum with varying-radix carry. Accepts digit lists that are
// not radix-bounded; the divmod carry normalizes them.
inline Digits carry_sum(const Sequence& f, std::size_t origin, const Digits& a, const Digits& b) {
    Digits out;
    Nat carry(0);
    const std::size_t common = std::max(a.size(), b.size());
    for (std::size_t s = 0; s < common || carry > 0; ++s) {
        if (s >= kMaxPositionScan) {
            throw NonRepresentable("carry does not terminate within the position scan limit");
        }
        Nat t = carry;
        if (s < a.size()) t += a[s];
        if (s < b.size()) t += b[s];
        const Nat r = radix_or_throw(f, origin, s);
        out.push_back(t % r);
        carry = t / r;
    }
    strip_trailing_zeros(out);
    return out;
}

} // namespace detail

// Sum of digit * weight over all positions. Requires radix-bounded digits.
inline Nat decode(const Numeral& x) {
    Nat total(0);
    Nat weight(1);
    const Digits& d = x.digits_lsb();
    for (std::size_t s = 0; s < d.size(); ++s) {
        const Nat r = x.radix_at(s);
        if (d[s] >= r) {
            throw DigitOutOfRange(s, "digit at position " + std::to_string(s) + " is >= its radix");
        }
        total += d[s] * weight;
        weight *= r;
    }
    return total;
}

// Digit expansion of alpha: repeated division by the position radices.
// The result is normalized and radix-bounded; the expansion is unique.
inline Numeral encode(const Nat& alpha, Sequence f, std::size_t origin = 1) {
    if (origin < 1) throw InvalidRange("encode requires origin >= 1");
    if (alpha < 0) throw InvalidRange("encode requires a non-negative value");
    Digits digits;
    Nat rest = alpha;
    std::size_t s = 0;
    while (rest > 0) {
        if (s >= kMaxPositionScan) {
            throw NonRepresentable("radices stop growing before reaching the value");
        }
        const Nat r = detail::radix_or_throw(f, origin, s);
        digits.push_back(rest % r);
        rest /= r;
        ++s;
    }
    return Numeral(std::move(f), origin, std::move(digits));
}

// Value + 1 by direct carry propagation; never decodes.
inline Numeral successor(const Numeral& x) {
    Digits d = x.digits_lsb();
    Nat carry(1);
    std::size_t s = 0;
    while (carry > 0) {
        if (s >= kMaxPositionScan) {
            throw NonRepresentable("carry does not terminate within the position scan limit");
        }
        if (s == d.size()) d.emplace_back(0);
        const Nat r = detail::radix_or_throw(x.sequence(), x.origin(), s);
        const Nat t = d[s] + carry;
        d[s] = t % r;
        carry = t / r;
        ++s;
    }
    detail::strip_trailing_zeros(d);
    return Numeral(x.sequence(), x.origin(), std::move(d));
}

// Digit-wise addition with varying-radix carry. The operands must share
// origin and sequence; their digit lists may be un-normalized.
inline Numeral add(const Numeral& a, const Numeral& b) {
    if (a.origin() != b.origin()) throw OriginMismatch("numerals have different origins");
    if (a.sequence() != b.sequence()) throw SequenceMismatch("numerals have different sequences");
    return Numeral(a.sequence(), a.origin(),
                   detail::carry_sum(a.sequence(), a.origin(), a.digits_lsb(), b.digits_lsb()));
}

inline Numeral operator+(const Numeral& a, const Numeral& b) { return add(a, b); }

// Carry-normalized copy with trailing zeros removed.
inline Numeral normalize(const Numeral& x) {
    return Numeral(x.sequence(), x.origin(),
                   detail::carry_sum(x.sequence(), x.origin(), x.digits_lsb(), {}));
}

// Digit order from the most significant differing position down. For
// radix-bounded numerals this agrees with comparing decoded values; it
// never decodes.
inline std::strong_ordering compare(const Numeral& a, const Numeral& b) {
    if (a.origin() != b.origin()) throw OriginMismatch("numerals have different origins");
    if (a.sequence() != b.sequence()) throw SequenceMismatch("numerals have different sequences");
    static const Nat kZero(0);
    const Digits& da = a.digits_lsb();
    const Digits& db = b.digits_lsb();
    for (std::size_t i = std::max(da.size(), db.size()); i-- > 0;) {
        const Nat& x = i < da.size() ? da[i] : kZero;
        const Nat& y = i < db.size() ? db[i] : kZero;
        if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// The all-maximal-digits numeral of length m: ((k)_F - 1, ..., (k+m-1)_F - 1).
// Its value is one below the weight of position m, so incrementing it
// carries into a single 1 at position m.
inline Numeral max_prefix_numeral(const Sequence& f, std::size_t origin, std::size_t m) {
    if (origin < 1) throw InvalidRange("max_prefix_numeral requires origin >= 1");
    if (m < 1) throw InvalidRange("max_prefix_numeral requires m >= 1");
    Digits digits;
    digits.reserve(m);
    for (std::size_t s = 0; s < m; ++s) digits.push_back(f.value(origin + s) - 1);
    return Numeral(f, origin, std::move(digits));
}

// Alternative weighting used only for comparison with decode(): position s
// weighs k_F (k_F + 1) ... (k_F + s - 1), the ordinary rising factorial of
// the *value* k_F rather than the product of sequence values along the
// index axis. The two coincide when F is the identity and diverge
// otherwise. Digit bounds are the same as for decode().
inline Nat decode_value_rising(const Numeral& x) {
    Nat total(0);
    Nat weight(1);
    const Nat base = x.sequence().value(x.origin());
    const Digits& d = x.digits_lsb();
    for (std::size_t s = 0; s < d.size(); ++s) {
        const Nat r = x.radix_at(s);
        if (d[s] >= r) {
            throw DigitOutOfRange(s, "digit at position " + std::to_string(s) + " is >= its radix");
        }
        total += d[s] * weight;
        weight *= base + s;
    }
    return total;
}

// "(c_m c_(m-1) ... c_1 c_0)_F" with the most significant digit first;
// zero prints as "(0)_F".
inline std::string format_numeral(const Numeral& x) {
    const Digits& d = x.digits_lsb();
    std::string out = "(";
    if (d.empty()) {
        out += "0";
    } else {
        for (std::size_t i = d.size(); i-- > 0;) {
            out += d[i].str();
            if (i != 0) out += ' ';
        }
    }
    out += ")_F";
    return out;
}

// Strict inverse of format_numeral: "(" digit (SP digit)* ")" "_F" with
// single-space separators. Parsed digits are checked against their radix.
inline Numeral parse_numeral(std::string_view text, Sequence f, std::size_t origin) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError(pos, what + " at offset " + std::to_string(pos));
    };
    if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<Nat> msb_digits;
    while (true) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw fail("expected a digit");
        msb_digits.emplace_back(std::string(text.substr(start, pos - start)));
        if (pos < text.size() && text[pos] == ' ') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos >= text.size() || text[pos] != ')') throw fail("expected ')'");
    ++pos;
    if (text.substr(pos, 2) != "_F") throw fail("expected \"_F\"");
    pos += 2;
    if (pos != text.size()) throw fail("trailing characters");

    // canonical zero "(0)_F" is the empty digit list
    if (msb_digits.size() == 1 && msb_digits.front() == 0) msb_digits.clear();
    Digits digits(msb_digits.rbegin(), msb_digits.rend());
    Numeral result(std::move(f), origin, std::move(digits));
    const Digits& d = result.digits_lsb();
    for (std::size_t s = 0; s < d.size(); ++s) {
        if (d[s] >= result.radix_at(s)) {
            throw DigitOutOfRange(s, "parsed digit at position " + std::to_string(s) + " is >= its radix");
        }
    }
    return result;
}

} // namespace fbase
