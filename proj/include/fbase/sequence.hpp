#pragma once
// Integer sequences n -> n_F and the factorial-like products built on
// them: rising/falling factorials, F-factorials, F-nomial coefficients
// and the admissibility scan.

#include <fbase/bignum.hpp>
#include <fbase/error.hpp>

#include <cctype>
#include <cstddef>
#include <deque>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fbase {

enum class SequenceKind { Natural, Fibonacci, Constant, Gauss, Explicit };

// A natural-number-valued sequence n -> n_F with a memoized value table.
//
// Values at indices >= 1 are always >= 1; index 0 is stored at face
// value (natural and gauss store 0 there, the builtin fibonacci stores
// 1, matching the one-point-root convention). level_width() substitutes
// 1 for a stored 0 at index 0, which is what the graph layers use.
//
// Instances are cheap value handles sharing one memo table. The table
// is append-only and mutex-guarded, so computed values never move and
// concurrent readers are safe. Equality compares the generating rule,
// not object identity.
class Sequence {
public:
    static Sequence natural() {
        return Sequence(std::make_shared<Impl>(SequenceKind::Natural, Nat(0), std::vector<Nat>{}, "natural"));
    }

    static Sequence fibonacci() {
        return Sequence(std::make_shared<Impl>(SequenceKind::Fibonacci, Nat(0), std::vector<Nat>{}, "fibonacci"));
    }

    static Sequence constant(Nat p) {
        if (p < 1) throw InvalidSequenceSpec("const:<p> requires p >= 1");
        std::string spec = "const:" + p.str();
        return Sequence(std::make_shared<Impl>(SequenceKind::Constant, std::move(p), std::vector<Nat>{}, std::move(spec)));
    }

    static Sequence gauss(Nat q) {
        if (q < 1) throw InvalidSequenceSpec("gauss:<q> requires q >= 1");
        std::string spec = "gauss:" + q.str();
        return Sequence(std::make_shared<Impl>(SequenceKind::Gauss, std::move(q), std::vector<Nat>{}, std::move(spec)));
    }

    // Values for indices 0, 1, 2, ...; queries past the end throw.
    static Sequence from_values(std::vector<Nat> values, std::string spec = {}) {
        if (values.empty()) throw InvalidSequenceSpec("explicit sequence needs at least one value");
        if (values.front() < 0) throw InvalidSequenceSpec("sequence value at index 0 must be >= 0");
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i] < 1) throw InvalidSequenceSpec("sequence values at indices >= 1 must be >= 1");
        }
        if (spec.empty()) {
            std::ostringstream os;
            os << "explicit:";
            for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
            spec = os.str();
        }
        return Sequence(std::make_shared<Impl>(SequenceKind::Explicit, Nat(0), std::move(values), std::move(spec)));
    }

    // Grammar: natural | fibonacci | const:<p> | gauss:<q> | file:<path>
    // plus explicit:<v0>,<v1>,... so that sequences loaded from a file can
    // still be round-tripped when the file is gone.
    static Sequence parse_spec(std::string_view spec) {
        auto text = trim(spec);
        if (text == "natural") return natural();
        if (text == "fibonacci") return fibonacci();
        if (text.rfind("const:", 0) == 0) return constant(parse_nat(text.substr(6), text));
        if (text.rfind("gauss:", 0) == 0) return gauss(parse_nat(text.substr(6), text));
        if (text.rfind("file:", 0) == 0) {
            std::string path(text.substr(5));
            if (path.empty()) throw InvalidSequenceSpec("file:<path> requires a path");
            std::ifstream in(path);
            if (!in) throw InvalidSequenceSpec("cannot open sequence file: " + path);
            std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            return from_values(parse_value_list(body, text), "file:" + path);
        }
        if (text.rfind("explicit:", 0) == 0) {
            return from_values(parse_value_list(text.substr(9), text));
        }
        throw InvalidSequenceSpec("unrecognized sequence spec: \"" + std::string(text) + "\"");
    }

    // n_F. Memoized; explicit lists throw past their length.
    const Nat& value(std::size_t n) const {
        const Impl& im = *impl_;
        if (im.kind == SequenceKind::Explicit && n >= im.values.size()) {
            throw IndexBeyondExplicitList("explicit sequence has no value at index " + std::to_string(n));
        }
        std::lock_guard<std::mutex> lock(im.mutex);
        while (im.cache.size() <= n) {
            im.cache.push_back(compute(im, im.cache.size()));
        }
        return im.cache[n];
    }

    // Width of graph level s: value(s), except that a stored 0 at index 0
    // widens to the one-point root.
    Nat level_width(std::size_t s) const {
        const Nat& v = value(s);
        if (s == 0 && v == 0) return Nat(1);
        return v;
    }

    SequenceKind kind() const { return impl_->kind; }
    const std::string& spec_string() const { return impl_->spec; }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        if (a.impl_ == b.impl_) return true;
        if (a.impl_->kind != b.impl_->kind) return false;
        switch (a.impl_->kind) {
            case SequenceKind::Constant:
            case SequenceKind::Gauss:
                return a.impl_->param == b.impl_->param;
            case SequenceKind::Explicit:
                return a.impl_->values == b.impl_->values;
            default:
                return true;
        }
    }
    friend bool operator!=(const Sequence& a, const Sequence& b) { return !(a == b); }

private:
    struct Impl {
        Impl(SequenceKind k, Nat p, std::vector<Nat> v, std::string s)
            : kind(k), param(std::move(p)), values(std::move(v)), spec(std::move(s)) {}
        SequenceKind kind;
        Nat param;
        std::vector<Nat> values;
        std::string spec;
        mutable std::mutex mutex;
        mutable std::deque<Nat> cache; // deque: appended elements never move
    };

    explicit Sequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    static Nat compute(const Impl& im, std::size_t n) {
        switch (im.kind) {
            case SequenceKind::Natural:
                return Nat(n);
            case SequenceKind::Fibonacci:
                // 0_F = 1 (one-point root), 1_F = 2_F = 1, then the recurrence.
                if (n <= 2) return Nat(1);
                return im.cache[n - 1] + im.cache[n - 2];
            case SequenceKind::Constant:
                return im.param;
            case SequenceKind::Gauss:
                // 1 + q + ... + q^(n-1)
                if (n == 0) return Nat(0);
                return im.cache[n - 1] * im.param + 1;
            case SequenceKind::Explicit:
                return im.values[n];
        }
        throw Error("unreachable sequence kind");
    }

    static std::string_view trim(std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    }

    static Nat parse_nat(std::string_view digits, std::string_view whole) {
        if (digits.empty()) throw InvalidSequenceSpec("missing number in sequence spec: \"" + std::string(whole) + "\"");
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw InvalidSequenceSpec("bad number in sequence spec: \"" + std::string(whole) + "\"");
            }
        }
        return Nat(std::string(digits));
    }

    static std::vector<Nat> parse_value_list(std::string_view body, std::string_view whole) {
        std::vector<Nat> out;
        std::string token;
        auto flush = [&] {
            if (!token.empty()) {
                out.push_back(parse_nat(token, whole));
                token.clear();
            }
        };
        for (char c : body) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                flush();
            } else {
                token.push_back(c);
            }
        }
        flush();
        if (out.empty()) throw InvalidSequenceSpec("no values in sequence spec: \"" + std::string(whole) + "\"");
        return out;
    }

    std::shared_ptr<const Impl> impl_;
};

// k_F (k+1)_F ... (k+s-1)_F; the empty product 1 when s == 0.
inline Nat rising_factorial(const Sequence& f, std::size_t k, std::size_t s) {
    if (k < 1) throw InvalidRange("rising_factorial requires k >= 1");
    Nat product(1);
    for (std::size_t i = 0; i < s; ++i) product *= f.value(k + i);
    return product;
}

// n_F! = n_F (n-1)_F ... 1_F, with 0_F! = 1.
inline Nat f_factorial(const Sequence& f, std::size_t n) {
    return rising_factorial(f, 1, n);
}

// n_F (n-1)_F ... (n-k+1)_F; 1 when k == 0.
inline Nat falling_factorial(const Sequence& f, std::size_t n, std::size_t k) {
    if (k > n) throw InvalidRange("falling_factorial requires k <= n");
    Nat product(1);
    for (std::size_t i = 0; i < k; ++i) product *= f.value(n - i);
    return product;
}

// n_F! / (k_F! (n-k)_F!), exact. Integrality is a property of the result
// (see is_integral) rather than an error, so admissibility scans can
// report witnesses.
inline Rat fnomial(const Sequence& f, std::size_t n, std::size_t k) {
    if (k > n) throw InvalidRange("fnomial requires k <= n");
    return Rat(falling_factorial(f, n, k), f_factorial(f, k));
}

struct AdmissibilityReport {
    bool admissible = true;
    // first (n, k) with a non-integral coefficient, when not admissible
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;
};

// True iff every F-nomial coefficient with 0 <= k <= n <= n_max is an integer.
inline AdmissibilityReport is_admissible(const Sequence& f, std::size_t n_max) {
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (!is_integral(fnomial(f, n, k))) {
                return AdmissibilityReport{false, std::make_pair(n, k)};
            }
        }
    }
    return AdmissibilityReport{};
}

} // namespace fbase
