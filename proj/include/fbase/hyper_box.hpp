#pragma once
// Discrete boxes [k_F] x [(k+1)_F] x ... x [n_F]: the coordinate space of
// the maximal chains of a layer. Points are little-endian digit tuples,
// enumerated in increasing chain-code order. Sub-boxes (one interval per
// dimension) carry the inclusion order; points carry the coordinatewise
// lattice order with join/meet.

#include <fbase/bignum.hpp>
#include <fbase/error.hpp>
#include <fbase/numeral.hpp>
#include <fbase/sequence.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fbase {

using Point = std::vector<Nat>;

class HyperBox {
public:
    // end == origin - 1 is the empty product box: zero dimensions, one
    // (empty) point, so chain-count formulas hold with empty products.
    HyperBox(Sequence sequence, std::size_t origin, std::size_t end)
        : sequence_(std::move(sequence)), origin_(origin), end_(end) {
        if (origin_ < 1) throw InvalidRange("box origin must be >= 1");
        if (end_ + 1 < origin_) throw InvalidRange("box end must be >= origin - 1");
    }

    const Sequence& sequence() const { return sequence_; }
    std::size_t origin() const { return origin_; }
    std::size_t end() const { return end_; }
    std::size_t dimension_count() const { return end_ + 1 - origin_; }

    // (origin + dim)_F
    Nat extent(std::size_t dim) const {
        if (dim >= dimension_count()) throw InvalidRange("dimension out of range");
        return sequence_.value(origin_ + dim);
    }

    std::vector<Nat> extents() const {
        std::vector<Nat> out;
        out.reserve(dimension_count());
        for (std::size_t d = 0; d < dimension_count(); ++d) out.push_back(extent(d));
        return out;
    }

    Nat cardinality() const { return rising_factorial(sequence_, origin_, dimension_count()); }

    bool contains(const Point& p) const {
        if (p.size() != dimension_count()) return false;
        for (std::size_t d = 0; d < p.size(); ++d) {
            if (p[d] < 0 || p[d] >= extent(d)) return false;
        }
        return true;
    }

    // Position of p in the enumeration order (its chain code value).
    Nat rank(const Point& p) const {
        if (!contains(p)) throw AmbientMismatch("point does not lie in the box");
        Nat total(0);
        Nat weight(1);
        for (std::size_t d = 0; d < p.size(); ++d) {
            total += p[d] * weight;
            weight *= extent(d);
        }
        return total;
    }

    // Visits every point exactly once in increasing chain-code order
    // (dimension 0 varies fastest). Runs the odometer without
    // materializing anything; fn may return false to stop early.
    void for_each_point(const std::function<bool(const Point&)>& fn) const {
        Point current(dimension_count(), Nat(0));
        std::vector<Nat> ext = extents();
        for (const Nat& e : ext) {
            if (e == 0) return; // no points (cannot happen for valid sequences)
        }
        while (true) {
            if (!fn(current)) return;
            std::size_t d = 0;
            while (d < current.size()) {
                if (++current[d] < ext[d]) break;
                current[d] = 0;
                ++d;
            }
            if (d == current.size()) return;
        }
    }

    friend bool operator==(const HyperBox& a, const HyperBox& b) {
        return a.origin_ == b.origin_ && a.end_ == b.end_ && a.sequence_ == b.sequence_;
    }
    friend bool operator!=(const HyperBox& a, const HyperBox& b) { return !(a == b); }

private:
    Sequence sequence_;
    std::size_t origin_;
    std::size_t end_;
};

// Materialized point list in enumeration order.
inline std::vector<Point> enumerate_max_chains(const HyperBox& box) {
    std::vector<Point> out;
    out.reserve(to_index(box.cardinality(), "box cardinality"));
    box.for_each_point([&](const Point& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

inline Nat count_max_chains(const HyperBox& box) { return box.cardinality(); }

// An axis-aligned sub-box: one inclusive, non-empty interval per dimension.
class BoxInterval {
public:
    using Interval = std::pair<Nat, Nat>; // [low, high]

    BoxInterval(HyperBox ambient, std::vector<Interval> intervals)
        : ambient_(std::move(ambient)), intervals_(std::move(intervals)) {
        if (intervals_.size() != ambient_.dimension_count()) {
            throw AmbientMismatch("interval count must equal the box dimension count");
        }
        for (std::size_t d = 0; d < intervals_.size(); ++d) {
            const auto& [lo, hi] = intervals_[d];
            if (lo < 0 || lo > hi || hi >= ambient_.extent(d)) {
                throw InvalidRange("interval out of range in dimension " + std::to_string(d));
            }
        }
    }

    static BoxInterval whole(const HyperBox& box) {
        std::vector<Interval> iv;
        for (std::size_t d = 0; d < box.dimension_count(); ++d) iv.emplace_back(Nat(0), box.extent(d) - 1);
        return BoxInterval(box, std::move(iv));
    }

    static BoxInterval at_point(const HyperBox& box, const Point& p) {
        if (!box.contains(p)) throw AmbientMismatch("point does not lie in the box");
        std::vector<Interval> iv;
        for (const Nat& c : p) iv.emplace_back(c, c);
        return BoxInterval(box, std::move(iv));
    }

    const HyperBox& ambient() const { return ambient_; }
    const std::vector<Interval>& intervals() const { return intervals_; }

    Nat cell_count() const {
        Nat total(1);
        for (const auto& [lo, hi] : intervals_) total *= hi - lo + 1;
        return total;
    }

    bool contains_point(const Point& p) const {
        if (p.size() != intervals_.size()) return false;
        for (std::size_t d = 0; d < p.size(); ++d) {
            if (p[d] < intervals_[d].first || p[d] > intervals_[d].second) return false;
        }
        return true;
    }

    friend bool operator==(const BoxInterval& a, const BoxInterval& b) {
        return a.ambient_ == b.ambient_ && a.intervals_ == b.intervals_;
    }
    friend bool operator!=(const BoxInterval& a, const BoxInterval& b) { return !(a == b); }

private:
    HyperBox ambient_;
    std::vector<Interval> intervals_;
};

// True iff inner fits inside outer in every dimension. Both must be
// sub-boxes of the same ambient box.
inline bool box_contains(const BoxInterval& outer, const BoxInterval& inner) {
    if (outer.ambient() != inner.ambient()) throw AmbientMismatch("sub-boxes of different ambient boxes");
    for (std::size_t d = 0; d < outer.intervals().size(); ++d) {
        if (inner.intervals()[d].first < outer.intervals()[d].first) return false;
        if (inner.intervals()[d].second > outer.intervals()[d].second) return false;
    }
    return true;
}

namespace detail {
inline void require_same_dimensions(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw AmbientMismatch("points have different dimension counts");
}
} // namespace detail

// Coordinatewise order and lattice operations.
inline bool product_leq(const Point& a, const Point& b) {
    detail::require_same_dimensions(a, b);
    for (std::size_t d = 0; d < a.size(); ++d) {
        if (a[d] > b[d]) return false;
    }
    return true;
}

inline Point join(const Point& a, const Point& b) {
    detail::require_same_dimensions(a, b);
    Point out(a.size());
    for (std::size_t d = 0; d < a.size(); ++d) out[d] = a[d] > b[d] ? a[d] : b[d];
    return out;
}

inline Point meet(const Point& a, const Point& b) {
    detail::require_same_dimensions(a, b);
    Point out(a.size());
    for (std::size_t d = 0; d < a.size(); ++d) out[d] = a[d] < b[d] ? a[d] : b[d];
    return out;
}

// The interval sub-box [meet, join]; the smallest sub-box holding both points.
inline BoxInterval strip(const HyperBox& box, const Point& a, const Point& b) {
    if (!box.contains(a) || !box.contains(b)) throw AmbientMismatch("points do not lie in the box");
    std::vector<BoxInterval::Interval> iv;
    iv.reserve(a.size());
    const Point lo = meet(a, b);
    const Point hi = join(a, b);
    for (std::size_t d = 0; d < a.size(); ++d) iv.emplace_back(lo[d], hi[d]);
    return BoxInterval(box, std::move(iv));
}

// The three standard partial orders on pairs of naturals.
enum class PairOrder { Lex, Product, StrictReflexive };

inline bool pair_leq(PairOrder kind, const std::pair<Nat, Nat>& a, const std::pair<Nat, Nat>& b) {
    switch (kind) {
        case PairOrder::Lex:
            return a.first < b.first || (a.first == b.first && a.second <= b.second);
        case PairOrder::Product:
            return a.first <= b.first && a.second <= b.second;
        case PairOrder::StrictReflexive:
            return (a.first < b.first && a.second < b.second) ||
                   (a.first == b.first && a.second == b.second);
    }
    throw Error("unreachable pair order kind");
}

} // namespace fbase
