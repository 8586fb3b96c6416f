#pragma once
// Product tiles and exhaustive tiling enumeration. A tile of an
// m-dimensional box picks one subset per dimension, with subset sizes
// realizing the multiset {1_F, ..., m_F}; its point set is the Cartesian
// product, so every tile has m_F! points. A tiling is a partition of the
// whole box into such tiles. Tiles may use arbitrary per-dimension
// subsets; TilingOptions::intervals_only restricts them to contiguous
// runs for the stricter reading.

#include <fbase/bignum.hpp>
#include <fbase/error.hpp>
#include <fbase/hyper_box.hpp>
#include <fbase/sequence.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fbase {

struct Tile {
    std::vector<std::size_t> sigma;                // 1-based permutation of 1..m
    std::vector<std::vector<std::size_t>> subsets; // per-dimension, sorted ascending

    friend bool operator==(const Tile& a, const Tile& b) {
        return a.sigma == b.sigma && a.subsets == b.subsets;
    }
};

inline Nat tile_cardinality(const Tile& t) {
    Nat total(1);
    for (const auto& a : t.subsets) total *= a.size();
    return total;
}

// A tile shape fits a box when every chosen coordinate exists there.
inline bool tile_placeable_in(const Tile& t, const HyperBox& box) {
    if (t.subsets.size() != box.dimension_count()) return false;
    for (std::size_t d = 0; d < t.subsets.size(); ++d) {
        if (t.subsets[d].empty()) return false;
        if (Nat(t.subsets[d].back()) >= box.extent(d)) return false;
    }
    return true;
}

// Visits the product points of a tile; coordinates are machine-sized.
inline void for_each_tile_cell(const Tile& t,
                               const std::function<void(const std::vector<std::size_t>&)>& fn) {
    const std::size_t m = t.subsets.size();
    std::vector<std::size_t> idx(m, 0);
    std::vector<std::size_t> coords(m, 0);
    while (true) {
        for (std::size_t d = 0; d < m; ++d) coords[d] = t.subsets[d][idx[d]];
        fn(coords);
        std::size_t d = 0;
        while (d < m && ++idx[d] == t.subsets[d].size()) {
            idx[d] = 0;
            ++d;
        }
        if (d == m) return;
    }
}

// One shape per permutation sigma of {1..m}, each anchored at the prefix
// subsets {0, ..., sigma(s)_F - 1}; permutations in lexicographic order.
inline std::vector<Tile> canonical_tiles(const Sequence& f, std::size_t m) {
    if (m < 1) throw InvalidRange("canonical_tiles requires m >= 1");
    std::vector<std::size_t> sigma(m);
    for (std::size_t s = 0; s < m; ++s) sigma[s] = s + 1;
    std::vector<Tile> out;
    do {
        Tile t;
        t.sigma = sigma;
        t.subsets.reserve(m);
        for (std::size_t s = 0; s < m; ++s) {
            const std::size_t size = to_index(f.value(sigma[s]), "tile subset size");
            std::vector<std::size_t> prefix(size);
            for (std::size_t i = 0; i < size; ++i) prefix[i] = i;
            t.subsets.push_back(std::move(prefix));
        }
        out.push_back(std::move(t));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

struct Tiling {
    HyperBox box;
    std::vector<Tile> tiles;
};

struct TilingViolation {
    enum class Kind { TileShape, Overlap, Gap };
    Kind kind;
    std::string message;
    std::size_t tile_a = static_cast<std::size_t>(-1);
    std::size_t tile_b = static_cast<std::size_t>(-1);
};

struct VerifyResult {
    bool ok = true;
    std::optional<TilingViolation> violation;
};

// Checks, in order: every tile is well-formed (sigma a permutation,
// subset sizes sigma(s)_F, coordinates in range, sorted), tiles are
// pairwise disjoint, and the union covers the box. Violations are
// reported, not thrown.
inline VerifyResult verify_tiling(const Tiling& t) {
    const HyperBox& box = t.box;
    const Sequence& f = box.sequence();
    const std::size_t m = box.dimension_count();

    auto shape_violation = [](std::size_t i, const std::string& msg) {
        VerifyResult r;
        r.ok = false;
        r.violation = TilingViolation{TilingViolation::Kind::TileShape, msg, i,
                                      static_cast<std::size_t>(-1)};
        return r;
    };

    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        const Tile& tile = t.tiles[i];
        if (tile.sigma.size() != m || tile.subsets.size() != m) {
            return shape_violation(i, "tile " + std::to_string(i) + " has wrong dimension count");
        }
        std::vector<bool> seen(m, false);
        for (std::size_t v : tile.sigma) {
            if (v < 1 || v > m || seen[v - 1]) {
                return shape_violation(i, "tile " + std::to_string(i) + " sigma is not a permutation of 1..m");
            }
            seen[v - 1] = true;
        }
        for (std::size_t d = 0; d < m; ++d) {
            const auto& a = tile.subsets[d];
            if (Nat(a.size()) != f.value(tile.sigma[d])) {
                return shape_violation(i, "tile " + std::to_string(i) + " subset size in dimension " +
                                              std::to_string(d) + " is not sigma(s)_F");
            }
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (j > 0 && a[j] <= a[j - 1]) {
                    return shape_violation(i, "tile " + std::to_string(i) + " subset in dimension " +
                                                  std::to_string(d) + " is not strictly ascending");
                }
                if (Nat(a[j]) >= box.extent(d)) {
                    return shape_violation(i, "tile " + std::to_string(i) + " coordinate out of range in dimension " +
                                                  std::to_string(d));
                }
            }
        }
    }

    // ranks are the box enumeration positions; the map stays ordered so a
    // cover gap can be located without walking the whole box
    std::map<Nat, std::size_t> owner;
    std::vector<Nat> weights(m, Nat(1));
    for (std::size_t d = 1; d < m; ++d) weights[d] = weights[d - 1] * box.extent(d - 1);
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        bool overlap = false;
        std::size_t other = 0;
        Nat where(0);
        for_each_tile_cell(t.tiles[i], [&](const std::vector<std::size_t>& coords) {
            if (overlap) return;
            Nat rank(0);
            for (std::size_t d = 0; d < m; ++d) rank += Nat(coords[d]) * weights[d];
            auto [it, inserted] = owner.emplace(rank, i);
            if (!inserted) {
                overlap = true;
                other = it->second;
                where = rank;
            }
        });
        if (overlap) {
            VerifyResult r;
            r.ok = false;
            r.violation = TilingViolation{TilingViolation::Kind::Overlap,
                                          "tiles " + std::to_string(other) + " and " + std::to_string(i) +
                                              " overlap at rank " + where.str(),
                                          other, i};
            return r;
        }
    }

    if (Nat(owner.size()) != box.cardinality()) {
        Nat expected(0);
        for (const auto& [rank, idx] : owner) {
            if (rank != expected) break;
            ++expected;
        }
        VerifyResult r;
        r.ok = false;
        r.violation = TilingViolation{TilingViolation::Kind::Gap,
                                      "box point of rank " + expected.str() + " is not covered",
                                      static_cast<std::size_t>(-1), static_cast<std::size_t>(-1)};
        return r;
    }
    return VerifyResult{};
}

struct TilingOptions {
    // Exhaustive search guard: boxes with more points are rejected. Raise
    // deliberately; the tiling count grows combinatorially.
    std::size_t max_points = 64;
    bool intervals_only = false;
};

namespace detail {

// Exhaustive search over an explicit extent vector. Canonical branch
// rule: take the least uncovered point (in enumeration order) and try,
// in a fixed order, every admissible tile containing it. Each tiling is
// therefore produced exactly once, in a deterministic order.
class ProductTilingSearch {
public:
    using TileSubsets = std::vector<std::vector<std::size_t>>;
    using Callback = std::function<bool(const std::vector<TileSubsets>&)>;

    ProductTilingSearch(std::vector<std::size_t> extents, std::vector<std::size_t> sizes,
                        bool intervals_only)
        : extents_(std::move(extents)), intervals_only_(intervals_only) {
        std::sort(sizes.begin(), sizes.end());
        do {
            size_vectors_.push_back(sizes);
        } while (std::next_permutation(sizes.begin(), sizes.end()));

        const std::size_t m = extents_.size();
        strides_.assign(m, 1);
        total_ = 1;
        for (std::size_t d = 0; d < m; ++d) {
            if (d > 0) strides_[d] = strides_[d - 1] * extents_[d - 1];
            total_ *= extents_[d];
        }
        covered_.assign(total_, false);
    }

    void run(const Callback& cb) {
        covered_.assign(total_, false);
        covered_count_ = 0;
        placed_.clear();
        node(cb);
    }

private:
    bool node(const Callback& cb) {
        if (covered_count_ == total_) return cb(placed_);
        std::size_t pivot = 0;
        while (covered_[pivot]) ++pivot;

        const std::size_t m = extents_.size();
        std::vector<std::size_t> coords(m);
        for (std::size_t d = 0; d < m; ++d) coords[d] = (pivot / strides_[d]) % extents_[d];

        std::vector<std::vector<std::vector<std::size_t>>> candidates(m);
        TileSubsets chosen(m);
        for (const auto& sizes : size_vectors_) {
            bool fits = true;
            for (std::size_t d = 0; d < m; ++d) {
                if (sizes[d] > extents_[d]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            for (std::size_t d = 0; d < m; ++d) {
                candidates[d] = subsets_containing(extents_[d], coords[d], sizes[d]);
            }
            if (!descend(0, candidates, chosen, cb)) return false;
        }
        return true;
    }

    bool descend(std::size_t d, const std::vector<std::vector<std::vector<std::size_t>>>& candidates,
                 TileSubsets& chosen, const Callback& cb) {
        const std::size_t m = extents_.size();
        if (d == m) return place_and_recurse(chosen, cb);
        for (const auto& subset : candidates[d]) {
            chosen[d] = subset;
            if (!descend(d + 1, candidates, chosen, cb)) return false;
        }
        return true;
    }

    bool place_and_recurse(const TileSubsets& chosen, const Callback& cb) {
        const std::size_t m = extents_.size();
        std::vector<std::size_t> cells;
        std::vector<std::size_t> idx(m, 0);
        bool blocked = false;
        while (true) {
            std::size_t rank = 0;
            for (std::size_t d = 0; d < m; ++d) rank += chosen[d][idx[d]] * strides_[d];
            if (covered_[rank]) {
                blocked = true;
                break;
            }
            cells.push_back(rank);
            std::size_t d = 0;
            while (d < m && ++idx[d] == chosen[d].size()) {
                idx[d] = 0;
                ++d;
            }
            if (d == m) break;
        }
        if (blocked) return true; // skip this candidate, keep searching

        for (std::size_t r : cells) covered_[r] = true;
        covered_count_ += cells.size();
        placed_.push_back(chosen);
        const bool keep_going = node(cb);
        placed_.pop_back();
        covered_count_ -= cells.size();
        for (std::size_t r : cells) covered_[r] = false;
        return keep_going;
    }

    // All size-w subsets of {0..extent-1} that contain c, in a fixed
    // deterministic order.
    std::vector<std::vector<std::size_t>> subsets_containing(std::size_t extent, std::size_t c,
                                                             std::size_t w) const {
        std::vector<std::vector<std::size_t>> out;
        if (w == 0 || w > extent) return out;
        if (intervals_only_) {
            const std::size_t lo = c + 1 >= w ? c + 1 - w : 0;
            const std::size_t hi = std::min(c, extent - w);
            for (std::size_t a = lo; a <= hi; ++a) {
                std::vector<std::size_t> run(w);
                for (std::size_t i = 0; i < w; ++i) run[i] = a + i;
                out.push_back(std::move(run));
            }
            return out;
        }
        std::vector<std::size_t> others;
        others.reserve(extent - 1);
        for (std::size_t v = 0; v < extent; ++v) {
            if (v != c) others.push_back(v);
        }
        std::vector<std::size_t> pick;
        const std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (pick.size() + 1 == w) {
                std::vector<std::size_t> subset;
                subset.reserve(w);
                bool placed_c = false;
                for (std::size_t v : pick) {
                    if (!placed_c && c < v) {
                        subset.push_back(c);
                        placed_c = true;
                    }
                    subset.push_back(v);
                }
                if (!placed_c) subset.push_back(c);
                out.push_back(std::move(subset));
                return;
            }
            for (std::size_t i = start; i < others.size(); ++i) {
                pick.push_back(others[i]);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
        return out;
    }

    std::vector<std::size_t> extents_;
    bool intervals_only_;
    std::vector<std::vector<std::size_t>> size_vectors_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
    std::vector<char> covered_;
    std::size_t covered_count_ = 0;
    std::vector<TileSubsets> placed_;
};

// Lexicographically smallest permutation of 1..m realizing the given
// per-dimension sizes.
inline std::vector<std::size_t> sigma_for_sizes(const Sequence& f, const std::vector<std::size_t>& sizes) {
    const std::size_t m = sizes.size();
    std::vector<bool> used(m + 1, false);
    std::vector<std::size_t> sigma(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
        bool found = false;
        for (std::size_t j = 1; j <= m; ++j) {
            if (!used[j] && f.value(j) == sizes[s]) {
                sigma[s] = j;
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) throw Error("tile sizes do not realize the size multiset");
    }
    return sigma;
}

inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> search_inputs(
    const HyperBox& box, const TilingOptions& opts) {
    if (box.cardinality() > opts.max_points) {
        throw SearchLimitExceeded("box has " + box.cardinality().str() +
                                  " points, over the search limit of " + std::to_string(opts.max_points));
    }
    const std::size_t m = box.dimension_count();
    std::vector<std::size_t> extents;
    extents.reserve(m);
    for (std::size_t d = 0; d < m; ++d) extents.push_back(to_index(box.extent(d), "box extent"));
    std::vector<std::size_t> sizes;
    sizes.reserve(m);
    for (std::size_t s = 1; s <= m; ++s) sizes.push_back(to_index(box.sequence().value(s), "tile size"));
    return {std::move(extents), std::move(sizes)};
}

} // namespace detail

// Streams every tiling in canonical order; fn may return false to stop.
inline void for_each_tiling(const HyperBox& box, const TilingOptions& opts,
                            const std::function<bool(const Tiling&)>& fn) {
    auto [extents, sizes] = detail::search_inputs(box, opts);
    detail::ProductTilingSearch search(std::move(extents), std::move(sizes), opts.intervals_only);
    const Sequence& f = box.sequence();
    search.run([&](const std::vector<detail::ProductTilingSearch::TileSubsets>& placed) {
        Tiling t{box, {}};
        t.tiles.reserve(placed.size());
        for (const auto& subsets : placed) {
            std::vector<std::size_t> tile_sizes;
            tile_sizes.reserve(subsets.size());
            for (const auto& a : subsets) tile_sizes.push_back(a.size());
            t.tiles.push_back(Tile{detail::sigma_for_sizes(f, tile_sizes), subsets});
        }
        return fn(t);
    });
}

inline std::vector<Tiling> enumerate_tilings(const HyperBox& box, const TilingOptions& opts = {}) {
    std::vector<Tiling> out;
    for_each_tiling(box, opts, [&](const Tiling& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

inline Nat count_tilings(const HyperBox& box, const TilingOptions& opts = {}) {
    auto [extents, sizes] = detail::search_inputs(box, opts);
    detail::ProductTilingSearch search(std::move(extents), std::move(sizes), opts.intervals_only);
    Nat count(0);
    search.run([&](const auto&) {
        ++count;
        return true;
    });
    return count;
}

// |box| / m_F!, the number of tiles in any tiling of the box.
inline Nat tiles_per_tiling(const HyperBox& box) {
    const Nat card = box.cardinality();
    const Nat block = f_factorial(box.sequence(), box.dimension_count());
    if (card % block != 0) {
        throw NonDivisible("box cardinality " + card.str() + " is not divisible by " + block.str());
    }
    return card / block;
}

// --- rendering ---------------------------------------------------------

namespace detail {

// Maps each cell rank to the index of the tile covering it (-1 for none).
inline std::vector<std::size_t> cell_owner_grid(const Tiling& t,
                                                const std::vector<std::size_t>& extents) {
    std::size_t total = 1;
    for (std::size_t e : extents) total *= e;
    std::vector<std::size_t> strides(extents.size(), 1);
    for (std::size_t d = 1; d < extents.size(); ++d) strides[d] = strides[d - 1] * extents[d - 1];
    std::vector<std::size_t> owner(total, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        for_each_tile_cell(t.tiles[i], [&](const std::vector<std::size_t>& coords) {
            std::size_t rank = 0;
            for (std::size_t d = 0; d < coords.size(); ++d) rank += coords[d] * strides[d];
            owner[rank] = i;
        });
    }
    return owner;
}

} // namespace detail

// Text grid for boxes of dimension <= 2. Dimension 0 runs left to right,
// dimension 1 bottom to top; each cell shows the index of its tile.
inline std::string render_text_grid(const Tiling& t) {
    const std::size_t m = t.box.dimension_count();
    if (m > 2) throw UnsupportedDimension("text grid rendering supports at most 2 dimensions");
    std::vector<std::size_t> extents;
    for (std::size_t d = 0; d < m; ++d) extents.push_back(to_index(t.box.extent(d), "render extent"));
    const std::size_t nx = m >= 1 ? extents[0] : 1;
    const std::size_t ny = m == 2 ? extents[1] : 1;

    const std::vector<std::size_t> owner = detail::cell_owner_grid(t, extents);
    const std::size_t label_width =
        t.tiles.empty() ? 1 : std::to_string(t.tiles.size() - 1).size();

    std::ostringstream os;
    for (std::size_t row = ny; row-- > 0;) {
        for (std::size_t col = 0; col < nx; ++col) {
            if (col) os << ' ';
            const std::size_t idx = owner[row * nx + col];
            std::string label = idx == static_cast<std::size_t>(-1) ? "." : std::to_string(idx);
            os << std::string(label.size() < label_width ? label_width - label.size() : 0, ' ') << label;
        }
        os << '\n';
    }
    return os.str();
}

// SVG for boxes of dimension <= 3; the third dimension becomes a row of
// panels. Colors are assigned deterministically from the tile index.
inline std::string render_svg(const Tiling& t) {
    const std::size_t m = t.box.dimension_count();
    if (m > 3) throw UnsupportedDimension("svg rendering supports at most 3 dimensions");
    std::vector<std::size_t> extents;
    for (std::size_t d = 0; d < m; ++d) extents.push_back(to_index(t.box.extent(d), "render extent"));
    const std::size_t nx = m >= 1 ? extents[0] : 1;
    const std::size_t ny = m >= 2 ? extents[1] : 1;
    const std::size_t nz = m == 3 ? extents[2] : 1;

    const std::vector<std::size_t> owner = detail::cell_owner_grid(t, extents);

    constexpr std::size_t cell = 28;
    constexpr std::size_t margin = 10;
    constexpr std::size_t panel_gap = 20;
    const std::size_t width = 2 * margin + nz * nx * cell + (nz - 1) * panel_gap;
    const std::size_t height = 2 * margin + ny * cell;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\">\n";
    for (std::size_t z = 0; z < nz; ++z) {
        const std::size_t panel_x = margin + z * (nx * cell + panel_gap);
        for (std::size_t y = 0; y < ny; ++y) {
            for (std::size_t x = 0; x < nx; ++x) {
                const std::size_t rank = x + nx * (y + ny * z);
                const std::size_t idx = owner[rank];
                const std::size_t hue = idx == static_cast<std::size_t>(-1) ? 0 : (idx * 137) % 360;
                const std::string fill = idx == static_cast<std::size_t>(-1)
                                             ? std::string("none")
                                             : "hsl(" + std::to_string(hue) + ",62%,68%)";
                const std::size_t px = panel_x + x * cell;
                const std::size_t py = margin + (ny - 1 - y) * cell;
                os << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\""
                   << cell << "\" fill=\"" << fill << "\" stroke=\"#333\"/>\n";
                if (idx != static_cast<std::size_t>(-1)) {
                    os << "  <text x=\"" << px + cell / 2 << "\" y=\"" << py + cell / 2 + 4
                       << "\" font-size=\"10\" text-anchor=\"middle\">" << idx << "</text>\n";
                }
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace fbase
