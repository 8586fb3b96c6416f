#pragma once
// Layered digraphs whose consecutive levels are completely bi-connected:
// the cover digraph of a cobweb poset, its layers, and permuted variants.

#include <fbase/bignum.hpp>
#include <fbase/error.hpp>
#include <fbase/sequence.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace fbase {

// A point <position, level> with 1 <= position <= (width of the level).
struct Vertex {
    std::size_t level = 0;
    std::size_t position = 1;

    friend bool operator==(const Vertex& a, const Vertex& b) {
        return a.level == b.level && a.position == b.position;
    }
    friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
};

// The cobweb order: anything on a lower level precedes everything on a
// higher one; vertices on the same level are comparable only to themselves.
inline bool poset_leq(const Vertex& x, const Vertex& y) {
    return x.level < y.level || (x.level == y.level && x.position == y.position);
}

// Explicit vertex/arc representation of a run of consecutive levels with
// every pair of neighbouring levels joined by a complete bipartite arc
// block (arcs point upward only, so the digraph is acyclic).
class LevelDigraph {
public:
    struct Arc {
        Vertex from;
        Vertex to;
        friend bool operator==(const Arc& a, const Arc& b) { return a.from == b.from && a.to == b.to; }
    };

    LevelDigraph(Sequence sequence, std::size_t first_level, std::vector<std::size_t> widths)
        : sequence_(std::move(sequence)), first_level_(first_level), widths_(std::move(widths)) {
        for (std::size_t w : widths_) {
            if (w < 1) throw InvalidRange("digraph level widths must be >= 1");
        }
        std::size_t arc_total = 0;
        for (std::size_t i = 0; i + 1 < widths_.size(); ++i) arc_total += widths_[i] * widths_[i + 1];
        arcs_.reserve(arc_total);
        for (std::size_t i = 0; i + 1 < widths_.size(); ++i) {
            const std::size_t s = first_level_ + i;
            for (std::size_t j = 1; j <= widths_[i]; ++j) {
                for (std::size_t t = 1; t <= widths_[i + 1]; ++t) {
                    arcs_.push_back(Arc{Vertex{s, j}, Vertex{s + 1, t}});
                }
            }
        }
    }

    // Levels 0..n of the poset designated by f; level 0 takes the
    // one-point root convention when the sequence stores 0 there.
    static LevelDigraph cobweb(Sequence f, std::size_t n) {
        std::vector<std::size_t> widths;
        widths.reserve(n + 1);
        for (std::size_t s = 0; s <= n; ++s) widths.push_back(to_index(f.level_width(s), "level width"));
        return LevelDigraph(std::move(f), 0, std::move(widths));
    }

    // Levels k..n only (the layer between them); requires k >= 1 so every
    // width comes straight from the sequence.
    static LevelDigraph layer(Sequence f, std::size_t k, std::size_t n) {
        if (k < 1 || n < k) throw InvalidRange("layer requires 1 <= k <= n");
        std::vector<std::size_t> widths;
        widths.reserve(n - k + 1);
        for (std::size_t s = k; s <= n; ++s) widths.push_back(to_index(f.value(s), "level width"));
        return LevelDigraph(std::move(f), k, std::move(widths));
    }

    // Levels 1..m with the width of level s equal to sigma(s)_F, where
    // sigma permutes {1..m}. Total vertex count is permutation-invariant.
    static LevelDigraph permuted_layer(Sequence f, std::size_t m, const std::vector<std::size_t>& sigma) {
        if (sigma.size() != m) throw InvalidPermutation("permutation length must equal the level count");
        std::vector<bool> seen(m, false);
        for (std::size_t v : sigma) {
            if (v < 1 || v > m || seen[v - 1]) throw InvalidPermutation("not a permutation of 1..m");
            seen[v - 1] = true;
        }
        std::vector<std::size_t> widths;
        widths.reserve(m);
        for (std::size_t s = 0; s < m; ++s) widths.push_back(to_index(f.value(sigma[s]), "level width"));
        return LevelDigraph(std::move(f), 1, std::move(widths));
    }

    const Sequence& sequence() const { return sequence_; }
    std::size_t first_level() const { return first_level_; }
    std::size_t last_level() const { return first_level_ + widths_.size() - 1; }
    std::size_t level_count() const { return widths_.size(); }

    // Width of the absolute level s.
    std::size_t width(std::size_t s) const {
        if (s < first_level_ || s > last_level()) throw InvalidRange("level out of range");
        return widths_[s - first_level_];
    }

    const std::vector<std::size_t>& widths() const { return widths_; }

    std::size_t vertex_count() const {
        return std::accumulate(widths_.begin(), widths_.end(), std::size_t{0});
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        out.reserve(vertex_count());
        for (std::size_t i = 0; i < widths_.size(); ++i) {
            for (std::size_t j = 1; j <= widths_[i]; ++j) out.push_back(Vertex{first_level_ + i, j});
        }
        return out;
    }

    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t arc_count() const { return arcs_.size(); }

    // Number of paths from the first level to the last, counted by a
    // literal depth-first walk over the stored arcs. Exponential in the
    // graph; meant as the graph-side route for cross-checking the product
    // formula on small inputs.
    Nat count_paths_dfs() const {
        if (widths_.size() == 1) return Nat(vertex_count());
        // adjacency grouped per level for the walk
        std::vector<std::vector<std::vector<Vertex>>> next(widths_.size());
        for (std::size_t i = 0; i + 1 < widths_.size(); ++i) next[i].resize(widths_[i] + 1);
        for (const Arc& a : arcs_) {
            next[a.from.level - first_level_][a.from.position].push_back(a.to);
        }
        Nat total(0);
        for (std::size_t j = 1; j <= widths_[0]; ++j) {
            walk(Vertex{first_level_, j}, next, total);
        }
        return total;
    }

    // One node per vertex labelled "position:level"; levels drawn as
    // same-rank groups.
    std::string to_dot() const {
        std::ostringstream os;
        os << "digraph cobweb {\n";
        os << "  rankdir=BT;\n";
        os << "  node [shape=circle];\n";
        for (std::size_t i = 0; i < widths_.size(); ++i) {
            os << "  { rank=same;";
            for (std::size_t j = 1; j <= widths_[i]; ++j) {
                os << " \"" << j << ":" << (first_level_ + i) << "\";";
            }
            os << " }\n";
        }
        for (const Arc& a : arcs_) {
            os << "  \"" << a.from.position << ":" << a.from.level << "\" -> \"" << a.to.position << ":"
               << a.to.level << "\";\n";
        }
        os << "}\n";
        return os.str();
    }

private:
    void walk(const Vertex& v, const std::vector<std::vector<std::vector<Vertex>>>& next, Nat& total) const {
        const std::size_t i = v.level - first_level_;
        if (i + 1 == widths_.size()) {
            ++total;
            return;
        }
        for (const Vertex& w : next[i][v.position]) walk(w, next, total);
    }

    Sequence sequence_;
    std::size_t first_level_;
    std::vector<std::size_t> widths_;
    std::vector<Arc> arcs_;
};

inline LevelDigraph build_hasse(Sequence f, std::size_t n) {
    return LevelDigraph::cobweb(std::move(f), n);
}

inline LevelDigraph permuted_subposet(Sequence f, std::size_t m, const std::vector<std::size_t>& sigma) {
    return LevelDigraph::permuted_layer(std::move(f), m, sigma);
}

} // namespace fbase
