#pragma once
// Test-only reference implementations. Each one is coded independently of
// the library path it cross-checks: triangle recurrences instead of
// factorial quotients, plain base conversion, subset search, and a
// bitmask exact-cover counter instead of the streaming tiling search.

#include <fbase/bignum.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

using fbase::Nat;

// Pascal triangle by the additive recurrence.
inline std::vector<std::vector<Nat>> pascal_triangle(std::size_t max_n) {
    std::vector<std::vector<Nat>> c(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        c[n].assign(n + 1, Nat(1));
        for (std::size_t k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
    return c;
}

// Fibonomial triangle by the recurrence
//   C(n, k) = F(n-k+1) C(n-1, k-1) + F(k-1) C(n-1, k)
// over the classical Fibonacci numbers F(0) = 0, F(1) = F(2) = 1.
inline std::vector<std::vector<Nat>> fibonomial_triangle(std::size_t max_n) {
    std::vector<Nat> fib(max_n + 2, Nat(0));
    if (max_n + 1 >= 1) fib[1] = 1;
    for (std::size_t i = 2; i < fib.size(); ++i) fib[i] = fib[i - 1] + fib[i - 2];
    std::vector<std::vector<Nat>> c(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        c[n].assign(n + 1, Nat(1));
        for (std::size_t k = 1; k < n; ++k) {
            c[n][k] = fib[n - k + 1] * c[n - 1][k - 1] + fib[k - 1] * c[n - 1][k];
        }
    }
    return c;
}

// Gaussian binomial [n k]_q by the q-Pascal recurrence
//   [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q.
inline std::vector<std::vector<Nat>> gaussian_binomial_table(unsigned q, std::size_t max_n) {
    std::vector<std::vector<Nat>> c(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        c[n].assign(n + 1, Nat(1));
        for (std::size_t k = 1; k < n; ++k) {
            Nat qk(1);
            for (std::size_t i = 0; i < k; ++i) qk *= q;
            c[n][k] = c[n - 1][k - 1] + qk * c[n - 1][k];
        }
    }
    return c;
}

// Plain base-p digits of alpha, least significant first.
inline std::vector<Nat> base_p_digits(Nat alpha, const Nat& p) {
    std::vector<Nat> digits;
    while (alpha > 0) {
        digits.push_back(alpha % p);
        alpha /= p;
    }
    return digits;
}

// Number of ways to write alpha as a sum of distinct values from the
// Fibonacci list 1, 2, 3, 5, ... with no two consecutive list entries.
// Exhaustive subset scan; used to confirm uniqueness for small alpha.
inline std::size_t count_nonconsecutive_fib_representations(const Nat& alpha) {
    std::vector<Nat> values;
    {
        Nat a(1), b(2);
        while (a <= alpha) {
            values.push_back(a);
            const Nat next = a + b;
            a = b;
            b = next;
        }
    }
    std::size_t hits = 0;
    const std::size_t subsets = static_cast<std::size_t>(1) << values.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        if (mask & (mask << 1)) continue; // consecutive entries
        Nat sum(0);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (mask & (static_cast<std::size_t>(1) << i)) sum += values[i];
        }
        if (sum == alpha) ++hits;
    }
    if (alpha == 0) hits = 1; // the empty subset
    return hits;
}

// Brute-force exact-cover count: materialize every admissible product
// tile as a bitmask over the box cells, then count exact covers by
// always branching on the lowest uncovered cell.
class ExactCoverTilings {
public:
    ExactCoverTilings(const std::vector<std::size_t>& extents, std::vector<std::size_t> sizes,
                      bool intervals_only) {
        total_ = 1;
        for (std::size_t e : extents) total_ *= e;
        if (total_ > 63) throw std::runtime_error("oracle supports at most 63 cells");
        build_candidates(extents, std::move(sizes), intervals_only);
    }

    std::uint64_t count() const {
        if (total_ == 0) return 0;
        return covers(0);
    }

private:
    void build_candidates(const std::vector<std::size_t>& extents, std::vector<std::size_t> sizes,
                          bool intervals_only) {
        const std::size_t m = extents.size();
        if (m == 0) {
            candidates_.push_back(1); // the single empty-product cell
            return;
        }
        std::sort(sizes.begin(), sizes.end());
        std::vector<std::size_t> strides(m, 1);
        for (std::size_t d = 1; d < m; ++d) strides[d] = strides[d - 1] * extents[d - 1];
        do {
            bool fits = true;
            for (std::size_t d = 0; d < m; ++d) {
                if (sizes[d] > extents[d]) fits = false;
            }
            if (!fits) continue;
            // per-dimension subsets as coordinate lists
            std::vector<std::vector<std::vector<std::size_t>>> dim_choices(m);
            for (std::size_t d = 0; d < m; ++d) {
                dim_choices[d] = subsets_of(extents[d], sizes[d], intervals_only);
            }
            std::vector<std::size_t> pick(m, 0);
            while (true) {
                std::uint64_t mask = 0;
                std::vector<std::size_t> idx(m, 0);
                while (true) {
                    std::size_t cell = 0;
                    for (std::size_t d = 0; d < m; ++d) cell += dim_choices[d][pick[d]][idx[d]] * strides[d];
                    mask |= std::uint64_t(1) << cell;
                    std::size_t d = 0;
                    while (d < m && ++idx[d] == dim_choices[d][pick[d]].size()) {
                        idx[d] = 0;
                        ++d;
                    }
                    if (d == m) break;
                }
                candidates_.push_back(mask);
                std::size_t d = 0;
                while (d < m && ++pick[d] == dim_choices[d].size()) {
                    pick[d] = 0;
                    ++d;
                }
                if (d == m) break;
            }
        } while (std::next_permutation(sizes.begin(), sizes.end()));
    }

    static std::vector<std::vector<std::size_t>> subsets_of(std::size_t extent, std::size_t size,
                                                            bool intervals_only) {
        std::vector<std::vector<std::size_t>> out;
        if (size > extent) return out;
        if (intervals_only) {
            for (std::size_t a = 0; a + size <= extent; ++a) {
                std::vector<std::size_t> run(size);
                for (std::size_t i = 0; i < size; ++i) run[i] = a + i;
                out.push_back(std::move(run));
            }
            return out;
        }
        // all size-subsets of {0..extent-1} via bit counting
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << extent); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
            std::vector<std::size_t> subset;
            for (std::size_t v = 0; v < extent; ++v) {
                if (mask & (std::uint64_t(1) << v)) subset.push_back(v);
            }
            out.push_back(std::move(subset));
        }
        return out;
    }

    std::uint64_t covers(std::uint64_t covered) const {
        const std::uint64_t full = total_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << total_) - 1;
        if (covered == full) return 1;
        std::size_t lowest = 0;
        while (covered & (std::uint64_t(1) << lowest)) ++lowest;
        std::uint64_t ways = 0;
        for (std::uint64_t mask : candidates_) {
            if (!(mask & (std::uint64_t(1) << lowest))) continue;
            if (mask & covered) continue;
            ways += covers(covered | mask);
        }
        return ways;
    }

    std::size_t total_ = 0;
    std::vector<std::uint64_t> candidates_;
};

inline std::uint64_t exact_cover_tiling_count(const std::vector<std::size_t>& extents,
                                              const std::vector<std::size_t>& sizes,
                                              bool intervals_only = false) {
    return ExactCoverTilings(extents, sizes, intervals_only).count();
}

} // namespace oracle
