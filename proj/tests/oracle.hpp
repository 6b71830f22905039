#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "tabinv/filling.hpp"

// Test-only brute-force oracles, kept independent of the library's
// height-order implementation path.

namespace oracle {

using tabinv::CellRef;
using tabinv::Content;
using tabinv::Filling;
using tabinv::Shape;

// Inversion pair per the raw walk-right definition: (smaller cell, larger
// cell) in one column whose values disagree with the first discernible
// rightward order.
using RawPair = std::tuple<int, CellRef, CellRef>;  // (column, smaller, larger)

inline bool raw_is_inversion(const Filling& f, int col, int r_small, int r_large) {
    // cells (r_small, col) and (r_large, col) with value(small) < value(large)
    for (int k = 1;; ++k) {
        bool small_has = f.has_cell(r_small, col + k);
        bool large_has = f.has_cell(r_large, col + k);
        if (!small_has || !large_has) return r_small > r_large;  // smaller appears below
        int vs = f.at(r_small, col + k), vl = f.at(r_large, col + k);
        if (vs != vl) return vs > vl;
    }
}

inline std::vector<RawPair> raw_inversion_pairs(const Filling& f) {
    std::vector<RawPair> out;
    Shape sh = f.shape();
    for (int j = 1; j <= sh.num_cols(); ++j) {
        int h = sh.col_height(j);
        for (int r1 = 1; r1 <= h; ++r1)
            for (int r2 = 1; r2 <= h; ++r2)
                if (f.at(r1, j) < f.at(r2, j) && raw_is_inversion(f, j, r1, r2))
                    out.push_back({j, {r1, j}, {r2, j}});
    }
    return out;
}

// Every row-standard filling of the given shape and content, no column
// condition of any kind.
inline void all_row_standard(const Shape& shape, const Content& content,
                             const std::function<void(const Filling&)>& yield) {
    std::vector<int> remaining = content.counts;
    std::vector<std::vector<int>> rows(shape.num_rows());
    auto place = [&](auto&& self, int r, int c) -> void {
        if (r == shape.num_rows()) {
            yield(Filling(rows));
            return;
        }
        auto [nr, nc] = c + 1 < shape.parts[r] ? std::pair{r, c + 1} : std::pair{r + 1, 0};
        int lo = c > 0 ? rows[r][c - 1] + 1 : 1;
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            rows[r].push_back(v);
            self(self, nr, nc);
            rows[r].pop_back();
            ++remaining[v - 1];
        }
    };
    place(place, 0, 0);
}

// Inversion histogram from the raw definition alone.
inline std::map<int, mpz_class> raw_histogram(const Shape& shape, const Content& content) {
    std::map<int, mpz_class> counts;
    all_row_standard(shape, content, [&](const Filling& f) {
        counts[static_cast<int>(raw_inversion_pairs(f).size())] += 1;
    });
    return counts;
}

// Number of standard Young tableaux via the hook length formula.
inline mpz_class hook_length_count(const Shape& shape) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(shape.size()));
    mpz_class den = 1;
    for (int r = 1; r <= shape.num_rows(); ++r)
        for (int c = 1; c <= shape.parts[r - 1]; ++c) {
            int hook = (shape.parts[r - 1] - c) + (shape.col_height(c) - r) + 1;
            den *= hook;
        }
    if (num % den != 0) throw std::logic_error("hook_length_count: non-integral");
    return num / den;
}

// All partitions of n, largest part first, in reverse-lexicographic order.
inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// All compositions of n into positive parts (content vectors of total n).
inline std::vector<std::vector<int>> compositions_of(int n, int max_part = 1 << 30) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= std::min(left, max_part); ++p) {
            cur.push_back(p);
            self(self, left - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace oracle
