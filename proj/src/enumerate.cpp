#include "tabinv/enumerate.hpp"

#include <algorithm>

#include "tabinv/tableau.hpp"

namespace tabinv {

mpz_class InversionHistogram::total() const {
    mpz_class t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
}

namespace {

struct SemistandardGen {
    const Shape& shape;
    std::vector<int> remaining;  // per-value counts left to place
    std::vector<std::vector<int>> rows;
    const std::function<void(const Filling&)>& yield;

    void place(int r, int c) {  // 0-based cell in row-major order
        if (r == shape.num_rows()) {
            yield(Filling(rows));
            return;
        }
        auto [nr, nc] = c + 1 < shape.parts[r] ? std::pair{r, c + 1} : std::pair{r + 1, 0};
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1] + 1);            // row-standard
        if (r > 0 && c < shape.parts[r - 1]) lo = std::max(lo, rows[r - 1][c]);  // column-semistandard
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            rows[r].push_back(v);
            place(nr, nc);
            rows[r].pop_back();
            ++remaining[v - 1];
        }
    }
};

}  // namespace

void gen_semistandard(const Shape& shape, const Content& content,
                      const std::function<void(const Filling&)>& yield) {
    if (shape.size() != content.size())
        throw std::invalid_argument("gen_semistandard: |lambda| != sum(mu)");
    SemistandardGen g{shape, content.counts, {}, yield};
    g.rows.resize(shape.num_rows());
    for (auto& r : g.rows) r.reserve(shape.num_cols());
    g.place(0, 0);
}

std::vector<Filling> gen_semistandard(const Shape& shape, const Content& content) {
    std::vector<Filling> out;
    gen_semistandard(shape, content, [&](const Filling& f) { out.push_back(f); });
    return out;
}

std::vector<Filling> gen_standard(const Shape& shape) {
    return gen_semistandard(shape, Content::standard(shape.size()));
}

void gen_inverted_with_standardization(const Filling& T,
                                       const std::function<void(const Filling&)>& yield) {
    if (!is_semistandard(T))
        throw std::invalid_argument("gen_inverted_with_standardization: T not semistandard");
    Shape sh = T.shape();
    int ncols = sh.num_cols();
    std::vector<std::vector<int>> chosen(ncols);  // chosen arrangement per column

    // Columns are fixed right-to-left; a candidate arrangement for column j
    // only has to respect row-standardness against column j+1.
    auto recurse = [&](auto&& self, int j) -> void {
        if (j == 0) {
            std::vector<std::vector<int>> rows(sh.num_rows());
            for (int r = 0; r < sh.num_rows(); ++r)
                for (int c = 0; c < sh.parts[r]; ++c) rows[r].push_back(chosen[c][r]);
            yield(Filling(std::move(rows)));
            return;
        }
        std::vector<int> col = T.column(j);
        std::sort(col.begin(), col.end());
        int h_right = j < ncols ? sh.col_height(j + 1) : 0;
        do {
            bool ok = true;
            for (int r = 0; r < h_right && ok; ++r)
                if (col[r] >= chosen[j][r]) ok = false;
            if (ok) {
                chosen[j - 1] = col;
                self(self, j - 1);
            }
        } while (std::next_permutation(col.begin(), col.end()));
    };
    recurse(recurse, ncols);
}

std::vector<Filling> gen_inverted_with_standardization(const Filling& T) {
    std::vector<Filling> out;
    gen_inverted_with_standardization(T, [&](const Filling& f) { out.push_back(f); });
    return out;
}

namespace {

void check_cap(const Shape& shape, const Content& content, int cap, bool force) {
    if (shape.size() != content.size())
        throw std::invalid_argument("histogram: |lambda| != sum(mu)");
    if (!force && shape.size() > cap) throw cap_exceeded(shape.size(), cap);
}

void accumulate_standardization(const Filling& T, std::map<int, mpz_class>& counts) {
    gen_inverted_with_standardization(
        T, [&](const Filling& tau) { counts[static_cast<int>(inversion_count(tau))] += 1; });
}

}  // namespace

InversionHistogram histogram(const Shape& shape, const Content& content, int cap, bool force) {
    check_cap(shape, content, cap, force);
    InversionHistogram h;
    gen_semistandard(shape, content,
                     [&](const Filling& T) { accumulate_standardization(T, h.counts); });
    return h;
}

InversionHistogram histogram_parallel(const Shape& shape, const Content& content, int cap,
                                      bool force) {
    check_cap(shape, content, cap, force);
    std::vector<Filling> standardizations = gen_semistandard(shape, content);
    int n = static_cast<int>(standardizations.size());
    InversionHistogram h;
#pragma omp parallel
    {
        std::map<int, mpz_class> local;
#pragma omp for schedule(dynamic)
        for (int i = 0; i < n; ++i) accumulate_standardization(standardizations[i], local);
#pragma omp critical(tabinv_histogram_merge)
        for (const auto& [k, c] : local) h.counts[k] += c;
    }
    return h;
}

}  // namespace tabinv
