#include "tabinv/tableau.hpp"

#include <algorithm>
#include <tuple>

namespace tabinv {

int HeightAssignment::row_at(int j, int height) const {
    const auto& col = heights[j - 1];
    for (std::size_t t = 0; t < col.size(); ++t)
        if (col[t] == height) return static_cast<int>(t) + 1;
    throw std::out_of_range("height_order: no cell with that height");
}

bool is_row_standard(const Filling& f) {
    for (const auto& r : f.rows())
        for (std::size_t i = 1; i < r.size(); ++i)
            if (r[i - 1] >= r[i]) return false;
    return true;
}

namespace {

bool columns_monotone(const Filling& f, bool strict) {
    const auto& rows = f.rows();
    for (std::size_t i = 1; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int above = rows[i - 1][j], here = rows[i][j];
            if (strict ? above >= here : above > here) return false;
        }
    return true;
}

void require_row_standard(const Filling& f) {
    if (!is_row_standard(f)) throw std::invalid_argument("filling is not row-standard");
}

void require_semistandard(const Filling& f) {
    if (!is_semistandard(f)) throw std::invalid_argument("filling is not semistandard");
}

}  // namespace

bool is_column_semistandard(const Filling& f) { return columns_monotone(f, false); }
bool is_column_standard(const Filling& f) { return columns_monotone(f, true); }
bool is_semistandard(const Filling& f) {
    return is_row_standard(f) && is_column_semistandard(f);
}
bool is_standard(const Filling& f) {
    return is_row_standard(f) && is_column_standard(f) && f.content().is_standard();
}

HeightAssignment height_order(const Filling& f) {
    require_row_standard(f);
    Shape sh = f.shape();
    int ncols = sh.num_cols();
    HeightAssignment H;
    H.heights.assign(ncols, {});
    for (int j = ncols; j >= 1; --j) {
        int h = sh.col_height(j);
        int h_right = j < ncols ? sh.col_height(j + 1) : 0;
        // Rows with a right neighbor are the prefix 1..h_right; they precede
        // the neighborless tail, which stays in vertical order.
        std::vector<int> order(h_right);
        for (int r = 0; r < h_right; ++r) order[r] = r + 1;
        std::stable_sort(order.begin(), order.end(), [&](int r1, int r2) {
            int v1 = f.at(r1, j + 1), v2 = f.at(r2, j + 1);
            if (v1 != v2) return v1 < v2;
            return H.heights[j][r1 - 1] < H.heights[j][r2 - 1];
        });
        for (int r = h_right + 1; r <= h; ++r) order.push_back(r);
        H.heights[j - 1].assign(h, 0);
        for (int k = 0; k < h; ++k) H.heights[j - 1][order[k] - 1] = k + 1;
    }
    return H;
}

std::vector<InversionPair> inversion_pairs(const Filling& f) {
    HeightAssignment H = height_order(f);
    Shape sh = f.shape();
    std::vector<InversionPair> out;
    for (int j = 1; j <= sh.num_cols(); ++j) {
        int h = sh.col_height(j);
        for (int r1 = 1; r1 <= h; ++r1)
            for (int r2 = 1; r2 <= h; ++r2) {
                if (r1 == r2) continue;
                CellRef a{r1, j}, b{r2, j};
                if (f.at(a) < f.at(b) && H.height_of(b) < H.height_of(a))
                    out.push_back({a, b, j});
            }
    }
    std::sort(out.begin(), out.end(), [&](const InversionPair& x, const InversionPair& y) {
        return std::make_tuple(-x.column, f.at(x.larger), f.at(x.smaller),
                               H.height_of(x.larger), H.height_of(x.smaller)) <
               std::make_tuple(-y.column, f.at(y.larger), f.at(y.smaller),
                               H.height_of(y.larger), H.height_of(y.smaller));
    });
    return out;
}

long inversion_count(const Filling& f) {
    return static_cast<long>(inversion_pairs(f).size());
}

Filling standardize(const Filling& f) {
    require_row_standard(f);
    auto rows = f.rows();
    Shape sh = f.shape();
    for (int j = 1; j <= sh.num_cols(); ++j) {
        std::vector<int> col = f.column(j);
        std::sort(col.begin(), col.end());
        for (std::size_t t = 0; t < col.size(); ++t) rows[t][j - 1] = col[t];
    }
    return Filling(std::move(rows));
}

namespace {

Filling lift_to_standard_content(const Filling& f) {
    HeightAssignment H = height_order(f);
    Content mu = f.content();
    Shape sh = f.shape();
    // cells of each value, ordered by leftward column first, then height order
    std::vector<std::vector<CellRef>> by_value(mu.num_values());
    for (int j = 1; j <= sh.num_cols(); ++j)
        for (int r = 1; r <= sh.col_height(j); ++r)
            by_value[f.at(r, j) - 1].push_back({r, j});
    auto rows = f.rows();
    int offset = 0;
    for (int v = 0; v < mu.num_values(); ++v) {
        auto& cells = by_value[v];
        std::sort(cells.begin(), cells.end(), [&](CellRef a, CellRef b) {
            if (a.col != b.col) return a.col < b.col;
            return H.height_of(a) < H.height_of(b);
        });
        for (std::size_t k = 0; k < cells.size(); ++k)
            rows[cells[k].row - 1][cells[k].col - 1] = offset + static_cast<int>(k) + 1;
        offset += mu.counts[v];
    }
    return Filling(std::move(rows));
}

}  // namespace

std::pair<Filling, Filling> content_lift(const Filling& T, const Filling& tau) {
    if (standardize(tau) != T)
        throw std::invalid_argument("content_lift: standardize(tau) != T");
    return {lift_to_standard_content(T), lift_to_standard_content(tau)};
}

std::vector<InversionPair> standardized_inversion_pairs(const Filling& f) {
    HeightAssignment H = height_order(f);
    auto to_std = [&](CellRef c) {
        // in the standardization the column is sorted, so the cell holding
        // the t-th instance of value v sits below all smaller entries
        int v = f.at(c);
        std::vector<int> col = f.column(c.col);
        int smaller = 0, instance = 0;
        for (int r = 1; r <= static_cast<int>(col.size()); ++r) {
            if (col[r - 1] < v) ++smaller;
            if (col[r - 1] == v && H.heights[c.col - 1][r - 1] < H.height_of(c)) ++instance;
        }
        return CellRef{smaller + instance + 1, c.col};
    };
    std::vector<InversionPair> out = inversion_pairs(f);
    for (auto& p : out) {
        p.smaller = to_std(p.smaller);
        p.larger = to_std(p.larger);
    }
    return out;
}

namespace {

int depth_subtrahend(const Filling& T, CellRef c) {
    int v = T.at(c);
    Shape sh = T.shape();
    if (c.col >= sh.num_cols() || sh.col_height(c.col + 1) == 0) return 0;
    // entries <= v in the next column block that many upward moves: rows are
    // strictly increasing, so v cannot end up to their left
    int count = 0;
    for (int e : T.column(c.col + 1))
        if (e <= v) ++count;
    return count;
}

}  // namespace

int inversion_depth(const Filling& T, CellRef c) {
    require_semistandard(T);
    int v = T.at(c);
    int below = 0;
    for (int e : T.column(c.col))
        if (e < v) ++below;
    return below - depth_subtrahend(T, c);
}

int modified_inversion_depth(const Filling& T, CellRef c) {
    require_semistandard(T);
    return (c.row - 1) - depth_subtrahend(T, c);
}

Filling apply_transposition(const Filling& f, int j, int i1, int i2) {
    if (!f.has_cell(i1, j) || !f.has_cell(i2, j))
        throw std::out_of_range("transposition: cell out of range");
    if (f.at(i1, j) == f.at(i2, j))
        throw std::invalid_argument("transposition: equal values");
    HeightAssignment H = height_order(f);
    if (std::abs(H.height_of({i1, j}) - H.height_of({i2, j})) != 1)
        throw std::invalid_argument("transposition: entries not height-adjacent");
    auto rows = f.rows();
    for (int c = 0; c < j; ++c) std::swap(rows[i1 - 1][c], rows[i2 - 1][c]);
    return Filling(std::move(rows));
}

bool is_admissible(const Filling& f, int j, int i1, int i2) {
    return is_row_standard(apply_transposition(f, j, i1, i2));
}

Filling build_from_inversions(const Filling& T, const std::vector<InversionPair>& S) {
    require_semistandard(T);
    for (const auto& p : S) {
        if (!T.has_cell(p.smaller) || !T.has_cell(p.larger) || p.smaller.col != p.column ||
            p.larger.col != p.column)
            throw invalid_inversion_set("pair cells do not lie in the stated column of T");
        if (T.at(p.smaller) >= T.at(p.larger))
            throw invalid_inversion_set("pair values not strictly increasing");
    }

    Filling tau = T;
    Shape sh = T.shape();
    // track which original T cell each current cell carries
    std::vector<std::vector<CellRef>> ids(sh.num_rows());
    for (int r = 1; r <= sh.num_rows(); ++r)
        for (int c = 1; c <= sh.parts[r - 1]; ++c) ids[r - 1].push_back({r, c});

    auto swap_prefix = [&](int j, int r1, int r2) {
        tau = apply_transposition(tau, j, r1, r2);
        for (int c = 0; c < j; ++c) std::swap(ids[r1 - 1][c], ids[r2 - 1][c]);
    };
    auto current_row_of = [&](CellRef orig) {
        for (int r = 1; r <= sh.col_height(orig.col); ++r)
            if (ids[r - 1][orig.col - 1] == orig) return r;
        throw std::logic_error("build_from_inversions: lost track of a cell");
    };

    for (int j = sh.num_cols(); j >= 1; --j) {
        for (int i = 1; i <= sh.col_height(j); ++i) {
            CellRef e{i, j};
            std::vector<CellRef> wanted;  // smaller partners scheduled for e
            for (const auto& p : S)
                if (p.larger == e) wanted.push_back(p.smaller);
            while (!wanted.empty()) {
                HeightAssignment H = height_order(tau);
                int re = current_row_of(e);
                int he = H.heights[j - 1][re - 1];
                if (he == 1)
                    throw invalid_inversion_set("too many inversions scheduled for an entry");
                int rp = H.row_at(j, he - 1);
                CellRef partner = ids[rp - 1][j - 1];
                auto it = std::find(wanted.begin(), wanted.end(), partner);
                if (it == wanted.end())
                    throw invalid_inversion_set("scheduled pair set is inconsistent");
                wanted.erase(it);
                if (!is_admissible(tau, j, re, rp))
                    throw invalid_inversion_set("required transposition is inadmissible");
                swap_prefix(j, re, rp);
            }
        }
    }
    return tau;
}

}  // namespace tabinv
