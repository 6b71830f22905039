#pragma once

#include <utility>
#include <vector>

#include "tabinv/filling.hpp"

// Raw combinatorial definitions on fillings: standardness predicates, the
// height order, inversion pairs, standardization, inversion depths, and
// admissible partial row transpositions.

namespace tabinv {

struct invalid_inversion_set : std::runtime_error {
    explicit invalid_inversion_set(const std::string& why)
        : std::runtime_error("invalid inversion set for T: " + why) {}
};

// Per column j (1-based): heights[j-1][t] is the height (1..h_j) of the cell
// in row t+1 of that column.
struct HeightAssignment {
    std::vector<std::vector<int>> heights;

    int height_of(CellRef c) const { return heights[c.col - 1][c.row - 1]; }
    // row (1-based) of the cell with the given height in column j
    int row_at(int j, int height) const;
};

struct InversionPair {
    CellRef smaller;
    CellRef larger;
    int column = 0;  // 1-based; both cells lie in this column

    bool operator==(const InversionPair&) const = default;
};

bool is_row_standard(const Filling& f);
bool is_column_semistandard(const Filling& f);
bool is_column_standard(const Filling& f);
bool is_semistandard(const Filling& f);  // row-standard + column-semistandard
bool is_standard(const Filling& f);      // semistandard + standard content

// One right-to-left pass over columns; rejects non-row-standard input.
HeightAssignment height_order(const Filling& f);

// Entry-specific pairs, with multiplicity, in canonical order:
// (column desc, value(larger), value(smaller), height(larger), height(smaller)).
std::vector<InversionPair> inversion_pairs(const Filling& f);
long inversion_count(const Filling& f);

Filling standardize(const Filling& f);

// Inversion pairs of f re-addressed to cells of standardize(f): each entry is
// identified by (column, value, instance among equal values in height order),
// which pins down a unique cell of the standardization.
std::vector<InversionPair> standardized_inversion_pairs(const Filling& f);

// Re-index both tableaux to standard content via the leftward-column-then-
// height order; preserves inversion count and pair structure.
std::pair<Filling, Filling> content_lift(const Filling& T, const Filling& tau);

int inversion_depth(const Filling& T, CellRef c);           // dep
int modified_inversion_depth(const Filling& T, CellRef c);  // dep~

// Swap rows i1, i2 from column j leftward.  Requires existing cells, distinct
// values, and height-adjacency in column j.
Filling apply_transposition(const Filling& f, int j, int i1, int i2);
bool is_admissible(const Filling& f, int j, int i1, int i2);

// Realize the unique tableau with standardization T and entry-specific
// inversion multiset S, one admissible transposition per pair.  Throws
// invalid_inversion_set when S is not realizable.
Filling build_from_inversions(const Filling& T, const std::vector<InversionPair>& S);

}  // namespace tabinv
