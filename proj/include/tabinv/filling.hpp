#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Basic tableau carriers: partition shapes, content vectors, and ragged
// integer fillings.  Cell references are 1-based (row, column) throughout
// the public interface.

namespace tabinv {

struct Shape {
    std::vector<int> parts;  // row lengths, non-increasing, all >= 1

    Shape() = default;
    explicit Shape(std::vector<int> p);

    int num_rows() const { return static_cast<int>(parts.size()); }
    int num_cols() const { return parts.empty() ? 0 : parts.front(); }
    int size() const;
    // number of cells in column j (1-based)
    int col_height(int j) const;

    bool operator==(const Shape&) const = default;
};

struct Content {
    std::vector<int> counts;  // counts[v-1] = multiplicity of value v, all >= 1

    Content() = default;
    explicit Content(std::vector<int> c);
    static Content standard(int n);

    int num_values() const { return static_cast<int>(counts.size()); }
    int size() const;
    bool is_standard() const;

    bool operator==(const Content&) const = default;
};

struct CellRef {
    int row = 0;  // 1-based
    int col = 0;  // 1-based

    bool operator==(const CellRef&) const = default;
    auto operator<=>(const CellRef&) const = default;
};

class Filling {
public:
    Filling() = default;
    explicit Filling(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Shape shape() const;
    Content content() const;  // throws if a value is skipped
    int size() const;

    bool has_cell(int row, int col) const;  // 1-based
    bool has_cell(CellRef c) const { return has_cell(c.row, c.col); }
    int at(int row, int col) const;
    int at(CellRef c) const { return at(c.row, c.col); }
    int& at(int row, int col);

    // entries of column j (1-based), top to bottom
    std::vector<int> column(int j) const;

    bool operator==(const Filling&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Text form: one row per line, entries space-separated, top row first.
Filling parse_filling_text(const std::string& text);
std::string filling_to_text(const Filling& f);

Shape parse_shape(const std::string& s);    // "4,4,3,2" or "2^3" or "2^2,1^3"
Content parse_content(const std::string& s);  // "1^2,2^2,3"

}  // namespace tabinv
