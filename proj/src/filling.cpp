#include "tabinv/filling.hpp"

#include <numeric>
#include <sstream>

namespace tabinv {

Shape::Shape(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("shape: empty partition");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("shape: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("shape: parts must be non-increasing");
    }
}

int Shape::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Shape::col_height(int j) const {
    int h = 0;
    for (int p : parts)
        if (p >= j) ++h;
    return h;
}

Content::Content(std::vector<int> c) : counts(std::move(c)) {
    if (counts.empty()) throw std::invalid_argument("content: empty");
    for (int x : counts)
        if (x < 1) throw std::invalid_argument("content: counts must be positive");
}

Content Content::standard(int n) { return Content(std::vector<int>(n, 1)); }

int Content::size() const { return std::accumulate(counts.begin(), counts.end(), 0); }

bool Content::is_standard() const {
    for (int x : counts)
        if (x != 1) return false;
    return true;
}

Filling::Filling(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("filling: no rows");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw std::invalid_argument("filling: empty row");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            throw std::invalid_argument("filling: row lengths must be non-increasing");
        for (int v : rows_[i])
            if (v < 1) throw std::invalid_argument("filling: entries must be positive");
    }
}

Shape Filling::shape() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Shape(p);
}

Content Filling::content() const {
    int max_v = 0;
    for (const auto& r : rows_)
        for (int v : r) max_v = std::max(max_v, v);
    std::vector<int> counts(max_v, 0);
    for (const auto& r : rows_)
        for (int v : r) ++counts[v - 1];
    for (int c : counts)
        if (c == 0) throw std::invalid_argument("filling: content skips a value");
    return Content(counts);
}

int Filling::size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

bool Filling::has_cell(int row, int col) const {
    return row >= 1 && row <= static_cast<int>(rows_.size()) && col >= 1 &&
           col <= static_cast<int>(rows_[row - 1].size());
}

int Filling::at(int row, int col) const {
    if (!has_cell(row, col)) throw std::out_of_range("filling: no such cell");
    return rows_[row - 1][col - 1];
}

int& Filling::at(int row, int col) {
    if (!has_cell(row, col)) throw std::out_of_range("filling: no such cell");
    return rows_[row - 1][col - 1];
}

std::vector<int> Filling::column(int j) const {
    std::vector<int> out;
    for (const auto& r : rows_) {
        if (static_cast<int>(r.size()) < j) break;
        out.push_back(r[j - 1]);
    }
    if (out.empty()) throw std::out_of_range("filling: no such column");
    return out;
}

Filling parse_filling_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("filling: bad token in \"" + line + "\"");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return Filling(std::move(rows));
}

std::string filling_to_text(const Filling& f) {
    std::ostringstream out;
    for (const auto& r : f.rows()) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << "\n";
    }
    return out.str();
}

namespace {

// "4,4,3,2" with optional "p^rep" exponents; used for both shapes and contents
std::vector<std::pair<int, int>> parse_caret_list(const std::string& s) {
    std::vector<std::pair<int, int>> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty token in \"" + s + "\"");
        int base = 0, exp = 1;
        auto caret = tok.find('^');
        try {
            std::size_t used = 0;
            base = std::stoi(tok.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? tok.size() : caret))
                throw std::invalid_argument(tok);
            if (caret != std::string::npos) {
                exp = std::stoi(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw std::invalid_argument(tok);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad token \"" + tok + "\" in \"" + s + "\"");
        }
        out.emplace_back(base, exp);
    }
    if (out.empty()) throw std::invalid_argument("empty list \"" + s + "\"");
    return out;
}

}  // namespace

Shape parse_shape(const std::string& s) {
    std::vector<int> parts;
    for (auto [base, exp] : parse_caret_list(s)) {
        if (exp < 1) throw std::invalid_argument("shape: bad exponent in \"" + s + "\"");
        for (int i = 0; i < exp; ++i) parts.push_back(base);
    }
    return Shape(std::move(parts));
}

Content parse_content(const std::string& s) {
    // "1^2,2^2,3" lists value^multiplicity with values 1..M in order
    std::vector<int> counts;
    int expected = 1;
    for (auto [value, mult] : parse_caret_list(s)) {
        if (value != expected++)
            throw std::invalid_argument("content: values must be 1..M in order in \"" + s + "\"");
        counts.push_back(mult);
    }
    return Content(std::move(counts));
}

}  // namespace tabinv
