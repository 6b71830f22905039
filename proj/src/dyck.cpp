#include "tabinv/dyck.hpp"

#include <algorithm>

#include "tabinv/enumerate.hpp"
#include "tabinv/tableau.hpp"

namespace tabinv {

namespace {

bool is_partition_target(const std::vector<int>& t) {
    if (t.empty()) return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 1) return false;
        if (i > 0 && t[i] > t[i - 1]) return false;
    }
    return true;
}

std::vector<int> prefix_point(const DyckPath& p, int t) {
    std::vector<int> x(p.dims(), 0);
    for (int s = 0; s < t; ++s) ++x[p.steps[s] - 1];
    return x;
}

}  // namespace

bool is_valid_path(const DyckPath& p) {
    if (!is_partition_target(p.target)) return false;
    int m = p.dims();
    std::vector<int> x(m, 0);
    for (int step : p.steps) {
        if (step < 1 || step > m) return false;
        int j = step - 1;
        ++x[j];
        if (x[j] > p.target[j]) return false;
        if (j > 0 && x[j] > x[j - 1]) return false;  // prefixes stay partitions
    }
    for (int j = 0; j < m; ++j)
        if (x[j] != p.target[j]) return false;
    return true;
}

DyckPath syt_to_path(const Filling& T) {
    if (!is_standard(T)) throw std::invalid_argument("syt_to_path: T not standard");
    Shape sh = T.shape();
    DyckPath p;
    p.target = sh.parts;
    p.steps.assign(T.size(), 0);
    for (int r = 1; r <= sh.num_rows(); ++r)
        for (int c = 1; c <= sh.parts[r - 1]; ++c) p.steps[T.at(r, c) - 1] = r;
    return p;
}

Filling path_to_syt(const DyckPath& p) {
    if (!is_valid_path(p)) throw std::invalid_argument("path_to_syt: invalid path");
    std::vector<std::vector<int>> rows(p.dims());
    for (int t = 1; t <= p.length(); ++t) rows[p.steps[t - 1] - 1].push_back(t);
    return Filling(std::move(rows));
}

int return_degree(const DyckPath& p, int t) {
    std::vector<int> x = prefix_point(p, t);
    int g = p.steps[t - 1];  // 1-based coordinate incremented by step t
    int d = 0;
    while (g - d - 1 >= 1 && x[g - d - 2] == x[g - 1]) ++d;
    return d;
}

ReturnProfile return_profile(const DyckPath& p) {
    ReturnProfile rp;
    rp.k.assign(std::max(p.dims() - 1, 0), 0);
    for (int t = 1; t <= p.length(); ++t) {
        int d = return_degree(p, t);
        if (d >= 1) ++rp.k[d - 1];
    }
    return rp;
}

long full_returns(const DyckPath& p) {
    int m = p.dims();
    if (m < 2) return 0;
    long count = 0;
    for (int t = 1; t <= p.length(); ++t)
        if (p.steps[t - 1] == m && return_degree(p, t) == m - 1) ++count;
    return count;
}

void enumerate_paths(const std::vector<int>& target,
                     const std::function<void(const DyckPath&)>& yield) {
    if (!is_partition_target(target)) return;
    int m = static_cast<int>(target.size());
    DyckPath p;
    p.target = target;
    std::vector<int> x(m, 0);
    int total = 0;
    for (int t : target) total += t;
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(p.steps.size()) == total) {
            yield(p);
            return;
        }
        for (int j = 1; j <= m; ++j) {
            if (x[j - 1] >= target[j - 1]) continue;
            if (j > 1 && x[j - 1] + 1 > x[j - 2]) continue;
            ++x[j - 1];
            p.steps.push_back(j);
            self(self);
            p.steps.pop_back();
            --x[j - 1];
        }
    };
    recurse(recurse);
}

std::vector<DyckPath> enumerate_paths(const std::vector<int>& target) {
    std::vector<DyckPath> out;
    enumerate_paths(target, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

mpz_class ballot(long alpha, long beta) {
    if (alpha < 0 || beta < 0 || beta > alpha) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(alpha + beta),
                 static_cast<unsigned long>(alpha));
    mpz_class val = mpz_class(alpha - beta + 1) * b;
    if (val % (alpha + 1) != 0) throw std::logic_error("ballot: non-integral value");
    return val / (alpha + 1);
}

std::vector<std::vector<mpz_class>> catalan_triangle(int rows) {
    std::vector<std::vector<mpz_class>> t;
    for (int a = 0; a < rows; ++a) {
        std::vector<mpz_class> row;
        for (int b = 0; b <= a; ++b) row.push_back(ballot(a, b));
        t.push_back(std::move(row));
    }
    return t;
}

namespace {
void check_cap(const Shape& shape, int cap, bool force) {
    if (!force && shape.size() > cap) throw cap_exceeded(shape.size(), cap);
}
}  // namespace

std::map<ReturnProfile, mpz_class> return_table(const Shape& shape, int cap, bool force) {
    check_cap(shape, cap, force);
    std::map<ReturnProfile, mpz_class> table;
    enumerate_paths(shape.parts, [&](const DyckPath& p) { table[return_profile(p)] += 1; });
    return table;
}

std::map<long, mpz_class> full_return_table(const Shape& shape, int cap, bool force) {
    check_cap(shape, cap, force);
    std::map<long, mpz_class> table;
    enumerate_paths(shape.parts, [&](const DyckPath& p) { table[full_returns(p)] += 1; });
    return table;
}

bool depth_profile_equivalence(const Filling& T) {
    DyckPath p = syt_to_path(T);
    Shape sh = T.shape();
    for (int r = 1; r <= sh.num_rows(); ++r)
        for (int c = 1; c <= sh.parts[r - 1]; ++c) {
            int k = T.at(r, c);
            if (inversion_depth(T, {r, c}) != return_degree(p, k)) return false;
        }
    return true;
}

QPolynomial xi_via_returns(const Shape& shape, int cap, bool force) {
    QPolynomial sum;
    for (const auto& [profile, count] : return_table(shape, cap, force)) {
        QPolynomial term = QPolynomial::constant(count);
        for (std::size_t d = 1; d <= profile.k.size(); ++d)
            term *= q_number(static_cast<int>(d) + 1).pow(static_cast<int>(profile.k[d - 1]));
        sum += term;
    }
    return sum;
}

}  // namespace tabinv
