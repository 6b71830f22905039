#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>

#include "tabinv/filling.hpp"
#include "tabinv/qpoly.hpp"

// m-dimensional Dyck paths: the bijection with m-row standard Young
// tableaux, d-degree return-to-ground statistics, ballot numbers, return
// tables, and the path-based route to xi(q).
//
// Coordinate j corresponds to tableau row j, so every prefix point is a
// partition (x_1 >= x_2 >= ... >= x_m); step t increments coordinate
// steps[t-1].

namespace tabinv {

struct DyckPath {
    std::vector<int> steps;   // 1-based coordinate incremented at each step
    std::vector<int> target;  // final point (lambda_1, ..., lambda_m)

    int dims() const { return static_cast<int>(target.size()); }
    int length() const { return static_cast<int>(steps.size()); }

    bool operator==(const DyckPath&) const = default;
};

struct ReturnProfile {
    std::vector<long> k;  // k[d-1] = number of d-degree returns, d = 1..m-1

    bool operator==(const ReturnProfile&) const = default;
    auto operator<=>(const ReturnProfile&) const = default;
};

bool is_valid_path(const DyckPath& p);

DyckPath syt_to_path(const Filling& T);
Filling path_to_syt(const DyckPath& p);

// Degree of the return to ground created by step t (1-based); 0 when the
// step creates no return.
int return_degree(const DyckPath& p, int t);
ReturnProfile return_profile(const DyckPath& p);
long full_returns(const DyckPath& p);

// Every path of the given target exactly once, lexicographic by step
// sequence; empty when the target is not a partition.
void enumerate_paths(const std::vector<int>& target,
                     const std::function<void(const DyckPath&)>& yield);
std::vector<DyckPath> enumerate_paths(const std::vector<int>& target);

mpz_class ballot(long alpha, long beta);  // 0 outside 0 <= beta <= alpha
std::vector<std::vector<mpz_class>> catalan_triangle(int rows);

std::map<ReturnProfile, mpz_class> return_table(const Shape& shape, int cap = 14,
                                                bool force = false);
std::map<long, mpz_class> full_return_table(const Shape& shape, int cap = 14,
                                            bool force = false);

// Diagnostic: dep(k) in T equals the return degree at v_k of the path.
bool depth_profile_equivalence(const Filling& T);

// Sum over profiles of |D_lambda(k)| prod_j [j+1]_q^{k_j}.
QPolynomial xi_via_returns(const Shape& shape, int cap = 14, bool force = false);

}  // namespace tabinv
