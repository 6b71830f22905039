#pragma once

#include <gmpxx.h>

#include "tabinv/enumerate.hpp"
#include "tabinv/filling.hpp"
#include "tabinv/qpoly.hpp"

// Generating functions and closed enumeration formulas: chi^T(q), xi(q) by
// summation over standardizations, the two-row closed form, the two-column
// rectangular form with psi, depth-sequence bijections, and the maximal
// inversion number.

namespace tabinv {

// Inversion-count generating function for the inverted tableaux that
// standardize to T, as an exact quotient of q-number products.
QPolynomial chi(const Filling& T);
// Independent route: product of per-column, per-value Gaussian binomials.
QPolynomial chi_by_columns(const Filling& T);

// Sum of chi(T) over all standardizations.  Serial reference and OpenMP
// kernel with an associative polynomial-sum reduction; identical output.
QPolynomial xi_by_sum(const Shape& shape, const Content& content);
QPolynomial xi_by_sum_parallel(const Shape& shape, const Content& content);

// |S_k(lambda,mu)| for the two-row shape lambda=(a,b) when mu has m doubled
// values and the rest single.  Contents with any multiplicity >= 3 admit no
// row-standard filling; callers should map those to zero counts.
mpz_class two_row_count(long a, long b, long m, long k);
// Full generating function for a two-row shape; mult3 contents give zero.
QPolynomial two_row_xi(long a, long b, const Content& content);

// xi for lambda=(n,n), standard content, via ballot numbers.
QPolynomial two_row_rect_xi(long n);

// Number of valid two-column depth sequences with alpha_k instances of k.
mpz_class psi(const std::vector<long>& alpha);

// xi for lambda=2^n, standard content, via the psi formula.
QPolynomial two_col_rect_xi(long n);

// Valid first-column inversion-depth sequences for shape 2^m 1^{n-m}
// (rectangular when m == n), in lexicographic order.
std::vector<std::vector<int>> depth_sequences(int n, int m);
// The unique standard tableau of shape 2^m 1^{n-m} with the given
// first-column depths.
Filling tableau_from_depths(const std::vector<int>& c, int m);
// First-column inversion depths of a two-column standard tableau.
std::vector<int> first_column_depths(const Filling& T);

// Maximal inversion number M_{lambda,mu}, via triangle numbers.
long max_inversions(const Shape& shape, const Content& content);

}  // namespace tabinv
