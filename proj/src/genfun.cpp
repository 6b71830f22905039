#include "tabinv/genfun.hpp"

#include <algorithm>
#include <map>

#include "tabinv/dyck.hpp"
#include "tabinv/tableau.hpp"

namespace tabinv {

namespace {

mpz_class binom(long n, long k) {
    if (k == 0) return 1;  // covers the binom(-1, 0) = 1 convention
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void require_semistandard(const Filling& T) {
    if (!is_semistandard(T)) throw std::invalid_argument("chi: T is not semistandard");
}

}  // namespace

QPolynomial chi(const Filling& T) {
    require_semistandard(T);
    Shape sh = T.shape();
    QPolynomial num = QPolynomial::one();
    QPolynomial den = QPolynomial::one();
    for (int j = 1; j <= sh.num_cols(); ++j)
        for (int r = 1; r <= sh.col_height(j); ++r) {
            CellRef c{r, j};
            int dep = inversion_depth(T, c);
            int depm = modified_inversion_depth(T, c);
            num *= q_number(depm + 1);
            den *= q_number(depm - dep + 1);
        }
    return exact_div(num, den);
}

QPolynomial chi_by_columns(const Filling& T) {
    require_semistandard(T);
    Shape sh = T.shape();
    QPolynomial out = QPolynomial::one();
    for (int j = 1; j <= sh.num_cols(); ++j) {
        std::vector<int> col = T.column(j);
        for (std::size_t t = 0; t < col.size(); ++t) {
            if (t > 0 && col[t] == col[t - 1]) continue;  // one factor per distinct value
            int ck = static_cast<int>(std::count(col.begin(), col.end(), col[t]));
            int dep = inversion_depth(T, {static_cast<int>(t) + 1, j});
            out *= q_binomial(dep + ck, ck);
        }
    }
    return out;
}

QPolynomial xi_by_sum(const Shape& shape, const Content& content) {
    if (shape.size() != content.size())
        throw std::invalid_argument("xi_by_sum: |lambda| != sum(mu)");
    QPolynomial sum;
    gen_semistandard(shape, content, [&](const Filling& T) { sum += chi(T); });
    return sum;
}

QPolynomial xi_by_sum_parallel(const Shape& shape, const Content& content) {
    if (shape.size() != content.size())
        throw std::invalid_argument("xi_by_sum: |lambda| != sum(mu)");
    std::vector<Filling> standardizations = gen_semistandard(shape, content);
    int n = static_cast<int>(standardizations.size());
    QPolynomial sum;
#pragma omp parallel
    {
        QPolynomial local;
#pragma omp for schedule(dynamic)
        for (int i = 0; i < n; ++i) local += chi(standardizations[i]);
#pragma omp critical(tabinv_xi_merge)
        sum += local;
    }
    return sum;
}

mpz_class two_row_count(long a, long b, long m, long k) {
    if (a < b) throw std::invalid_argument("two_row_count: a < b");
    if (b < 1 || m < 0 || k < 0) throw std::invalid_argument("two_row_count: bad arguments");
    long r = b - k - m;
    if (r < 0 || r > a + b - 2 * m) return 0;
    mpz_class val = mpz_class(a - b + 1 + 2 * k) * binom(a + b - 2 * m, r);
    mpz_class den = a + 1 + k - m;
    if (val % den != 0) throw std::logic_error("two_row_count: non-integral value");
    return val / den;
}

QPolynomial two_row_xi(long a, long b, const Content& content) {
    if (content.size() != a + b)
        throw std::invalid_argument("two_row_xi: |lambda| != sum(mu)");
    long m = 0;
    for (int c : content.counts) {
        if (c > 2) return {};  // no row-standard filling exists
        if (c == 2) ++m;
    }
    std::vector<mpz_class> coeffs;
    for (long k = 0; k <= b - m; ++k) coeffs.push_back(two_row_count(a, b, m, k));
    return QPolynomial(std::move(coeffs));
}

QPolynomial two_row_rect_xi(long n) {
    if (n < 1) throw std::invalid_argument("two_row_rect_xi: n < 1");
    QPolynomial sum;
    QPolynomial one_plus_q = q_number(2);
    for (long i = 1; i <= n; ++i)
        sum += QPolynomial::constant(ballot(n - 1, n - i)) * one_plus_q.pow(static_cast<int>(i));
    return sum;
}

mpz_class psi(const std::vector<long>& alpha) {
    for (long a : alpha)
        if (a < 0) throw std::invalid_argument("psi: negative multiplicity");
    long total = 0;
    for (long a : alpha) total += a;
    if (!alpha.empty() && alpha[0] == 0 && total > 0) return 0;  // c_1 = 0 forces alpha_0 > 0
    mpz_class p = 1;
    for (std::size_t i = 1; i < alpha.size(); ++i) {
        p *= binom(alpha[i] + alpha[i - 1] - 1, alpha[i]);
        if (p == 0) return 0;
    }
    return p;
}

QPolynomial two_col_rect_xi(long n) {
    if (n < 1) throw std::invalid_argument("two_col_rect_xi: n < 1");
    QPolynomial inner;
    std::vector<long> alpha(n, 0);
    auto recurse = [&](auto&& self, long i, long left) -> void {
        if (i == n - 1) {
            alpha[i] = left;
            mpz_class p = psi(alpha);
            if (p != 0) {
                QPolynomial term = QPolynomial::constant(p);
                for (long j = 1; j < n; ++j)
                    term *= q_number(static_cast<int>(j) + 1).pow(static_cast<int>(alpha[j]));
                inner += term;
            }
            return;
        }
        for (long v = left; v >= 0; --v) {
            alpha[i] = v;
            self(self, i + 1, left - v);
        }
    };
    recurse(recurse, 0, n);
    return q_factorial(static_cast<int>(n)) * inner;
}

std::vector<std::vector<int>> depth_sequences(int n, int m) {
    if (n < 1 || m < 0 || m > n) throw std::invalid_argument("depth_sequences: bad shape");
    std::vector<std::vector<int>> out;
    std::vector<int> c(n);
    auto recurse = [&](auto&& self, int i) -> void {  // i is 1-based position
        if (i > n) {
            out.push_back(c);
            return;
        }
        int lo = i > m ? i - m - 1 : 0;  // tail condition c_i >= i-m-1
        int hi = i == 1 ? 0 : c[i - 2] + 1;
        for (int v = lo; v <= hi; ++v) {
            c[i - 1] = v;
            self(self, i + 1);
        }
    };
    recurse(recurse, 1);
    return out;
}

Filling tableau_from_depths(const std::vector<int>& c, int m) {
    int n = static_cast<int>(c.size());
    if (n < 1 || m < 0 || m > n) throw std::invalid_argument("tableau_from_depths: bad shape");
    for (int i = 1; i <= n; ++i) {
        bool ok = c[i - 1] >= 0 && (i == 1 ? c[0] == 0 : c[i - 1] <= c[i - 2] + 1) &&
                  (i <= m || c[i - 1] >= i - m - 1);
        if (!ok) throw std::invalid_argument("tableau_from_depths: invalid sequence for shape");
    }
    std::vector<int> first(n);
    std::vector<bool> used(n + m + 1, false);
    for (int i = 1; i <= n; ++i) {
        first[i - 1] = 2 * i - 1 - c[i - 1];
        used[first[i - 1]] = true;
    }
    std::vector<int> second;
    for (int v = 1; v <= n + m; ++v)
        if (!used[v]) second.push_back(v);
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < n; ++i) {
        if (i < m)
            rows.push_back({first[i], second[i]});
        else
            rows.push_back({first[i]});
    }
    return Filling(std::move(rows));
}

std::vector<int> first_column_depths(const Filling& T) {
    Shape sh = T.shape();
    if (sh.num_cols() > 2) throw std::invalid_argument("first_column_depths: not two-column");
    std::vector<int> out;
    for (int r = 1; r <= sh.col_height(1); ++r) out.push_back(inversion_depth(T, {r, 1}));
    return out;
}

long max_inversions(const Shape& shape, const Content& content) {
    if (shape.size() != content.size())
        throw std::invalid_argument("max_inversions: |lambda| != sum(mu)");
    auto tri = [](long k) { return k * (k + 1) / 2; };
    long M = 0;
    for (int j = 1; j <= shape.num_cols(); ++j) M += tri(shape.col_height(j) - 1);
    for (int mu : content.counts) M -= tri(mu - 1);
    return M;
}

}  // namespace tabinv
