#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tabinv/enumerate.hpp"
#include "tabinv/genfun.hpp"
#include "tabinv/tableau.hpp"

using namespace tabinv;

namespace {

QPolynomial poly(std::vector<long> cs) {
    std::vector<mpz_class> z(cs.begin(), cs.end());
    return QPolynomial(std::move(z));
}

QPolynomial hist_poly(const InversionHistogram& h) {
    QPolynomial p;
    for (const auto& [k, c] : h.counts) {
        std::vector<mpz_class> term(k + 1, mpz_class(0));
        term[k] = c;
        p += QPolynomial(std::move(term));
    }
    return p;
}

// generating function of I^T computed straight from inversion counts
QPolynomial chi_brute(const Filling& T) {
    QPolynomial p;
    gen_inverted_with_standardization(T, [&](const Filling& tau) {
        int k = static_cast<int>(inversion_count(tau));
        std::vector<mpz_class> term(k + 1, mpz_class(0));
        term[k] = 1;
        p += QPolynomial(std::move(term));
    });
    return p;
}

}  // namespace

TEST_CASE("chi fixtures") {
    QPolynomial c = chi(fixtures::semistandard_example());
    CHECK(c == poly({1, 6, 19, 40, 61, 70, 61, 40, 19, 6, 1}));
    CHECK(c.eval_at_one() == 324);

    // a single standard column: chi = [n]_q!
    CHECK(chi(Filling({{1}, {2}, {3}})) == q_factorial(3));
    // a single row has no inversions at all
    CHECK(chi(Filling({{1, 2, 3, 4}})) == QPolynomial::one());

    CHECK_THROWS_AS(chi(fixtures::inverted_example_a()), std::invalid_argument);
    CHECK_THROWS_AS(chi_by_columns(fixtures::inverted_example_a()), std::invalid_argument);
}

TEST_CASE("chi: quotient route == q-binomial route == brute force") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : oracle::partitions_of(n))
            for (const auto& mu : oracle::compositions_of(n))
                for (const Filling& T : gen_semistandard(Shape(lam), Content(mu))) {
                    QPolynomial c = chi(T);
                    CHECK(c == chi_by_columns(T));
                    CHECK(c == chi_brute(T));
                    CHECK(is_palindromic(c));
                }
}

TEST_CASE("xi by summation matches the brute-force histogram") {
    CHECK(xi_by_sum(Shape({4, 4}), Content::standard(8)) == poly({14, 28, 20, 7, 1}));
    CHECK(xi_by_sum(Shape({2, 2, 2}), Content::standard(6)) ==
          poly({5, 16, 25, 24, 14, 5, 1}));

    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : oracle::partitions_of(n))
            for (const auto& mu : oracle::compositions_of(n)) {
                Shape shape(lam);
                Content content(mu);
                QPolynomial xi = xi_by_sum(shape, content);
                CHECK(xi == hist_poly(histogram(shape, content)));
                CHECK(xi.degree() ==
                      (xi == QPolynomial{} ? -1 : static_cast<int>(max_inversions(shape, content))));
            }
}

TEST_CASE("two-row closed form") {
    CHECK(two_row_xi(4, 4, Content::standard(8)) == poly({14, 28, 20, 7, 1}));
    CHECK(two_row_count(4, 4, 0, 0) == 14);
    CHECK(two_row_count(4, 4, 0, 4) == 1);
    CHECK(two_row_count(4, 4, 0, 5) == 0);
    CHECK_THROWS_AS(two_row_count(3, 4, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(two_row_xi(4, 3, Content::standard(8)), std::invalid_argument);

    // a tripled value admits no row-standard filling at all
    CHECK(two_row_xi(3, 2, Content({3, 1, 1})) == QPolynomial{});

    for (int n = 2; n <= 8; ++n)
        for (int b = 1; b <= n / 2; ++b) {
            int a = n - b;
            if (a < b) continue;
            Shape shape({a, b});
            for (const auto& mu : oracle::compositions_of(n, 2)) {
                Content content(mu);
                CHECK(two_row_xi(a, b, content) ==
                      hist_poly(histogram(shape, content, kDefaultCap, true)));
            }
        }
}

TEST_CASE("two-row rectangular ballot form") {
    for (long n = 1; n <= 8; ++n)
        CHECK(two_row_rect_xi(n) == two_row_xi(n, n, Content::standard(2 * n)));
    CHECK(two_row_rect_xi(4) == poly({14, 28, 20, 7, 1}));
}

TEST_CASE("psi and the two-column rectangular form") {
    CHECK(two_col_rect_xi(3) == poly({5, 16, 25, 24, 14, 5, 1}));
    for (long n = 1; n <= 5; ++n)
        CHECK(two_col_rect_xi(n) ==
              xi_by_sum(Shape(std::vector<int>(n, 2)), Content::standard(2 * n)));

    // psi(alpha) counts the valid depth sequences with that multiplicity profile
    for (int n = 1; n <= 7; ++n) {
        std::map<std::vector<long>, mpz_class> by_profile;
        for (const auto& c : depth_sequences(n, n)) {
            std::vector<long> alpha(n, 0);
            for (int v : c) ++alpha[v];
            by_profile[alpha] += 1;
        }
        mpz_class total = 0;
        std::vector<long> alpha(n, 0);
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == n - 1) {
                alpha[i] = left;
                mpz_class p = psi(alpha);
                auto it = by_profile.find(alpha);
                CHECK(p == (it == by_profile.end() ? mpz_class(0) : it->second));
                total += p;
                return;
            }
            for (int v = 0; v <= left; ++v) {
                alpha[i] = v;
                self(self, i + 1, left - v);
            }
        };
        rec(rec, 0, n);
        CHECK(total == oracle::hook_length_count(Shape(std::vector<int>(n, 2))));
    }

    CHECK_THROWS_AS(psi(std::vector<long>{-1}), std::invalid_argument);
}

TEST_CASE("depth sequences biject with standard tableaux of shape 2^m 1^(n-m)") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= n; ++m) {
            if (2 * m > n + m) continue;  // shape needs n >= m, always true
            std::vector<int> parts;
            for (int i = 0; i < m; ++i) parts.push_back(2);
            for (int i = m; i < n; ++i) parts.push_back(1);
            if (parts.empty()) continue;
            Shape shape(parts);

            auto seqs = depth_sequences(n, m);
            std::set<std::vector<std::vector<int>>> built;
            for (const auto& c : seqs) {
                Filling T = tableau_from_depths(c, m);
                CHECK(is_standard(T));
                CHECK(T.shape() == shape);
                CHECK(first_column_depths(T) == c);
                built.insert(T.rows());
            }
            CHECK(built.size() == seqs.size());

            auto ts = gen_standard(shape);
            CHECK(ts.size() == seqs.size());
            for (const Filling& T : ts) CHECK(built.count(T.rows()) == 1);
        }

    CHECK_THROWS_AS(tableau_from_depths({0, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(tableau_from_depths({1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(tableau_from_depths({0, 1, 0}, 1), std::invalid_argument);  // tail bound
}

TEST_CASE("maximal inversion number") {
    CHECK(max_inversions(Shape({2, 2, 2}), Content::standard(6)) == 6);
    CHECK(max_inversions(Shape({4, 4}), Content::standard(8)) == 4);
    CHECK(max_inversions(Shape({1, 1, 1, 1}), Content({2, 2})) == 4);
    CHECK(max_inversions(Shape({5}), Content::standard(5)) == 0);

    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : oracle::partitions_of(n))
            for (const auto& mu : oracle::compositions_of(n)) {
                auto h = oracle::raw_histogram(Shape(lam), Content(mu));
                if (h.empty()) continue;
                CHECK(h.rbegin()->first == max_inversions(Shape(lam), Content(mu)));
            }
}
