#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tabinv/qpoly.hpp"

using namespace tabinv;

namespace {

QPolynomial poly(std::vector<long> cs) {
    std::vector<mpz_class> z(cs.begin(), cs.end());
    return QPolynomial(std::move(z));
}

// independent route: Pascal-type recurrence qb(a,b) = qb(a-1,b-1) + q^b qb(a-1,b)
QPolynomial q_binomial_recurrence(int a, int b) {
    if (b < 0 || b > a) return {};
    if (b == 0 || b == a) return QPolynomial::one();
    std::vector<mpz_class> shift(b + 1, mpz_class(0));
    shift[b] = 1;
    return q_binomial_recurrence(a - 1, b - 1) +
           QPolynomial(std::move(shift)) * q_binomial_recurrence(a - 1, b);
}

}  // namespace

TEST_CASE("q-number, q-factorial, q-binomial basics") {
    CHECK(q_number(2) == poly({1, 1}));
    CHECK(q_number(0) == QPolynomial{});
    CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK(q_factorial(3).eval_at_one() == 6);
    CHECK_THROWS_AS(q_binomial(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(q_number(-1), std::invalid_argument);
}

TEST_CASE("q-binomial agrees with the Pascal recurrence and is symmetric") {
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= a; ++b) {
            QPolynomial qb = q_binomial(a, b);
            CHECK(qb == q_binomial_recurrence(a, b));
            CHECK(qb == q_binomial(a, a - b));
            mpz_class plain;
            mpz_bin_uiui(plain.get_mpz_t(), a, b);
            CHECK(qb.eval_at_one() == plain);
        }
}

TEST_CASE("multiplication and exact division") {
    QPolynomial two_q = q_number(2);
    CHECK(exact_div(q_binomial(4, 2) * two_q, two_q) == q_binomial(4, 2));

    QPolynomial quotient =
        exact_div(q_number(2).pow(4) * q_number(3).pow(4), q_number(2).pow(2));
    CHECK(quotient == poly({1, 6, 19, 40, 61, 70, 61, 40, 19, 6, 1}));

    CHECK_THROWS_AS(exact_div(q_number(2), q_number(3)), inexact_division);
    CHECK(exact_div(QPolynomial{}, q_number(3)) == QPolynomial{});
}

TEST_CASE("shape predicates") {
    QPolynomial qb = q_binomial(4, 2);
    CHECK(is_palindromic(qb));
    CHECK(is_unimodal(qb));
    CHECK_FALSE(is_log_concave(qb));

    QPolynomial one = QPolynomial::one();
    CHECK(is_palindromic(one));
    CHECK(is_unimodal(one));
    CHECK(is_log_concave(one));

    QPolynomial example = poly({1, 6, 19, 40, 61, 70, 61, 40, 19, 6, 1});
    CHECK(is_palindromic(example));

    CHECK_FALSE(is_unimodal(poly({2, 1, 2})));
    CHECK_FALSE(is_palindromic(poly({1, 2})));
    CHECK_THROWS_AS(is_unimodal(QPolynomial{}), std::invalid_argument);
}

TEST_CASE("display form") {
    CHECK(poly({1, 6, 19}).to_string() == "1 + 6q + 19q^2");
    CHECK(poly({0, 1, 0, 1}).to_string() == "q + q^3");
    CHECK(QPolynomial{}.to_string() == "0");
}
