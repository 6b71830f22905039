#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

// Exact dense polynomials in q over arbitrary-precision integers, plus the
// q-combinatorial primitives ([p]_q, [p]_q!, Gaussian binomials) and the
// shape predicates (palindromic / unimodal / log-concave).

namespace tabinv {

struct inexact_division : std::domain_error {
    inexact_division() : std::domain_error("inexact division") {}
};

class QPolynomial {
public:
    QPolynomial() = default;  // zero polynomial
    explicit QPolynomial(std::vector<mpz_class> coeffs);
    static QPolynomial constant(const mpz_class& c);
    static QPolynomial one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    mpz_class coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class eval(const mpz_class& x) const;
    mpz_class eval_at_one() const { return eval(1); }

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator*=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    QPolynomial pow(int e) const;

    bool operator==(const QPolynomial&) const = default;

    std::string to_string() const;  // "1 + 6q + 19q^2 + ..."

private:
    void normalize();
    std::vector<mpz_class> coeffs_;  // coeffs_[k] = coefficient of q^k
};

// throws inexact_division on a nonzero remainder
QPolynomial exact_div(const QPolynomial& a, const QPolynomial& b);

QPolynomial q_number(int p);               // [p]_q = 1 + q + ... + q^{p-1}
QPolynomial q_factorial(int p);            // [p]_q!
QPolynomial q_binomial(int a, int b);      // Gaussian binomial, exact-division route

// All three reject the zero polynomial.
bool is_palindromic(const QPolynomial& p);
bool is_unimodal(const QPolynomial& p);
bool is_log_concave(const QPolynomial& p);

}  // namespace tabinv
