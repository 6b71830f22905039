#include "tabinv/qpoly.hpp"

#include <sstream>

namespace tabinv {

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

QPolynomial QPolynomial::constant(const mpz_class& c) {
    return QPolynomial(std::vector<mpz_class>{c});
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class QPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

mpz_class QPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPolynomial r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return r;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) { return *this = *this * o; }

QPolynomial QPolynomial::pow(int e) const {
    QPolynomial r = one();
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

std::string QPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (k == 0)
            out << coeffs_[k].get_str();
        else {
            if (coeffs_[k] != 1) out << coeffs_[k].get_str();
            out << "q";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

QPolynomial exact_div(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw inexact_division();
    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quot(a.degree() - b.degree() + 1, mpz_class(0));
    const auto& d = b.coeffs();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[k + b.degree()].get_mpz_t(),
                    d.back().get_mpz_t());
        if (r != 0) throw inexact_division();
        quot[k] = q;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * d[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw inexact_division();
    return QPolynomial(std::move(quot));
}

QPolynomial q_number(int p) {
    if (p < 0) throw std::invalid_argument("q_number: negative argument");
    return QPolynomial(std::vector<mpz_class>(p, mpz_class(1)));
}

QPolynomial q_factorial(int p) {
    if (p < 0) throw std::invalid_argument("q_factorial: negative argument");
    QPolynomial r = QPolynomial::one();
    for (int i = 1; i <= p; ++i) r *= q_number(i);
    return r;
}

QPolynomial q_binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) throw std::invalid_argument("q_binomial: need 0 <= b <= a");
    return exact_div(q_factorial(a), q_factorial(b) * q_factorial(a - b));
}

namespace {
void reject_zero(const QPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
}
}  // namespace

bool is_palindromic(const QPolynomial& p) {
    reject_zero(p);
    int d = p.degree();
    for (int k = 0; k * 2 <= d; ++k)
        if (p.coeff(k) != p.coeff(d - k)) return false;
    return true;
}

bool is_unimodal(const QPolynomial& p) {
    reject_zero(p);
    int d = p.degree();
    int k = 0;
    while (k < d && p.coeff(k + 1) >= p.coeff(k)) ++k;
    while (k < d && p.coeff(k + 1) <= p.coeff(k)) ++k;
    return k == d;
}

bool is_log_concave(const QPolynomial& p) {
    reject_zero(p);
    for (int k = 1; k < p.degree(); ++k)
        if (p.coeff(k) * p.coeff(k) < p.coeff(k - 1) * p.coeff(k + 1)) return false;
    return true;
}

}  // namespace tabinv
