#include "springer/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace springer {

namespace {
const mpz_class kZero = 0;
}

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial Polynomial::constant(mpz_class value) {
    Polynomial p;
    p.coeffs_.push_back(std::move(value));
    p.normalize();
    return p;
}

const mpz_class& Polynomial::coeff(int m) const {
    if (m < 0 || m > degree()) return kZero;
    return coeffs_[static_cast<std::size_t>(m)];
}

mpz_class Polynomial::value_at_one() const {
    mpz_class sum = 0;
    for (const mpz_class& c : coeffs_) sum += c;
    return sum;
}

bool Polynomial::is_palindromic() const {
    const int d = degree();
    for (int m = 0; m * 2 <= d; ++m)
        if (coeffs_[static_cast<std::size_t>(m)] != coeffs_[static_cast<std::size_t>(d - m)])
            return false;
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t m = 0; m < other.coeffs_.size(); ++m) coeffs_[m] += other.coeffs_[m];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpz_class> product(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a] == 0) continue;
        for (std::size_t b = 0; b < other.coeffs_.size(); ++b)
            product[a + b] += coeffs_[a] * other.coeffs_[b];
    }
    coeffs_ = std::move(product);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& scalar) {
    for (mpz_class& c : coeffs_) c *= scalar;
    normalize();
    return *this;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int m = 0; m <= degree(); ++m) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(m)];
        if (c == 0) continue;
        if (!first) out << '+';
        first = false;
        if (m == 0 || c != 1) out << c.get_str();
        if (m > 0) {
            out << 'x';
            if (m > 1) out << '^' << m;
        }
    }
    return out.str();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial q_int(int p) {
    if (p < 0) throw std::invalid_argument("q_int needs a nonnegative argument");
    return Polynomial(std::vector<mpz_class>(static_cast<std::size_t>(p), 1));
}

Polynomial q_factorial(int m) {
    if (m < 0) throw std::invalid_argument("q_factorial needs a nonnegative argument");
    Polynomial f = Polynomial::constant(1);
    for (int p = 1; p <= m; ++p) f *= q_int(p);
    return f;
}

} // namespace springer
