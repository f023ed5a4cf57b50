#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace springer {

// Dense univariate polynomial with exact integer coefficients. Index m holds
// the coefficient of x^m; the representation is normalized (no trailing
// zeros), so the zero polynomial has no coefficients at all.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> coeffs);
    static Polynomial constant(mpz_class value);

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const mpz_class& coeff(int m) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class value_at_one() const;
    bool is_palindromic() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const mpz_class& scalar);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const mpz_class& s) { return a *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // "1+3x+4x^2+3x^3+x^4"; "0" for the zero polynomial
    std::string to_string() const;

private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

// 1 + x + ... + x^(p-1); zero polynomial for p = 0.
Polynomial q_int(int p);

// Product of q_int(1) .. q_int(m).
Polynomial q_factorial(int m);

} // namespace springer
