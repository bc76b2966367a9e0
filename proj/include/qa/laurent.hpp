#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>

namespace qa {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient Laurent polynomial in one variable.
/// Coefficients are exact; zero coefficients are never stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(long long c) {  // NOLINT: implicit constant
        if (c != 0) coeffs_[0] = c;
    }
    explicit Laurent(BigInt c, long long exp = 0) {
        if (c != 0) coeffs_[exp] = std::move(c);
    }

    static Laurent monomial(long long exp, BigInt c = 1) {
        Laurent p;
        if (c != 0) p.coeffs_[exp] = std::move(c);
        return p;
    }

    const std::map<long long, BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long long min_exp() const;  // throws on zero
    long long max_exp() const;
    BigInt coeff(long long exp) const;

    Laurent operator+(const Laurent&) const;
    Laurent operator-(const Laurent&) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent&) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    /// Exact division; throws std::domain_error if the remainder is nonzero.
    Laurent divide_exact(const Laurent& divisor) const;

    /// Substitutes x -> x^-1.
    Laurent invert_variable() const;
    /// Multiplies every exponent by k (substitute x -> x^k), k != 0.
    Laurent scale_exponents(long long k) const;

    BigInt evaluate_int(long long x) const;  // x in Z

    bool operator==(const Laurent&) const = default;

    std::string str(const std::string& var = "t") const;

private:
    std::map<long long, BigInt> coeffs_;
    void trim();
};

}  // namespace qa
