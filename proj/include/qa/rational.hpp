#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qa {

class rational_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p/q in lowest terms with q >= 0; infinity is (1, 0).
struct ExtendedRational {
    long long p = 0;
    long long q = 1;

    ExtendedRational() = default;
    ExtendedRational(long long num, long long den);  // normalizes
    static ExtendedRational infinity() { return ExtendedRational(1, 0, nullptr); }

    bool is_infinite() const { return q == 0; }
    bool is_integer() const { return q == 1; }

    ExtendedRational operator+(long long t) const;  // finite shift
    ExtendedRational operator-(long long t) const { return *this + (-t); }

    bool operator==(const ExtendedRational&) const = default;

    std::string str() const;
    static ExtendedRational parse(const std::string& s);  // "p/q", "n", "inf"

private:
    ExtendedRational(long long num, long long den, std::nullptr_t) : p(num), q(den) {}
};

using ContinuedFraction = std::vector<long long>;

/// Subtractive convention: value([a1..ak]) = a1 - 1/(a2 - 1/(... - 1/ak)).
ExtendedRational cf_value(const ContinuedFraction& c);

/// Greedy subtractive expansion; round-trips through cf_value.
ContinuedFraction cf_expand(const ExtendedRational& r);

ContinuedFraction parse_cf(const std::string& s);  // "[6,-2]"

/// coefficient - writhe: the fraction of the replacement tangle.
ExtendedRational montesinos_trick_fraction(const ExtendedRational& coefficient, long long writhe);

/// |(prod alpha_i) * (sum beta_i / alpha_i)| for fractions beta_i/alpha_i.
long long montesinos_determinant(const std::vector<ExtendedRational>& fractions);

std::vector<ExtendedRational> parse_fraction_list(const std::string& s);  // "3/5,2/3,-1/4"

}  // namespace qa
