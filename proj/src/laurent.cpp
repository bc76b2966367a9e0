#include "qa/laurent.hpp"

namespace qa {

void Laurent::trim() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

long long Laurent::min_exp() const {
    if (coeffs_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long long Laurent::max_exp() const {
    if (coeffs_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

BigInt Laurent::coeff(long long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent out = *this;
    for (const auto& [e, c] : o.coeffs_) out.coeffs_[e] += c;
    out.trim();
    return out;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent out = *this;
    for (const auto& [e, c] : o.coeffs_) out.coeffs_[e] -= c;
    out.trim();
    return out;
}

Laurent Laurent::operator-() const {
    Laurent out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent out;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) out.coeffs_[e1 + e2] += c1 * c2;
    out.trim();
    return out;
}

Laurent Laurent::divide_exact(const Laurent& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return Laurent();
    // units of the Laurent ring are monomials, so divide as ordinary
    // polynomials after shifting both minimum exponents to zero
    const long long shift = min_exp() - divisor.min_exp();
    Laurent rem = *this * monomial(-min_exp());
    const Laurent div = divisor * monomial(-divisor.min_exp());
    const long long dlead = div.max_exp();
    const BigInt& dc = div.coeffs_.rbegin()->second;
    Laurent quot;
    while (!rem.is_zero() && rem.max_exp() >= dlead) {
        const long long rlead = rem.max_exp();
        const BigInt& rc = rem.coeffs_.rbegin()->second;
        if (rc % dc != 0) throw std::domain_error("inexact Laurent division");
        Laurent term = monomial(rlead - dlead, rc / dc);
        quot += term;
        rem -= term * div;
    }
    if (!rem.is_zero()) throw std::domain_error("inexact Laurent division");
    return quot * monomial(shift);
}

Laurent Laurent::invert_variable() const { return scale_exponents(-1); }

Laurent Laurent::scale_exponents(long long k) const {
    if (k == 0) throw std::domain_error("scale_exponents(0)");
    Laurent out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e * k] = c;
    return out;
}

BigInt Laurent::evaluate_int(long long x) const {
    if (x == 0) throw std::domain_error("Laurent evaluation at 0");
    BigInt result = 0;
    const BigInt bx = x;
    for (const auto& [e, c] : coeffs_) {
        BigInt term = c;
        if (e >= 0) {
            for (long long i = 0; i < e; ++i) term *= bx;
        } else {
            // only valid for x = +-1, where x^-1 = x
            if (x != 1 && x != -1)
                throw std::domain_error("negative exponent at non-unit point");
            for (long long i = 0; i < -e; ++i) term *= bx;
        }
        result += term;
    }
    return result;
}

std::string Laurent::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        BigInt a = abs(c);
        if (a != 1 || e == 0) out += a.str();
        if (e != 0) {
            if (a != 1) out += "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace qa
