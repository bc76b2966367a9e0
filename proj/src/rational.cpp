#include "qa/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace qa {

ExtendedRational::ExtendedRational(long long num, long long den) {
    if (num == 0 && den == 0) throw rational_error("0/0 is not a valid fraction");
    if (den == 0) {
        p = 1;
        q = 0;
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(std::abs(num), den);
    p = g ? num / g : 0;
    q = g ? den / g : 1;
    if (num == 0) {
        p = 0;
        q = 1;
    }
}

ExtendedRational ExtendedRational::operator+(long long t) const {
    if (is_infinite()) return *this;
    return ExtendedRational(p + t * q, q);
}

std::string ExtendedRational::str() const {
    if (is_infinite()) return "inf";
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

ExtendedRational ExtendedRational::parse(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw rational_error("empty fraction");
    std::string body = s.substr(b, e - b + 1);
    if (body == "inf" || body == "-inf") return infinity();
    std::size_t slash = body.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(body, &used);
            if (used != body.size()) throw rational_error("bad fraction: " + s);
            return ExtendedRational(n, 1);
        }
        long long n = std::stoll(body.substr(0, slash), &used);
        if (used != slash) throw rational_error("bad fraction: " + s);
        std::string den = body.substr(slash + 1);
        long long d = std::stoll(den, &used);
        if (used != den.size()) throw rational_error("bad fraction: " + s);
        return ExtendedRational(n, d);
    } catch (const std::invalid_argument&) {
        throw rational_error("bad fraction: " + s);
    } catch (const std::out_of_range&) {
        throw rational_error("fraction out of range: " + s);
    }
}

ExtendedRational cf_value(const ContinuedFraction& c) {
    if (c.empty()) throw rational_error("empty continued fraction");
    // evaluate from the innermost term outward as p/q
    long long p = c.back(), q = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        // a - 1/(p/q) = (a*p - q)/p
        if (p == 0) throw rational_error("division by zero in continued fraction");
        long long np = c[i] * p - q;
        q = p;
        p = np;
    }
    return ExtendedRational(p, q);
}

ContinuedFraction cf_expand(const ExtendedRational& r) {
    if (r.is_infinite()) throw rational_error("cannot expand infinity");
    ContinuedFraction out;
    long long p = r.p, q = r.q;
    while (true) {
        if (q == 1) {
            out.push_back(p);
            return out;
        }
        // a = ceil(p/q) so that the remainder a - p/q lies in [0, 1)
        long long a = p / q + ((p % q != 0 && p > 0) ? 1 : 0);
        out.push_back(a);
        // p/q = a - 1/(next); next = q / (a*q - p), denominator strictly drops
        long long np = q, nq = a * q - p;
        p = np;
        q = nq;
    }
}

ContinuedFraction parse_cf(const std::string& s) {
    std::size_t b = s.find('[');
    std::size_t e = s.rfind(']');
    if (b == std::string::npos || e == std::string::npos || e < b)
        throw rational_error("continued fraction must be bracketed: " + s);
    std::string body = s.substr(b + 1, e - b - 1);
    ContinuedFraction out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        std::size_t tb = tok.find_first_not_of(" \t");
        if (tb == std::string::npos) throw rational_error("empty term in " + s);
        std::size_t te = tok.find_last_not_of(" \t");
        std::size_t used = 0;
        std::string trimmed = tok.substr(tb, te - tb + 1);
        long long v;
        try {
            v = std::stoll(trimmed, &used);
        } catch (const std::exception&) {
            throw rational_error("bad term '" + trimmed + "' in " + s);
        }
        if (used != trimmed.size()) throw rational_error("bad term '" + trimmed + "' in " + s);
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw rational_error("empty continued fraction: " + s);
    return out;
}

ExtendedRational montesinos_trick_fraction(const ExtendedRational& coefficient,
                                           long long writhe) {
    if (coefficient.is_infinite())
        throw rational_error("montesinos trick needs a finite coefficient");
    return coefficient - writhe;
}

long long montesinos_determinant(const std::vector<ExtendedRational>& fractions) {
    // |(prod alpha) * (sum beta/alpha)| computed as a single exact fraction
    long long num = 0, den = 1;
    for (const auto& f : fractions) {
        if (f.is_infinite()) throw rational_error("montesinos fraction must be finite");
        num = num * f.q + f.p * den;
        den *= f.q;
    }
    long long prod = 1;
    for (const auto& f : fractions) prod *= f.q;
    // prod * num / den with den = prod
    return std::abs(num);
}

std::vector<ExtendedRational> parse_fraction_list(const std::string& s) {
    std::vector<ExtendedRational> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        out.push_back(ExtendedRational::parse(
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw rational_error("empty fraction list");
    return out;
}

}  // namespace qa
