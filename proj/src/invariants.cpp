#include "qa/invariants.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

namespace qa {

int closure_component_count(const BraidWord& w) {
    return permutation(w).cycle_count();
}

// ---------------------------------------------------------------------------
// Reduced Burau and the Alexander polynomial
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Laurent>>;

Matrix identity_matrix(int d) {
    Matrix m(d, std::vector<Laurent>(d));
    for (int i = 0; i < d; ++i) m[i][i] = Laurent(1);
    return m;
}

// Applies sigma_i^s on the right of m: columns transform by the reduced
// Burau matrix of the letter.
void apply_letter(Matrix& m, int letter) {
    const int d = static_cast<int>(m.size());
    const int i = std::abs(letter) - 1;  // 0-based basis index of e_i
    const Laurent t = Laurent::monomial(1);
    const Laurent tinv = Laurent::monomial(-1);
    for (int r = 0; r < d; ++r) {
        Laurent a = i > 0 ? m[r][i - 1] : Laurent();
        Laurent b = m[r][i];
        Laurent c = i + 1 < d ? m[r][i + 1] : Laurent();
        if (letter > 0) {
            // e_{i-1} -> e_{i-1} + t e_i ; e_i -> -t e_i ; e_{i+1} -> e_i + e_{i+1}
            m[r][i] = a * t - b * t + c;
        } else {
            // e_i -> -t^-1 e_i ; e_{i-1} -> e_{i-1} + e_i ; e_{i+1} -> t^-1 e_i + e_{i+1}
            m[r][i] = a - b * tinv + c * tinv;
        }
    }
}

// Fraction-free (Bareiss) determinant over the Laurent ring.
Laurent laurent_det(Matrix m) {
    const int d = static_cast<int>(m.size());
    if (d == 0) return Laurent(1);
    Laurent prev(1);
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < d; ++r)
                if (!m[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Laurent();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int r = k + 1; r < d; ++r)
            for (int c = k + 1; c < d; ++c)
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]).divide_exact(prev);
        prev = m[k][k];
    }
    Laurent result = m[d - 1][d - 1];
    return sign > 0 ? result : -result;
}

}  // namespace

Matrix reduced_burau(const BraidWord& w) {
    Matrix m = identity_matrix(w.strands - 1);
    for (int l : w.letters) apply_letter(m, l);
    return m;
}

Laurent alexander(const BraidWord& w) {
    if (closure_component_count(w) != 1)
        throw braid_error("alexander: closure is not a knot");
    const int n = w.strands;
    if (n == 1) return Laurent(1);
    Matrix m = reduced_burau(w);
    const int d = n - 1;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m[i][j] = (i == j ? Laurent(1) : Laurent()) - m[i][j];
    Laurent det = laurent_det(std::move(m));
    // det(I - rho(w)) = +- t^j * delta(t) * (1 + t + ... + t^(n-1))
    Laurent cyclo;
    for (int k = 0; k < n; ++k) cyclo += Laurent::monomial(k);
    Laurent delta = det.divide_exact(cyclo);
    if (delta.is_zero()) throw braid_error("alexander: vanishing determinant on a knot");
    // center the exponent range, then fix the sign by delta(1) = 1
    const long long span = delta.max_exp() - delta.min_exp();
    if (span % 2 != 0) throw braid_error("alexander: odd exponent span");
    delta = delta * Laurent::monomial(-(delta.min_exp() + span / 2));
    const BigInt at1 = delta.evaluate_int(1);
    if (at1 == -1)
        delta = -delta;
    else if (at1 != 1)
        throw braid_error("alexander: delta(1) != +-1");
    if (delta != delta.invert_variable())
        throw braid_error("alexander: normalization is not symmetric");
    return delta;
}

BigInt determinant(const BraidWord& w) {
    BigInt v = alexander(w).evaluate_int(-1);
    return abs(v);
}

// ---------------------------------------------------------------------------
// Jones polynomial via the Temperley-Lieb algebra
// ---------------------------------------------------------------------------

namespace {

// A TL_n diagram as a perfect matching on 2n points: indices 0..n-1 are the
// top boundary, n+j is the bottom point at position j.
using Diagram = std::vector<int>;

Diagram identity_diagram(int n) {
    Diagram d(2 * n);
    for (int j = 0; j < n; ++j) {
        d[j] = n + j;
        d[n + j] = j;
    }
    return d;
}

// e_i caps top i-1,i together and cups bottom i-1,i together (i is the
// 1-based generator index).
Diagram cap_diagram(int n, int i) {
    Diagram d = identity_diagram(n);
    d[i - 1] = i;
    d[i] = i - 1;
    d[n + i - 1] = n + i;
    d[n + i] = n + i - 1;
    return d;
}

// Stacks d2 below d1; returns the glued diagram and the number of closed
// loops produced in the middle.
std::pair<Diagram, int> compose_diagrams(const Diagram& d1, const Diagram& d2, int n) {
    Diagram out(2 * n, -1);
    std::vector<bool> mid_seen(n, false);

    // Follows the strand entering the middle layer at position k, moving
    // downward into d2 first. Returns the boundary endpoint encoding:
    // top j -> j, bottom j -> n + j, or -1 - k if the path closes a loop.
    auto trace = [&](int start_boundary) -> int {
        bool from_top = start_boundary < n;
        int p = from_top ? d1[start_boundary] : d2[start_boundary];
        bool in_d1 = from_top;
        while (true) {
            if (in_d1) {
                if (p < n) return p;             // reached result top
                int k = p - n;                   // middle position, go into d2
                mid_seen[k] = true;
                p = d2[k];
                in_d1 = false;
            } else {
                if (p >= n) return p;            // reached result bottom
                int k = p;                       // middle position, go into d1
                mid_seen[k] = true;
                p = d1[n + k];
                in_d1 = true;
            }
        }
    };

    for (int j = 0; j < 2 * n; ++j) {
        if (out[j] >= 0) continue;
        int end = trace(j);
        out[j] = end;
        out[end] = j;
    }

    int loops = 0;
    std::vector<bool> visited(n, false);
    for (int k = 0; k < n; ++k) {
        if (mid_seen[k] || visited[k]) continue;
        ++loops;
        // walk the closed cycle through middle positions
        int p = k;
        while (!visited[p]) {
            visited[p] = true;
            int q = d2[p];          // d2 top p -> must land in d2 top (else seen)
            int r = (q < n) ? q : -1;
            if (r < 0) break;       // defensive; cannot happen for a loop
            visited[r] = true;
            int s = d1[n + r];
            p = (s >= n) ? s - n : -1;
            if (p < 0) break;
        }
    }
    return {std::move(out), loops};
}

int closure_loops(const Diagram& d, int n) {
    std::vector<bool> visited(2 * n, false);
    int loops = 0;
    for (int j = 0; j < 2 * n; ++j) {
        if (visited[j]) continue;
        ++loops;
        int p = j;
        while (!visited[p]) {
            visited[p] = true;
            int q = d[p];
            visited[q] = true;
            p = q < n ? q + n : q - n;  // closure arc top j <-> bottom j
        }
    }
    return loops;
}

}  // namespace

Laurent jones_q(const BraidWord& w) {
    const int n = w.strands;
    const Laurent delta = -Laurent::monomial(2) - Laurent::monomial(-2);  // in A

    std::map<Diagram, Laurent> state;
    state[identity_diagram(n)] = Laurent(1);

    for (int l : w.letters) {
        const int i = std::abs(l);
        const int s = l > 0 ? 1 : -1;
        const Diagram cap = cap_diagram(n, i);
        std::map<Diagram, Laurent> next;
        for (const auto& [d, c] : state) {
            next[d] += c * Laurent::monomial(s);
            auto [glued, loops] = compose_diagrams(d, cap, n);
            Laurent term = c * Laurent::monomial(-s);
            for (int k = 0; k < loops; ++k) term *= delta;
            next[std::move(glued)] += term;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        state = std::move(next);
    }

    Laurent bracket;
    for (const auto& [d, c] : state) {
        Laurent term = c;
        const int loops = closure_loops(d, n);
        for (int k = 0; k < loops - 1; ++k) term *= delta;
        bracket += term;
    }

    // V = (-A^3)^(-writhe) * bracket, then q = A^2 (t = A^4), so that the
    // closure of [1,1,1] comes out as -t^-4 + t^-3 + t^-1
    const int writhe = exponent_sum(w);
    Laurent v = bracket * Laurent::monomial(-3LL * writhe);
    if (writhe % 2 != 0) v = -v;
    Laurent out;
    for (const auto& [e, c] : v.coeffs()) {
        if (e % 2 != 0) throw braid_error("jones: odd A-exponent survived normalization");
        out += Laurent::monomial(e / 2, c);
    }
    return out;
}

Laurent jones(const BraidWord& w) {
    Laurent q = jones_q(w);
    Laurent out;
    for (const auto& [e, c] : q.coeffs()) {
        if (e % 2 != 0) throw braid_error("jones: closure is not a knot (odd q-exponent)");
        out += Laurent::monomial(e / 2, c);
    }
    return out;
}

BigInt jones_determinant(const BraidWord& w) {
    // evaluate the q-form at q = i over Z[i]; the result is a unit times an
    // integer for any link
    const Laurent q = jones_q(w);
    BigInt part[4] = {0, 0, 0, 0};
    for (const auto& [e, c] : q.coeffs()) part[((e % 4) + 4) % 4] += c;
    const BigInt re = part[0] - part[2];
    const BigInt im = part[1] - part[3];
    if (re != 0 && im != 0) throw braid_error("jones determinant: non-unit phase");
    return abs(re != 0 ? re : im);
}

int genus_positive_braid(const BraidWord& w) {
    for (int l : w.letters)
        if (l < 0) throw braid_error("genus_positive_braid: word has negative letters");
    if (closure_component_count(w) != 1)
        throw braid_error("genus_positive_braid: closure is not a knot");
    const long long c = static_cast<long long>(w.size());
    const long long val = c - w.strands + 1;
    if (val % 2 != 0) throw braid_error("genus_positive_braid: non-integer genus");
    return static_cast<int>(val / 2);
}

bool is_lspace_alexander_form(const Laurent& p) {
    if (p.is_zero()) return false;
    if (p != p.invert_variable()) return false;
    if (p.evaluate_int(1) != 1) return false;
    int expected_sign = 1;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        const BigInt& c = it->second;
        if (c != 1 && c != -1) return false;
        if ((c > 0 ? 1 : -1) != expected_sign) return false;
        expected_sign = -expected_sign;
    }
    return p.coeffs().rbegin()->second == 1;
}

}  // namespace qa
