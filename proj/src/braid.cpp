#include "qa/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace qa {

Permutation::Permutation(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw braid_error("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::then(const Permutation& g) const {
    if (size() != g.size()) throw braid_error("permutation size mismatch");
    std::vector<int> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = g.img_[img_[i] - 1];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[img_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(out));
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(img_.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = img_[j] - 1) seen[j] = true;
    }
    return cycles;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    if (n < 1) throw braid_error("strand count must be >= 1");
    for (int l : letters)
        if (l == 0 || std::abs(l) > n - 1)
            throw braid_error("letter " + std::to_string(l) + " out of range for B_" +
                              std::to_string(n));
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands) throw braid_error("strand count mismatch in compose");
    BraidWord out = u;
    out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
    return out;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

BraidWord free_reduce(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.size());
    for (int l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == -l)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& a) {
    if (w.strands != a.strands) throw braid_error("strand count mismatch in conjugate");
    return compose(compose(inverse(a), w), a);
}

BraidWord flip(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.size());
    for (int l : w.letters) {
        int idx = w.strands - std::abs(l);
        out.letters.push_back(l > 0 ? idx : -idx);
    }
    return out;
}

BraidWord mirror(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.size());
    for (int l : w.letters) out.letters.push_back(-l);
    return out;
}

BraidWord reverse(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.assign(w.letters.rbegin(), w.letters.rend());
    return out;
}

BraidWord full_twist(int n, int k) {
    if (n < 2) throw braid_error("full_twist requires n >= 2");
    BraidWord delta2;
    delta2.strands = n;
    for (int rep = 0; rep < n; ++rep)
        for (int i = 1; i < n; ++i) delta2.letters.push_back(i);
    BraidWord out;
    out.strands = n;
    const BraidWord unit = k > 0 ? delta2 : inverse(delta2);
    for (int rep = 0; rep < std::abs(k); ++rep) out = compose(out, unit);
    return out;
}

BraidWord stabilize(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands + 1;
    out.letters = w.letters;
    out.letters.push_back(w.strands);
    return out;
}

BraidWord destabilize(const BraidWord& w) {
    const int g = w.strands - 1;
    if (w.strands < 2 || w.letters.empty() || std::abs(w.letters.back()) != g)
        throw braid_error("destabilize: last letter must be the top generator");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (std::abs(w.letters[i]) == g)
            throw braid_error("destabilize: top generator occurs more than once");
    BraidWord out;
    out.strands = g;
    out.letters.assign(w.letters.begin(), w.letters.end() - 1);
    return out;
}

Permutation permutation(const BraidWord& w) {
    std::vector<int> img(w.strands);
    std::iota(img.begin(), img.end(), 1);
    for (int l : w.letters) {
        int i = std::abs(l);
        std::swap(img[i - 1], img[i]);
    }
    // img was built by composing transpositions on positions, which matches
    // the strand-endpoint permutation regardless of letter signs
    return Permutation(std::move(img));
}

int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (int l : w.letters) s += l > 0 ? 1 : -1;
    return s;
}

// ---------------------------------------------------------------------------
// Dehornoy handle reduction
// ---------------------------------------------------------------------------

namespace {

// Freely reduces v in place.
void free_reduce_inplace(std::vector<int>& v) {
    std::size_t top = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (top > 0 && v[top - 1] == -v[i])
            --top;
        else
            v[top++] = v[i];
    }
    v.resize(top);
}

// Finds the handle with the smallest closing position: positions (p,q) with
// v[p] == -v[q] and every letter strictly between of index > |v[q]|.
// Such a handle has no nested handle, so its reduction is always permitted.
bool find_first_handle(const std::vector<int>& v, std::size_t& p, std::size_t& q) {
    for (std::size_t j = 1; j < v.size(); ++j) {
        const int i = std::abs(v[j]);
        for (std::size_t k = j; k-- > 0;) {
            const int m = std::abs(v[k]);
            if (m > i) continue;
            if (v[k] == -v[j]) {
                p = k;
                q = j;
                return true;
            }
            break;  // a letter of index <= i blocks any earlier match
        }
    }
    return false;
}

}  // namespace

Decision is_trivial(const BraidWord& w, const ReduceOptions& opts) {
    std::vector<int> v = w.letters;
    free_reduce_inplace(v);
    std::size_t steps = 0;
    std::size_t p, q;
    while (find_first_handle(v, p, q)) {
        if (++steps > opts.max_steps) return Decision::Undecided;
        const int i = std::abs(v[p]);
        const int e = v[p] > 0 ? 1 : -1;
        std::vector<int> out;
        out.reserve(v.size() + 2 * (q - p));
        out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p));
        for (std::size_t k = p + 1; k < q; ++k) {
            const int l = v[k];
            if (std::abs(l) == i + 1) {
                // sigma_i^e sigma_{i+1}^d sigma_i^-e = sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e
                out.push_back(-e * (i + 1));
                out.push_back(l > 0 ? i : -i);
                out.push_back(e * (i + 1));
            } else {
                out.push_back(l);  // index >= i+2 commutes with sigma_i
            }
        }
        out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(q) + 1, v.end());
        free_reduce_inplace(out);
        v.swap(out);
    }
    return v.empty() ? Decision::Yes : Decision::No;
}

Decision equals(const BraidWord& u, const BraidWord& v, const ReduceOptions& opts) {
    if (u.strands != v.strands) throw braid_error("strand count mismatch in equals");
    if (exponent_sum(u) != exponent_sum(v)) return Decision::No;
    if (permutation(u) != permutation(v)) return Decision::No;
    return is_trivial(compose(u, inverse(v)), opts);
}

// ---------------------------------------------------------------------------
// Left-greedy normal form
// ---------------------------------------------------------------------------

namespace {

Permutation transposition(int n, int i) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[i - 1], img[i]);
    return Permutation(std::move(img));
}

Permutation half_twist_perm(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - i;
    return Permutation(std::move(img));
}

// Delta^-1 F Delta, i.e. conjugation by the order-reversing permutation.
Permutation tau(const Permutation& f) {
    const int n = f.size();
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) img[i - 1] = n + 1 - f(n + 1 - i);
    return Permutation(std::move(img));
}

// sigma_i right-divides the permutation braid of f iff the strands ending at
// positions i, i+1 have crossed, i.e. f^-1(i) > f^-1(i+1).
bool in_finishing_set(const Permutation& f, const Permutation& finv, int i) {
    (void)f;
    return finv(i) > finv(i + 1);
}

// sigma_i left-divides iff the strands starting at i, i+1 cross: f(i) > f(i+1).
bool in_starting_set(const Permutation& f, int i) {
    return f(i) > f(i + 1);
}

// Makes the pair (a, b) left-weighted by moving atoms from b into a.
// Returns true if anything moved.
bool rebalance(Permutation& a, Permutation& b) {
    bool moved = false;
    bool progress = true;
    const int n = a.size();
    while (progress) {
        progress = false;
        Permutation ainv = a.inverse();
        for (int i = 1; i < n; ++i) {
            if (in_starting_set(b, i) && !in_finishing_set(a, ainv, i)) {
                a = a.then(transposition(n, i));   // append sigma_i below a
                b = transposition(n, i).then(b);   // strip it from the top of b
                moved = progress = true;
                break;
            }
        }
    }
    return moved;
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
    const int n = w.strands;
    NormalForm nf;
    nf.strands = n;
    if (n == 1) return nf;

    const Permutation delta = half_twist_perm(n);
    std::vector<Permutation> fs;
    for (int l : w.letters) {
        const int i = std::abs(l);
        if (l > 0) {
            fs.push_back(transposition(n, i));
        } else {
            // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); push Delta^-1 to the front
            --nf.delta_power;
            for (auto& f : fs) f = tau(f);
            fs.push_back(delta.then(transposition(n, i)));
        }
    }

    // Local rebalancing until every adjacent pair is left-weighted.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j + 1 < fs.size(); ++j)
            if (rebalance(fs[j], fs[j + 1])) changed = true;
        // drop identity factors (they migrate to the right)
        std::erase_if(fs, [](const Permutation& f) { return f.is_identity(); });
    }
    // absorb leading Delta factors into the exponent
    std::size_t lead = 0;
    while (lead < fs.size() && fs[lead] == delta) ++lead;
    nf.delta_power += static_cast<long long>(lead);
    fs.erase(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(lead));
    nf.factors = std::move(fs);
    return nf;
}

bool is_trivial_nf(const BraidWord& w) { return normal_form(w).trivial(); }

bool equals_nf(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands) throw braid_error("strand count mismatch in equals_nf");
    return is_trivial_nf(compose(u, inverse(v)));
}

// ---------------------------------------------------------------------------
// Parser for the paper's power-grouped word syntax
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw braid_error("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::stoll(s.substr(start, pos - start));
    }

    // item := integer | '(' item (',' item)* ')' ['^' integer]
    void item(std::vector<int>& out) {
        if (peek() == '(') {
            ++pos;
            std::vector<int> group;
            item(group);
            while (peek() == ',') {
                ++pos;
                item(group);
            }
            if (peek() != ')') fail("expected ')'");
            ++pos;
            long long exp = 1;
            if (peek() == '^') {
                ++pos;
                exp = integer();
            }
            if (exp >= 0) {
                for (long long r = 0; r < exp; ++r) out.insert(out.end(), group.begin(), group.end());
            } else {
                std::vector<int> inv(group.rbegin(), group.rend());
                for (auto& l : inv) l = -l;
                for (long long r = 0; r < -exp; ++r) out.insert(out.end(), inv.begin(), inv.end());
            }
        } else {
            long long l = integer();
            if (l == 0) fail("letter 0 is not a generator");
            out.push_back(static_cast<int>(l));
        }
    }
};

}  // namespace

BraidWord expand(const std::string& expr, int strands) {
    Parser p{expr};
    std::vector<int> letters;
    if (!p.eof()) {
        p.item(letters);
        while (p.peek() == ',') {
            ++p.pos;
            p.item(letters);
        }
        if (!p.eof()) p.fail("trailing input");
    }
    return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.letters[i]);
    }
    out += ']';
    return out;
}

}  // namespace qa
