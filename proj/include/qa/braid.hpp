#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qa {

/// A permutation of {1..n}, stored as the image sequence.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);                       // identity
    explicit Permutation(std::vector<int> images);     // validates bijectivity

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }  // 1-indexed

    Permutation then(const Permutation& g) const;  // apply *this first, then g
    Permutation inverse() const;
    int cycle_count() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    const std::vector<int>& images() const { return img_; }

private:
    std::vector<int> img_;
};

/// A word in the braid group B_n. Letter k (1 <= |k| <= n-1) is the
/// generator sigma_|k|, inverted when k < 0. The empty word is the identity.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls);

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    bool operator==(const BraidWord&) const = default;
};

class braid_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Word-level operations. All are pure; none normalizes beyond what is stated.
BraidWord compose(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);
BraidWord conjugate(const BraidWord& w, const BraidWord& a);  // a^-1 w a
BraidWord flip(const BraidWord& w);        // sigma_i -> sigma_(n-i)
BraidWord mirror(const BraidWord& w);      // negate every letter
BraidWord reverse(const BraidWord& w);     // reverse letter order
BraidWord full_twist(int n, int k);        // ((1..n-1) repeated n times)^k
BraidWord stabilize(const BraidWord& w);
BraidWord destabilize(const BraidWord& w);

Permutation permutation(const BraidWord& w);
int exponent_sum(const BraidWord& w);

/// Three-valued answer for the word problem: Undecided is returned only
/// when a resource cap was hit, never as a substitute for "no".
enum class Decision { Yes, No, Undecided };

struct ReduceOptions {
    std::size_t max_steps = 10'000'000;  // elementary handle reductions
};

/// Dehornoy handle reduction. Complete decision procedure for triviality.
Decision is_trivial(const BraidWord& w, const ReduceOptions& opts = {});
Decision equals(const BraidWord& u, const BraidWord& v, const ReduceOptions& opts = {});

/// Left-greedy (Garside) normal form: delta^k . F_1 ... F_m with each F_i a
/// permutation braid and every adjacent pair left-weighted.
struct NormalForm {
    int strands = 1;
    long long delta_power = 0;
    std::vector<Permutation> factors;

    bool trivial() const { return delta_power == 0 && factors.empty(); }
    bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const BraidWord& w);
bool is_trivial_nf(const BraidWord& w);
bool equals_nf(const BraidWord& u, const BraidWord& v);

/// Parses the paper-style word syntax: comma-separated signed integers and
/// parenthesized groups with integer exponents, e.g. "(1,2,3)^8,-2,-1".
/// Throws braid_error with a character position on malformed input.
BraidWord expand(const std::string& expr, int strands);

std::string to_string(const BraidWord& w);

}  // namespace qa
