#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qa/rational.hpp"

namespace qa {

class surgery_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SurgeryComponent {
    std::string id;
    ExtendedRational coeff;
    bool unknotted = true;  // declared, not computed

    bool operator==(const SurgeryComponent&) const = default;
};

/// Components with rational coefficients plus a symmetric integer linking
/// matrix with zero diagonal.
struct SurgeryPresentation {
    std::vector<SurgeryComponent> components;
    std::vector<std::vector<long long>> linking;

    int index_of(const std::string& id) const;  // -1 if absent
    void validate() const;
};

/// Twists t times along the unknotted component u (Rolfsen twist):
/// u: p/q -> p/(q + t p); other i: r += t*lk(i,u)^2;
/// lk(i,j) += t*lk(i,u)*lk(j,u) for i,j != u; lk(i,u) unchanged.
SurgeryPresentation rolfsen_twist(const SurgeryPresentation& P, const std::string& u,
                                  long long t);

/// Removes a component whose coefficient is infinity (blow-down).
SurgeryPresentation delete_infinity(const SurgeryPresentation& P, const std::string& u);

/// |H1| of the surgered manifold: |det A| with A_ii = p_i, A_ij = q_i*lk(i,j);
/// an infinity-framed component contributes the row of (p,q) = (1,0).
/// 0 encodes infinite homology.
long long h1_order(const SurgeryPresentation& P);

struct TwistMove {
    std::string target;
    long long t = 0;
    bool is_delete = false;
    // expected coefficients after this move (partial map; only listed ids checked)
    std::map<std::string, ExtendedRational> expect;
};

struct TwistScript {
    SurgeryPresentation initial;
    std::vector<TwistMove> moves;
};

struct ScriptStep {
    int move_index;
    std::string description;
    std::map<std::string, ExtendedRational> coeffs;  // state after the move
};

struct ScriptReport {
    std::vector<ScriptStep> steps;
};

/// Applies the moves in order, checking every expectation. Throws
/// surgery_error naming the move index on any assertion failure.
std::pair<SurgeryPresentation, ScriptReport> run_script(const TwistScript& s);

/// One coefficient assignment of a link whose h1 must equal the slope.
struct FitAssignment {
    std::vector<ExtendedRational> coeffs;
    long long slope;
};

/// Everything known about one census link: every proof chain that uses it
/// (scripts carry the printed intermediate expectations; their `initial`
/// linking matrices are ignored) and every Table-3 slope assignment.
struct FitProblem {
    int component_count = 0;
    std::vector<TwistScript> scripts;
    std::vector<FitAssignment> assignments;
    long long bound = 10;
};

/// Exhaustive search over symmetric integer matrices with |entry| <= bound
/// satisfying every script and every assignment simultaneously. Returns the
/// canonically sorted list of all solutions.
std::vector<std::vector<std::vector<long long>>> fit_linking_matrix(const FitProblem& prob);

/// Single-threaded reference implementation (same contract, same output).
std::vector<std::vector<std::vector<long long>>> fit_linking_matrix_serial(
    const FitProblem& prob);

}  // namespace qa
