#pragma once

#include <vector>

#include "qa/braid.hpp"
#include "qa/laurent.hpp"

namespace qa {

int closure_component_count(const BraidWord& w);

/// Reduced (n-1)-dimensional Burau matrix of w, entries in Z[t, t^-1].
std::vector<std::vector<Laurent>> reduced_burau(const BraidWord& w);

/// Alexander polynomial of the closure (must be a knot), symmetrized and
/// sign-fixed so that delta(1) = 1.
Laurent alexander(const BraidWord& w);

/// |delta(-1)| of the knot closure.
BigInt determinant(const BraidWord& w);

/// Jones polynomial of the closure in the variable q = t^(1/2); for knots
/// every stored exponent is even, i.e. an integer power of t.
Laurent jones_q(const BraidWord& w);

/// Jones polynomial of a knot closure in the variable t. Throws if any
/// q-exponent is odd (closure is not a knot).
Laurent jones(const BraidWord& w);

/// |V(-1)| = evaluation of the q-form at q = i, which is an integer up to a
/// unit for any closure.
BigInt jones_determinant(const BraidWord& w);

/// (c - n + 1) / 2 for an all-positive word whose closure is a knot.
int genus_positive_braid(const BraidWord& w);

/// Necessary Ozsvath-Szabo form: coefficients all +-1, alternating in sign,
/// extreme coefficients +1 (requires a symmetric p with p(1) = 1).
bool is_lspace_alexander_form(const Laurent& p);

}  // namespace qa
