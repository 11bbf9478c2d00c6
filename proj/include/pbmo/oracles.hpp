#pragma once

#include <optional>
#include <vector>

#include "pbmo/bitstring.hpp"
#include "pbmo/landscape.hpp"
#include "pbmo/problems.hpp"
#include "pbmo/rational.hpp"

namespace pbmo {

// Closed-form membership predicates for the published Pareto sets and
// (non-global) local-optima sets. These are claims under test, never ground
// truth; OJZR dispatches on (n-k) mod l.
bool in_oracle_pareto_set(const ProblemInstance& inst, const BitString& x);
bool in_oracle_local_optima(const ProblemInstance& inst, const BitString& x);

// Materialised in ascending index order; n must not exceed cap.
std::vector<BitString> oracle_pareto_set(const ProblemInstance& inst, int cap = default_enumeration_cap());
std::vector<BitString> oracle_local_optima(const ProblemInstance& inst, int cap = default_enumeration_cap());

// Image of oracle_pareto_set, deduplicated, ascending.
std::vector<ObjectiveVector> oracle_front(const ProblemInstance& inst, int cap = default_enumeration_cap());

// Front tuples exactly as printed in the property table, ascending and
// deduplicated; nullopt for families the table does not cover.
std::optional<std::vector<ObjectiveVector>> claimed_front_tuples(const ProblemInstance& inst);

// (2^n - 2 * sum_{s=n-k+1}^{n-1} C(n,s)) / 2^n, for 1 <= k < n/2.
ExactRational ratio_ojzj(int n, int k);

// floor(n/2 - sqrt(n ln 2)), with the floor settled by an exact test.
int ojzj_threshold_k(int n);

// 3*sqrt(2)/sqrt(pi n) for even n, 4*sqrt(2)/sqrt(pi n) for odd n.
double ojzj_asymptote(int n);

// (1 + sum_{i=ceil(k/l)}^{b} C(b,i) + C(b, floor(k/l)) C(n - floor(k/l) l, n-k)) / 2^n
// for 1 < k < floor(n/2), l | n, b > 1, (n-k) mod l != 0.
ExactRational ratio_ojzr(int n, int k, int l);

// Exact test of r <= 2^(-1 + n(1/l - 1/2)).
bool ojzr_bound_holds(const ExactRational& r, int n, int l);

// The three numerator terms of ratio_ojzr.
struct OjzrTerms {
    BigInt boundary;     // 1^n
    BigInt blockwise;    // sum of C(b,i)
    BigInt column;       // C(b, floor(k/l)) * C(n - floor(k/l) l, n-k)
};
OjzrTerms ojzr_terms(int n, int k, int l);

}  // namespace pbmo
