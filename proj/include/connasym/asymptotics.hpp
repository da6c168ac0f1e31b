#pragma once

#include <vector>

#include "connasym/rational.hpp"

namespace connasym::asym {

// Inputs for the coefficient-transfer engine: the source stream a_1..a_n,
// the derivative stream d_0..d_{r-1}, and the truncation order r. The
// engine computes sum_{k=0}^{r-1} d_k a_{n-k} exactly; the transfer theorem
// guarantees that this approximates b_n with error O(a_{n-r}) whenever every
// a_n is nonzero and the two ratio conditions hold.
struct BenderInput {
  std::vector<Rational> a;  // a[j-1] holds a_j
  std::vector<Rational> d;  // d[k] holds d_k
  unsigned r = 1;
};

// The two instantiations used for connectivity and irreducibility: the
// source stream comes from G(z) - 1 = T(z) - 1, the derivative stream from
// 1/G(z) = 1 - I(z), respectively from 1/T(z)^2 = (1 - I(z))^2. Both are
// computed by series reciprocals, not entered by hand.
BenderInput bender_input_connected(unsigned r, unsigned max_n);
BenderInput bender_input_irreducible(unsigned r, unsigned max_n);

// sum_{k=0}^{r-1} d_k a_{n-k}, exactly. UsageError if n <= r or a stream is
// too short; DomainError if any supplied a_n is zero (hypothesis violation).
Rational bender_expand(const BenderInput& input, unsigned n);

// Finite probes of the two transfer-theorem conditions:
//   ratio1(n) = a_{n-1} / a_n                      (must tend to 0)
//   ratio2(n) = sum_{k=r}^{n-r} |a_k a_{n-k}| / |a_{n-r}|  (must stay bounded)
// Both are exact rationals; the conditions themselves are asymptotic, so
// tests assert decrease/boundedness on declared ranges rather than limits.
struct ConditionProbeRow {
  unsigned n;
  Rational ratio1;
  Rational ratio2;
};

std::vector<ConditionProbeRow> bender_condition_probe(const std::vector<Rational>& a, unsigned r,
                                                      unsigned n_lo, unsigned n_hi);

// Exact probabilities at edge probability 1/2: c_n/g_n and i_n/t_n.
Rational exact_prob_connected(unsigned n);
Rational exact_prob_irreducible(unsigned n);

// Truncated expansions
//   1 - sum_{k=1}^{r-1} i_k           C(n,k) 2^{k(k+1)/2} / 2^{nk}
//   1 - sum_{k=1}^{r-1} (2i_k-i_k2)   C(n,k) 2^{k(k+1)/2} / 2^{nk}
// evaluated exactly (r = 1 gives the empty sum, i.e. 1).
Rational expansion_prob_connected(unsigned n, unsigned r);
Rational expansion_prob_irreducible(unsigned n, unsigned r);

// Connectivity in the independent-edge model with rational edge probability
// p: exact value via the u-weighted graph series (u = p/(1-p)), and the
// truncated expansion with coefficients P_k evaluated at rho = 1/(1-p).
Rational exact_prob_connected_p(unsigned n, const Rational& p);
Rational expansion_prob_connected_p(unsigned n, unsigned r, const Rational& p);

// One row of exact-vs-expansion comparison. abs_error is recomputed from
// the two values at construction; scaled_error divides by the error
// normalizer n^r / 2^{nr}.
struct ExpansionReport {
  unsigned n = 0;
  unsigned r = 0;
  Rational exact;
  Rational approx;
  Rational abs_error;
  Rational scaled_error;
};

enum class ProbKind { kGraph, kTournament };

std::vector<ExpansionReport> error_report(ProbKind kind, unsigned r, unsigned n_lo,
                                          unsigned n_hi);

}  // namespace connasym::asym
