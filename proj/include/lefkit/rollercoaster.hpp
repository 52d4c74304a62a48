#ifndef LEFKIT_ROLLERCOASTER_HPP
#define LEFKIT_ROLLERCOASTER_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "lefkit/graph.hpp"

namespace lefkit {

// Target sequence a_1..a_q: binomials below ceil(q/2), 3^q plus a permuted
// multiple of c = C(q, ceil(q/2)+1) from there on.
struct TargetSequence {
    int q = 0;
    std::vector<int> pi;  // images of ceil(q/2)..q, in order
    std::vector<mpz_class> a;
    mpz_class c;
};

struct Certificate {
    Graph graph;
    mpq_class scaling_factor;  // T > 0
    mpq_class epsilon;         // > 0
};

// pi lists the images of ceil(q/2)..q and must be a bijection on that range.
TargetSequence target_sequence(int q, const std::vector<int>& pi);

std::vector<int> identity_permutation(int q);

// a_k / C(q,k) nondecreasing, decided by cross-multiplication.
bool ratio_condition(const std::vector<mpz_class>& a);

struct EpsilonBound {
    mpq_class bound;  // (1/4) min of the nonzero pair-sum gaps
    std::vector<std::pair<int, int>> zero_gap_pairs;  // pairs whose gap vanishes
};

EpsilonBound epsilon_bound(const std::vector<mpz_class>& a);

// For all k < l in range: a_k + a_{q-k+1} < a_l + a_{q-l+1} iff pi(k) < pi(l).
bool pair_order_check(const std::vector<mpz_class>& a, const std::vector<int>& pi,
                      const std::vector<int>& range);

// default verification range {ceil(q/2)+2, ..., q}
std::vector<int> default_pair_order_range(int q);

// |i_k(G)/T - a_k| < epsilon for all k, exact rational arithmetic.
bool certificate_check(const Certificate& cert, const std::vector<mpz_class>& a);

// h_0 = 1, h_k = i_k + i_{d-k}, h_d = 1; requires d >= alpha + 1.
std::vector<mpz_class> roller_coaster_hvector(const IndependenceSequence& iseq, int d);

}  // namespace lefkit

#endif
