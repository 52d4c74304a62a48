#ifndef LEFKIT_PERAZZO_HPP
#define LEFKIT_PERAZZO_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "lefkit/algebra.hpp"
#include "lefkit/complex.hpp"
#include "lefkit/exact_rank.hpp"
#include "lefkit/graph.hpp"

namespace lefkit {

// Homogeneous form as sparse exponent-vector -> coefficient map. The first
// x_count variables are the "x" block, the remaining u_count the "u" block.
struct MultilinearForm {
    int x_count = 0;
    int u_count = 0;
    int degree = 0;
    std::map<ExponentVector, mpq_class> terms;

    int variable_count() const { return x_count + u_count; }
    bool is_zero() const { return terms.empty(); }
};

// F(Delta) = sum_i x_i u_{F_i} over the facets; requires a pure complex.
MultilinearForm simplicial_form(const SimplicialComplex& c);

// Rows are the exponent vectors of the given monomials.
IntegerMatrix log_matrix(const std::vector<ExponentVector>& monomials);

// Deficient log-matrix rank of the facet monomials; cross-checked against the
// rank of xL^d : A(c)_1 -> A(c)_{d+1}.
bool is_perazzo(const SimplicialComplex& c);

struct IdealizationHilbert {
    int socle_degree = 0;  // dim Delta + 2
    std::vector<mpz_class> h;
};

// h_i = dim A(Delta)_i + dim A(Delta)_{d-i}; requires a pure complex.
IdealizationHilbert idealization_hilbert(const SimplicialComplex& c);

// Hilbert function of A_F: i-th entry is the dimension of the span of the
// order-i partial derivatives of f (the i-th catalecticant rank).
std::vector<long> apolarity_dims(const MultilinearForm& f);

// Derivative along the sum of all variables.
MultilinearForm derive_along_l(const MultilinearForm& f);

// rank of xL : (A_F)_i -> (A_F)_{i+1}
long gorenstein_mult_rank(const MultilinearForm& f, int i);

struct PerazzoVerdict {
    bool applicable = false;  // alpha(g) >= n/3 + 2
    bool wlp_fails = false;
    int restriction_degree = 0;  // i where the monomial restriction fails surjectivity
    bool restriction_confirmed = false;
    bool cross_checked = false;  // gorenstein_mult_rank found a deficient map
    int deficient_degree = -1;
};

// WLP-failure predicate for the Gorenstein algebra of F(w(g)).
PerazzoVerdict perazzo_wlp_predicate(const Graph& g, bool cross_check = true);

}  // namespace lefkit

#endif
