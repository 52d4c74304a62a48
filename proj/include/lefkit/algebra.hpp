#ifndef LEFKIT_ALGEBRA_HPP
#define LEFKIT_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lefkit/complex.hpp"
#include "lefkit/exact_rank.hpp"
#include "lefkit/graph.hpp"

namespace lefkit {

using ExponentVector = std::vector<int>;

// Base field for rank verdicts: 0 = rationals, otherwise a prime p.
struct FieldSpec {
    unsigned long p = 0;
    std::string name() const { return p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")"; }
};

// Artinian monomial algebra K[x_1..x_m] / (I_Delta + (x_v^{d_v})), with a full
// monomial basis per degree. Immutable after build.
class GradedMonomialAlgebra {
public:
    GradedMonomialAlgebra(SimplicialComplex complex, std::vector<int> caps);

    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<int>& caps() const { return caps_; }
    int variable_count() const { return complex_.vertex_count(); }
    int top_degree() const { return static_cast<int>(basis_.size()) - 1; }

    const std::vector<ExponentVector>& basis(int degree) const;
    int dim(int degree) const;
    // index of a monomial within its degree's basis, -1 when it reduces to zero
    int index_of(const ExponentVector& e) const;

    std::vector<mpz_class> hilbert() const;

private:
    SimplicialComplex complex_;
    std::vector<int> caps_;
    std::vector<std::vector<ExponentVector>> basis_;
    std::vector<std::map<ExponentVector, int>> index_;
};

GradedMonomialAlgebra build_algebra(const SimplicialComplex& c, const std::vector<int>& caps);
// A(w(g), d): the 2n-variable algebra over Ind(w(g)), cap d_i on both x_i and y_i.
GradedMonomialAlgebra whiskered_algebra(const Graph& g, const std::vector<int>& caps);
std::vector<mpz_class> hilbert_function(const GradedMonomialAlgebra& a);

// Matrix of xL^s : A_i -> A_{i+s} in the monomial bases (rows = target).
IntegerMatrix mult_map_matrix(const GradedMonomialAlgebra& a, int i, int s);

enum class MapStatus { injective, surjective, bijective, deficient };

struct MapRecord {
    int degree = 0;  // source degree i
    int shift = 1;   // s
    long source_dim = 0;
    long target_dim = 0;
    long required_rank = 0;
    long rank = 0;
    MapStatus status = MapStatus::deficient;
    bool not_injective = false;
    bool not_surjective = false;
    bool certified = false;
};

struct LefschetzReport {
    std::vector<mpz_class> hilbert;
    std::vector<MapRecord> maps;
    bool wlp = false;
    bool slp = false;
    bool slp_checked = false;
    FieldSpec field;
    // for level (pure) inputs: statuses follow the injective-then-surjective pattern
    bool level_monotone = true;
};

LefschetzReport wlp_check(const GradedMonomialAlgebra& a, FieldSpec field = {},
                          int jobs = 1);
LefschetzReport slp_check(const GradedMonomialAlgebra& a, FieldSpec field = {},
                          int jobs = 1);

// Squarefree case only: transpose of xL equals differentiation by L.
bool transpose_is_derivative(const GradedMonomialAlgebra& a, int i);

struct Witness {
    int degree = 0;                              // i = floor((n+|C|)/2)
    std::map<ExponentVector, long> expansion;    // signed combination in A(w(g))_i
};

// Kernel element of the transpose of xL : A_{i-1} -> A_i in A(w(g)),
// certifying non-surjectivity. C must be independent in g.
Witness non_surjectivity_witness(const Graph& g, const std::vector<int>& c);

// Degrees i where xL : A_{i-1} -> A_i must fail surjectivity in A(w(g)),
// when alpha(g) >= n/3 + 2; nullopt otherwise.
std::optional<std::pair<int, int>> alpha_criterion(const Graph& g);

struct BlockDecomposition {
    long pure_y_dim_source = 0;
    long pure_y_dim_target = 0;
    std::vector<long> block_dims_source;  // per x_j block
    std::vector<long> block_dims_target;
    bool lower_triangular = false;
    bool diagonal_blocks_match = false;
};

// Validates the direct-sum decomposition of xL^s on A(w(K_n), caps): pure-y
// monomials first, then one block per x_j; diagonal blocks are the maps of the
// monomial complete-intersection truncations. Throws on structural failure.
BlockDecomposition block_structure_complete(int n, const std::vector<int>& caps, int i,
                                            int s);

}  // namespace lefkit

#endif
