#ifndef LEFKIT_EXACT_RANK_HPP
#define LEFKIT_EXACT_RANK_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace lefkit {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    IntegerMatrix transpose() const;
    IntegerMatrix operator*(const IntegerMatrix& other) const;
    bool operator==(const IntegerMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

struct RankResult {
    long rank = 0;
    unsigned long field = 0;  // 0 = rationals, otherwise the prime p
    bool certified = false;   // exact over the stated field
};

bool is_prime(unsigned long p);

// Rank over GF(p). Throws std::invalid_argument if p is not prime.
RankResult rank_mod_p(const IntegerMatrix& m, unsigned long p);

// Rank over Q by fraction-free elimination. Always certified.
RankResult rank_exact(const IntegerMatrix& m);

// Maximal-rank predicate over Q. Fast path: a modular rank equal to
// min(rows, cols) already certifies the rational rank. Deficient probes
// escalate to rank_exact so failure verdicts are unconditional.
std::pair<bool, RankResult> has_maximal_rank(const IntegerMatrix& m);

// Incremental exact rank of sparse rational rows (cleared to integers).
// Used for catalecticant matrices whose row/column counts dwarf the rank.
class SparseRank {
public:
    // Row given as column -> coefficient; zero coefficients ignored.
    void add_row(const std::map<int, mpz_class>& row);
    void add_row(const std::map<int, mpq_class>& row);
    long rank() const { return static_cast<long>(pivots_.size()); }

private:
    // pivot column -> content-normalized row with that leading column
    std::map<int, std::map<int, mpz_class>> pivots_;
};

}  // namespace lefkit

#endif
