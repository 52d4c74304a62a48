#include "lefkit/exact_rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefkit {

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntegerMatrix p(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < other.cols_; ++j) p.at(i, j) += x * other.at(k, j);
        }
    return p;
}

namespace {

using u128 = unsigned __int128;

unsigned long pow_mod(unsigned long b, unsigned long e, unsigned long m) {
    unsigned long r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<unsigned long>((u128)r * b % m);
        b = static_cast<unsigned long>((u128)b * b % m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (p % q == 0) return p == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    unsigned long d = p - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        unsigned long x = pow_mod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = static_cast<unsigned long>((u128)x * x % p);
            if (x == p - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

RankResult rank_mod_p(const IntegerMatrix& m, unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: p is not prime");
    const int rows = m.rows(), cols = m.cols();
    if (p >= (1ul << 21) || rows > (1 << 20)) {
        // fall back to a plainly reduced elimination outside the lazy window
        std::vector<std::vector<unsigned long>> a(rows, std::vector<unsigned long>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                a[i][j] = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p);
        long rank = 0;
        for (int col = 0; col < cols && rank < rows; ++col) {
            int piv = -1;
            for (int i = static_cast<int>(rank); i < rows; ++i)
                if (a[i][col] != 0) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(a[piv], a[rank]);
            unsigned long inv = pow_mod(a[rank][col], p - 2, p);
            for (int j = col; j < cols; ++j)
                a[rank][j] = static_cast<unsigned long>((u128)a[rank][j] * inv % p);
            for (int i = static_cast<int>(rank) + 1; i < rows; ++i) {
                unsigned long f = a[i][col];
                if (f == 0) continue;
                for (int j = col; j < cols; ++j) {
                    unsigned long sub = static_cast<unsigned long>((u128)f * a[rank][j] % p);
                    a[i][j] = (a[i][j] + p - sub) % p;
                }
            }
            ++rank;
        }
        return RankResult{rank, p, true};
    }

    // Left-looking elimination with lazy reduction: accumulators hold sums of
    // at most 2^20 products below p^2 < 2^42, so everything stays in uint64
    // and the inner loop is a plain multiply-add.
    std::vector<std::vector<unsigned long>> pivot_rows;  // reduced, leading 1
    std::vector<int> leads;                              // ascending
    std::vector<unsigned long> acc(cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) acc[j] = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), p);
        for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
            int lead = leads[k];
            unsigned long f = acc[lead] % p;
            if (f == 0) continue;
            f = p - f;  // add f * pivot ≡ subtract (acc[lead]) * pivot
            const unsigned long* pr = pivot_rows[k].data();
            for (int j = lead; j < cols; ++j) acc[j] += f * pr[j];
        }
        int lead = -1;
        for (int j = 0; j < cols; ++j) {
            acc[j] %= p;
            if (lead < 0 && acc[j] != 0) lead = j;
        }
        if (lead < 0) continue;
        unsigned long inv = pow_mod(acc[lead], p - 2, p);
        std::vector<unsigned long> row(cols, 0);
        for (int j = lead; j < cols; ++j)
            row[j] = static_cast<unsigned long>((u128)acc[j] * inv % p);
        auto pos = std::lower_bound(leads.begin(), leads.end(), lead);
        std::size_t idx = pos - leads.begin();
        leads.insert(pos, lead);
        pivot_rows.insert(pivot_rows.begin() + idx, std::move(row));
        if (static_cast<int>(pivot_rows.size()) == std::min(rows, cols)) break;
    }
    return RankResult{static_cast<long>(pivot_rows.size()), p, true};
}

RankResult rank_exact(const IntegerMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    // Fraction-free elimination; each updated row is divided by its content
    // to keep entry growth bounded on the sparse 0/1 matrices that dominate here.
    auto reduce_content = [](std::vector<mpz_class>& row, int from) {
        mpz_class g = 0;
        for (int j = from; j < static_cast<int>(row.size()); ++j) {
            if (row[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
            if (g == 1) return;
        }
        if (g > 1)
            for (int j = from; j < static_cast<int>(row.size()); ++j)
                if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
    };

    long rank = 0;
    const long maxrank = std::min(rows, cols);
    for (int col = 0; col < cols && rank < maxrank; ++col) {
        int piv = -1;
        for (int i = static_cast<int>(rank); i < rows; ++i) {
            if (a[i][col] != 0 &&
                (piv < 0 || mpz_cmpabs(a[i][col].get_mpz_t(), a[piv][col].get_mpz_t()) < 0))
                piv = i;
        }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        const std::vector<mpz_class>& prow = a[rank];
        for (int i = static_cast<int>(rank) + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            mpz_class f = a[i][col];
            for (int j = col; j < cols; ++j) a[i][j] = prow[col] * a[i][j] - f * prow[j];
            reduce_content(a[i], col + 1);
        }
        ++rank;
    }
    return RankResult{rank, 0, true};
}

std::pair<bool, RankResult> has_maximal_rank(const IntegerMatrix& m) {
    const long target = std::min(m.rows(), m.cols());
    if (target == 0) return {true, RankResult{0, 0, true}};
    // fixed probe primes above 2^20
    for (unsigned long p : {1048583ul, 1048589ul, 1048601ul}) {
        RankResult r = rank_mod_p(m, p);
        if (r.rank == target) return {true, RankResult{target, 0, true}};
    }
    RankResult exact = rank_exact(m);
    return {exact.rank == target, exact};
}

namespace {

void normalize_content(std::map<int, mpz_class>& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    bool flip = row.begin()->second < 0;
    if (g > 1 || flip) {
        for (auto& [c, v] : row) {
            if (g > 1) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            if (flip) v = -v;
        }
    }
}

}  // namespace

void SparseRank::add_row(const std::map<int, mpz_class>& row) {
    std::map<int, mpz_class> r;
    for (const auto& [c, v] : row)
        if (v != 0) r[c] = v;
    while (!r.empty()) {
        int lead = r.begin()->first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            normalize_content(r);
            pivots_.emplace(lead, std::move(r));
            return;
        }
        const std::map<int, mpz_class>& p = it->second;
        mpz_class pc = p.at(lead), rc = r.begin()->second;
        std::map<int, mpz_class> next;
        for (const auto& [c, v] : r) {
            auto pv = p.find(c);
            mpz_class nv = pc * v - (pv == p.end() ? mpz_class(0) : rc * pv->second);
            if (nv != 0) next[c] = nv;
        }
        for (const auto& [c, v] : p) {
            if (r.count(c)) continue;
            mpz_class nv = -rc * v;
            if (nv != 0) next[c] = nv;
        }
        next.erase(lead);
        r = std::move(next);
        if (!r.empty()) normalize_content(r);
    }
}

void SparseRank::add_row(const std::map<int, mpq_class>& row) {
    mpz_class lcm = 1;
    for (const auto& [c, v] : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::map<int, mpz_class> r;
    for (const auto& [c, v] : row) {
        mpq_class s = v * mpq_class(lcm);
        s.canonicalize();
        if (s != 0) r[c] = s.get_num();
    }
    add_row(r);
}

}  // namespace lefkit
