#include "lefkit/rollercoaster.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefkit {

namespace {

mpz_class binom(int q, int k) {
    if (k < 0 || k > q) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), q, k);
    return r;
}

int ceil_half(int q) { return (q + 1) / 2; }

}  // namespace

std::vector<int> identity_permutation(int q) {
    std::vector<int> pi;
    for (int i = ceil_half(q); i <= q; ++i) pi.push_back(i);
    return pi;
}

TargetSequence target_sequence(int q, const std::vector<int>& pi) {
    if (q < 2) throw std::invalid_argument("target_sequence: q must be at least 2");
    const int lo = ceil_half(q);
    if (static_cast<int>(pi.size()) != q - lo + 1)
        throw std::invalid_argument("target_sequence: pi must list images of " +
                                    std::to_string(lo) + ".." + std::to_string(q));
    std::vector<bool> seen(q + 1, false);
    for (int v : pi) {
        if (v < lo || v > q || seen[v])
            throw std::invalid_argument("target_sequence: pi is not a bijection on the range");
        seen[v] = true;
    }
    TargetSequence t;
    t.q = q;
    t.pi = pi;
    t.c = binom(q, lo + 1);
    mpz_class three_q;
    mpz_ui_pow_ui(three_q.get_mpz_t(), 3, q);
    for (int i = 1; i <= q; ++i) {
        if (i <= lo - 1)
            t.a.push_back(binom(q, i));
        else
            t.a.push_back(three_q + pi[i - lo] * t.c);
    }
    return t;
}

bool ratio_condition(const std::vector<mpz_class>& a) {
    if (a.empty()) throw std::invalid_argument("ratio_condition: empty sequence");
    const int q = static_cast<int>(a.size());
    for (int k = 1; k < q; ++k) {
        // a_k / C(q,k) <= a_{k+1} / C(q,k+1)
        if (a[k - 1] * binom(q, k + 1) > a[k] * binom(q, k)) return false;
    }
    return true;
}

EpsilonBound epsilon_bound(const std::vector<mpz_class>& a) {
    const int q = static_cast<int>(a.size());
    if (q < 2) throw std::invalid_argument("epsilon_bound: need length at least 2");
    auto pair_sum = [&](int k) { return a[k - 1] + a[q - k]; };  // a_k + a_{q-k+1}
    EpsilonBound out;
    bool have = false;
    mpz_class best;
    for (int k = 1; k <= q; ++k)
        for (int l = k + 1; l <= q; ++l) {
            mpz_class gap = abs(pair_sum(l) - pair_sum(k));
            if (gap == 0) {
                out.zero_gap_pairs.emplace_back(k, l);
            } else if (!have || gap < best) {
                best = gap;
                have = true;
            }
        }
    if (!have) throw std::invalid_argument("degenerate sequence: all pair sums equal");
    out.bound = mpq_class(best, 4);
    out.bound.canonicalize();
    return out;
}

std::vector<int> default_pair_order_range(int q) {
    // k >= ceil(q/2)+2 keeps both C(q,k-1) and the partner binomial below c,
    // which is exactly where the strict pair-sum order follows the permutation
    // for every pi; one index lower already admits ties at odd q (q = 5:
    // a_4 + a_2 = a_5 + a_1 = 273 under the identity).
    std::vector<int> r;
    for (int i = ceil_half(q) + 2; i <= q; ++i) r.push_back(i);
    return r;
}

bool pair_order_check(const std::vector<mpz_class>& a, const std::vector<int>& pi,
                      const std::vector<int>& range) {
    const int q = static_cast<int>(a.size());
    const int lo = ceil_half(q);
    for (int i : range)
        if (i < lo || i > q)
            throw std::invalid_argument("pair_order_check: range index outside pi domain");
    auto pair_sum = [&](int k) { return a[k - 1] + a[q - k]; };
    auto pival = [&](int k) { return pi[k - lo]; };
    for (std::size_t s = 0; s < range.size(); ++s)
        for (std::size_t t = s + 1; t < range.size(); ++t) {
            int k = std::min(range[s], range[t]);
            int l = std::max(range[s], range[t]);
            if (k == l) continue;
            bool sums = pair_sum(k) < pair_sum(l);
            bool perms = pival(k) < pival(l);
            if (sums != perms) return false;
        }
    return true;
}

bool certificate_check(const Certificate& cert, const std::vector<mpz_class>& a) {
    const int q = static_cast<int>(a.size());
    if (cert.scaling_factor <= 0 || cert.epsilon <= 0)
        throw std::invalid_argument("certificate_check: T and epsilon must be positive");
    if (!is_well_covered(cert.graph))
        throw std::invalid_argument("certificate_check: graph is not well-covered");
    IndependenceSequence iseq = independence_sequence(cert.graph);
    if (iseq.alpha != q)
        throw std::invalid_argument("certificate_check: independence number != sequence length");
    // |i_k/T - a_k| < eps  <=>  |i_k - T a_k| < eps T  (T > 0)
    for (int k = 1; k <= q; ++k) {
        mpq_class diff = mpq_class(iseq.counts[k]) - cert.scaling_factor * mpq_class(a[k - 1]);
        if (abs(diff) >= cert.epsilon * cert.scaling_factor) return false;
    }
    return true;
}

std::vector<mpz_class> roller_coaster_hvector(const IndependenceSequence& iseq, int d) {
    if (d < iseq.alpha + 1)
        throw std::invalid_argument("roller_coaster_hvector: d must be at least alpha + 1");
    auto i_of = [&](int k) -> mpz_class {
        if (k < 0 || k > iseq.alpha) return 0;
        return iseq.counts[k];
    };
    std::vector<mpz_class> h;
    h.push_back(1);
    for (int k = 1; k <= d - 1; ++k) h.push_back(i_of(k) + i_of(d - k));
    h.push_back(1);
    for (int k = 0; k <= d; ++k)
        if (h[k] != h[d - k]) throw std::logic_error("roller_coaster_hvector: not palindromic");
    return h;
}

}  // namespace lefkit
