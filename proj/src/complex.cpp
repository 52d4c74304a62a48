#include "lefkit/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace lefkit {

SimplicialComplex::SimplicialComplex(int m, std::vector<std::uint64_t> facets)
    : m_(m), facets_(std::move(facets)) {
    if (m < 0 || m > 62) throw std::invalid_argument("vertex count out of range");
    if (facets_.empty()) facets_.push_back(0);  // {emptyset}
    std::uint64_t all = (m == 0) ? 0 : ((1ull << m) - 1);
    for (auto f : facets_)
        if (f & ~all) throw std::invalid_argument("facet vertex out of range");
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    for (std::size_t i = 0; i < facets_.size(); ++i)
        for (std::size_t j = 0; j < facets_.size(); ++j)
            if (i != j && (facets_[i] & facets_[j]) == facets_[i])
                throw std::invalid_argument("facet contained in another facet");
}

SimplicialComplex::SimplicialComplex(int m, const std::vector<std::vector<int>>& facets)
    : SimplicialComplex(m, [&] {
          std::vector<std::uint64_t> masks;
          masks.reserve(facets.size());
          for (const auto& f : facets) masks.push_back(vertices_to_mask(f));
          return masks;
      }()) {}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (auto f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    int c = std::popcount(facets_.front());
    for (auto f : facets_)
        if (std::popcount(f) != c) return false;
    return true;
}

void SimplicialComplex::fill_faces() const {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    if (memo_->filled.load(std::memory_order_acquire)) return;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier(facets_.begin(), facets_.end());
    for (auto f : facets_) seen.insert(f);
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto f : frontier) {
            for (std::uint64_t m = f; m; m &= m - 1) {
                std::uint64_t sub = f & ~(m & -m);
                if (seen.insert(sub).second) next.push_back(sub);
            }
        }
        frontier = std::move(next);
    }
    memo_->by_card.assign(dimension() + 2, {});
    for (auto f : seen) memo_->by_card[std::popcount(f)].push_back(f);
    for (auto& v : memo_->by_card) std::sort(v.begin(), v.end());
    memo_->face_set = std::move(seen);
    memo_->filled.store(true, std::memory_order_release);
}

bool SimplicialComplex::is_face(std::uint64_t mask) const {
    if (!memo_->filled.load(std::memory_order_acquire)) fill_faces();
    return memo_->face_set.count(mask) > 0;
}

const std::vector<std::uint64_t>& SimplicialComplex::faces_of_card(int k) const {
    if (!memo_->filled.load(std::memory_order_acquire)) fill_faces();
    static const std::vector<std::uint64_t> empty;
    if (k < 0 || k >= static_cast<int>(memo_->by_card.size())) return empty;
    return memo_->by_card[k];
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex(g.vertex_count(), maximal_independent_sets(g));
}

bool is_pure(const SimplicialComplex& c) { return c.is_pure(); }

std::vector<mpz_class> f_vector(const SimplicialComplex& c) {
    std::vector<mpz_class> f;
    for (int k = 0; k <= c.dimension() + 1; ++k)
        f.emplace_back(c.faces_of_card(k).size());
    return f;
}

int dimension(const SimplicialComplex& c) { return c.dimension(); }

SimplicialComplex parse_complex(const std::string& text) {
    std::istringstream in(text);
    int m = 0, s = 0;
    if (!(in >> m >> s)) throw std::invalid_argument("parse error: expected \"m s\"");
    in.ignore();
    std::vector<std::vector<int>> facets;
    std::string line;
    while (static_cast<int>(facets.size()) < s && std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<int> f;
        int v;
        while (ls >> v) f.push_back(v);
        facets.push_back(f);
    }
    if (static_cast<int>(facets.size()) != s)
        throw std::invalid_argument("parse error: expected " + std::to_string(s) + " facets");
    return SimplicialComplex(m, facets);
}

}  // namespace lefkit
