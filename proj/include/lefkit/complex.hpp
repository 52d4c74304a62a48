#ifndef LEFKIT_COMPLEX_HPP
#define LEFKIT_COMPLEX_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "lefkit/graph.hpp"

namespace lefkit {

// Simplicial complex on vertex set 1..m, given by its facets (as bitmasks).
// Faces are enumerated lazily from the facets and memoized.
class SimplicialComplex {
public:
    SimplicialComplex(int m, std::vector<std::uint64_t> facets);
    SimplicialComplex(int m, const std::vector<std::vector<int>>& facets);

    int vertex_count() const { return m_; }
    const std::vector<std::uint64_t>& facets() const { return facets_; }

    int dimension() const;  // -1 for the void-free complex {emptyset}
    bool is_pure() const;
    bool is_face(std::uint64_t mask) const;

    // faces of cardinality k, sorted; k = 0 gives {emptyset}
    const std::vector<std::uint64_t>& faces_of_card(int k) const;

private:
    // copies of a complex share the (immutable once filled) face cache
    struct FaceMemo {
        std::mutex mutex;
        std::atomic<bool> filled{false};
        std::vector<std::vector<std::uint64_t>> by_card;
        std::unordered_set<std::uint64_t> face_set;
    };

    void fill_faces() const;

    int m_;
    std::vector<std::uint64_t> facets_;
    std::shared_ptr<FaceMemo> memo_ = std::make_shared<FaceMemo>();
};

SimplicialComplex independence_complex(const Graph& g);
bool is_pure(const SimplicialComplex& c);
// (f_{-1}=1, f_0, ..., f_dim)
std::vector<mpz_class> f_vector(const SimplicialComplex& c);
int dimension(const SimplicialComplex& c);

// Facet-list format: first line "m s", then s lines of vertex labels.
SimplicialComplex parse_complex(const std::string& text);

}  // namespace lefkit

#endif
