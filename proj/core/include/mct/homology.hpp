#ifndef MCT_HOMOLOGY_HPP
#define MCT_HOMOLOGY_HPP

#include <map>

#include "mct/modp.hpp"
#include "mct/simplicial.hpp"

namespace mct {

/// Homology dimensions by degree; zero entries are omitted.
struct HomologyVector {
    std::map<int, int> dims;

    int operator[](int k) const {
        auto it = dims.find(k);
        return it == dims.end() ? 0 : it->second;
    }
    /// Largest degree with nonzero dimension; `fallback` when all zero.
    int top_degree(int fallback = -1000) const {
        return dims.empty() ? fallback : dims.rbegin()->first;
    }
    bool operator==(const HomologyVector& o) const { return dims == o.dims; }
};

/// Chain complex over F_p. Degree min_degree + t has dimension
/// dim_by_degree[t]; boundary[t] maps that degree down one.
struct ChainComplexModP {
    int p = 2;
    int min_degree = -1;
    std::vector<int> dim_by_degree;
    std::vector<MatModP> boundary;

    int degree_count() const { return static_cast<int>(dim_by_degree.size()); }
    /// Verifies every composite of consecutive boundaries is zero.
    bool composes_to_zero() const;
};

HomologyVector homology_dims(const ChainComplexModP& C);

/// Augmented simplicial chain complex: the empty face sits in degree -1, so
/// homology_dims of the result is reduced homology. The void complex yields
/// the zero complex.
ChainComplexModP chain_complex(const SimplicialComplex& K, int p);

/// Quotient complex of the pair (K, K0); K0 must be a subcomplex of K.
ChainComplexModP relative_chain_complex(const SimplicialComplex& K,
                                        const SimplicialComplex& K0, int p);

/// Reduced homology dimensions over F_p. Conventions: the irrelevant complex
/// {∅} has dim H~_{-1} = 1; the void complex has all dimensions zero.
HomologyVector reduced_homology_dims(const SimplicialComplex& K, int p);

/// Relative homology dimensions of the pair (K, K0). With K0 void this
/// equals the reduced homology of K.
HomologyVector relative_homology_dims(const SimplicialComplex& K,
                                      const SimplicialComplex& K0, int p);

} // namespace mct

#endif
