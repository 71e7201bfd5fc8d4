#ifndef MCT_SIMPLICIAL_HPP
#define MCT_SIMPLICIAL_HPP

#include <set>
#include <vector>

#include "mct/poset.hpp"

namespace mct {

/// Finite abstract simplicial complex on vertices 0..vertex_count()-1.
/// Distinguishes the void complex (no faces at all) from the irrelevant
/// complex {∅}: every nonvoid complex contains the empty face.
class SimplicialComplex {
public:
    /// The complex with no faces whatsoever.
    static SimplicialComplex void_complex(int nvertices = 0);
    /// The complex whose only face is the empty face.
    static SimplicialComplex irrelevant_complex(int nvertices = 0);
    /// Downward closure of the given faces (vertex lists, any order).
    static SimplicialComplex closure(int nvertices, const std::vector<std::vector<int>>& faces);
    /// Builds from a face list that is already downward closed; verifies
    /// closedness by checking every codimension-one subface.
    static SimplicialComplex from_closed_faces(int nvertices, const std::vector<std::vector<int>>& faces);

    int vertex_count() const { return nvertices_; }
    bool is_void() const { return void_; }
    /// -1 for the irrelevant complex, -2 for the void complex.
    int dim() const;

    /// faces()[k] lists the k-dimensional faces, each sorted ascending; the
    /// lists are ordered lexicographically. The empty face is implicit in
    /// every nonvoid complex.
    const std::vector<std::vector<std::vector<int>>>& faces() const { return by_dim_; }
    const std::vector<std::vector<int>>& faces_of_dim(int k) const;

    /// Number of faces including the empty face (0 for the void complex).
    long long face_count() const;
    /// f_k for k = -1..dim; the reduced Euler characteristic weights f_k by (-1)^k.
    long long euler_characteristic_reduced() const;

    bool has_face(std::vector<int> f) const;
    bool contains_complex(const SimplicialComplex& sub) const;
    bool is_cone_with_apex(int v) const;

    /// Full subcomplex on the given vertices, relabeled 0..k-1 in order.
    SimplicialComplex induced(const std::vector<int>& vertices) const;

    bool operator==(const SimplicialComplex& o) const {
        return nvertices_ == o.nvertices_ && void_ == o.void_ && all_ == o.all_;
    }

private:
    int nvertices_ = 0;
    bool void_ = true;
    std::vector<std::vector<std::vector<int>>> by_dim_;
    std::set<std::vector<int>> all_; // nonempty faces only

    void rebuild_by_dim();
};

/// Order complex: all chains of the poset, including the empty chain. The
/// order complex of the empty poset is the irrelevant complex.
SimplicialComplex order_complex(const Poset& p);

} // namespace mct

#endif
