#ifndef MCT_LATTICE_HPP
#define MCT_LATTICE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "mct/ideal.hpp"
#include "mct/poset.hpp"

namespace mct {

/// lcm-lattice of a proper nonzero monomial ideal: every lcm of a subset of
/// the minimal generators, with bottom lcm(∅) = 1, ordered by divisibility.
/// Elements are stored in canonical (graded, then lex) order, bottom first.
class LcmLattice {
public:
    static LcmLattice build(const MonomialIdeal& I, std::size_t element_cap = std::size_t{1} << 16);

    const MonomialIdeal& ideal() const { return ideal_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const Monomial& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }

    int bottom() const { return 0; }
    int top() const { return top_; }
    /// Atom element indices in generator order; atoms are exactly the
    /// minimal generators.
    const std::vector<int>& atoms() const { return atoms_; }

    /// Longest-chain height of an element above the bottom.
    int height(int i) const { return heights_[static_cast<std::size_t>(i)]; }
    /// Height of the lattice = height of the top element.
    int height() const { return heights_[static_cast<std::size_t>(top_)]; }

    bool leq(int a, int b) const;
    int join(int a, int b) const;
    /// Index of the given monomial, or -1 when absent.
    int index_of(const Monomial& m) const;

    /// Elements strictly between a and b (a must divide b), as an induced
    /// poset plus the lattice indices backing its elements.
    std::pair<Poset, std::vector<int>> open_interval(int a, int b) const;

private:
    MonomialIdeal ideal_;
    std::vector<Monomial> elems_;
    std::map<Monomial, int> index_;
    std::vector<int> heights_;
    std::vector<int> atoms_;
    int top_ = 0;
};

/// Intersection lattice of the coordinate-subspace arrangement of a
/// square-free proper nonzero ideal. Elements are the nonempty intersections
/// of the components V(P), P a minimal prime, each stored as the union of the
/// vanishing-variable sets; v ≤ w means subspace containment (vanishing set
/// of v contains that of w). The ambient space is not an element.
class IntersectionLattice {
public:
    static IntersectionLattice build(const MonomialIdeal& I);

    int nvars() const { return nvars_; }
    int size() const { return static_cast<int>(masks_.size()); }
    std::uint32_t vanishing_mask(int i) const { return masks_[static_cast<std::size_t>(i)]; }
    /// Affine dimension d(v) = nvars - |vanishing set|.
    int subspace_dim(int i) const;

    bool leq(int a, int b) const;

    /// Poset induced on {w : v < w}, plus backing element indices.
    std::pair<Poset, std::vector<int>> strict_upper(int v) const;

    /// Maximal elements = the components = the minimal primes.
    const std::vector<int>& maximal_elements() const { return maximal_; }

private:
    int nvars_ = 0;
    std::vector<std::uint32_t> masks_;
    std::vector<int> maximal_;
};

/// Duality map from the intersection lattice of I onto L_{I^dual} minus its
/// bottom: v ↦ the product of the variables vanishing on v. Returns, per
/// intersection-lattice element, the corresponding element index of `dual`.
/// Verifies bijectivity onto L_{I^dual} \ {1} and order reversal.
std::vector<int> duality_mu(const IntersectionLattice& A, const LcmLattice& dual);

} // namespace mct

#endif
