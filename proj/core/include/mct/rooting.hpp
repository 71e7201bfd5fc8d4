#ifndef MCT_ROOTING_HPP
#define MCT_ROOTING_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mct/ideal.hpp"
#include "mct/lattice.hpp"
#include "mct/simplicial.hpp"

namespace mct {

/// Assignment of an atom to every lattice element above the bottom, stored
/// as lattice element indices; the bottom slot holds -1.
struct RootingMap {
    std::vector<int> atom_of;

    bool operator==(const RootingMap& o) const { return atom_of == o.atom_of; }
    bool operator<(const RootingMap& o) const { return atom_of < o.atom_of; }
};

/// Rooting complex on the atom set: vertex i is position i within
/// L.atoms(); apex is the atom position of ρ(top). Always a cone.
struct RootingComplex {
    SimplicialComplex complex;
    int apex = -1;

    int dim() const { return complex.dim(); }
};

/// ρ(m) = the order-least atom dividing m. `order` lists lattice atom
/// indices, most preferred first; it must be a permutation of L.atoms().
RootingMap rooting_from_order(const LcmLattice& L, const std::vector<int>& order);

/// Checks both rooting clauses: ρ(m) is an atom dividing m, and ρ is
/// constant on every interval [ρ(m), m].
bool is_rooting_map(const LcmLattice& L, const RootingMap& rho);

/// Product of divisor-atom counts over the elements above the bottom,
/// saturating at cap + 1: the naive backtracking search space.
long long rooting_search_space(const LcmLattice& L, long long cap = 1'000'000);

/// Visits every rooting map exactly once, backtracking over elements in
/// height order with interval-consistency pruning. The visitor returns
/// false to stop early. Returns the number of maps visited. Throws
/// size_error when rooting_search_space exceeds cap.
long long enumerate_rooting_maps(const LcmLattice& L,
                                 const std::function<bool(const RootingMap&)>& visit,
                                 long long cap = 1'000'000);

/// Γ_{I,ρ}: F is a face iff every G ⊆ F is unbroken, i.e. ρ(join G) ∈ G;
/// the empty set is unbroken by convention. Built level by level.
RootingComplex rooting_complex(const LcmLattice& L, const RootingMap& rho);

enum class RootingSearchMode { all, orders };

struct MinRootingDim {
    int min_dim = -1;
    bool exhaustive = false;
    long long maps_examined = 0;
    /// How the minimizing map arose: "order" or "enumeration".
    std::string witness_origin;
    RootingMap witness;
};

/// Minimum of dim Γ over the requested class of rooting maps. mode=orders
/// tries order-induced maps: every permutation when there are at most 8
/// atoms, otherwise `samples` seeded draws. mode=all enumerates all rooting
/// maps when the search space fits the budget; otherwise it scans the same
/// seeded order sample plus up to `samples` enumerated maps, so at equal
/// seeds the all-mode minimum never exceeds the orders-mode minimum.
MinRootingDim min_rooting_dim(const LcmLattice& L, RootingSearchMode mode,
                              long long budget = 1'000'000,
                              std::uint64_t seed = 0, int samples = 10'000);

/// Restricts ρ to the lcm-lattice of restrict_ideal(I, var) and checks the
/// restriction lemma: the restricted map is again a rooting map and its
/// complex equals the induced subcomplex of Γ_{I,ρ} on the surviving atoms.
bool restriction_check(const MonomialIdeal& I, const RootingMap& rho, int var);

} // namespace mct

#endif
