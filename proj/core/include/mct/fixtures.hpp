#ifndef MCT_FIXTURES_HPP
#define MCT_FIXTURES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mct/ideal.hpp"

namespace mct {

/// Runtime knobs shared by the CLI and the tests. A fixed seed makes every
/// pipeline output byte-identical across runs.
struct Config {
    std::vector<int> primes = {2, 3, 5};
    long long rooting_cap = 1'000'000;
    long long point_cap = 100'000'000;
    std::size_t lattice_cap = std::size_t{1} << 16;
    std::uint64_t seed = 0;
    int order_samples = 10'000;
    int ara_samples = 200;
    int char0_stand_in = 32003;
};

/// Facets of the 6-vertex triangulation of the real projective plane
/// (cf. Bruns-Herzog, Cohen-Macaulay Rings, section 5.3).
std::vector<std::vector<int>> projective_plane_facets();

/// Built-in ideals: "reisner", "bipartite6", "z1", "triangle", "principal"
/// and "koszul(n)". The reisner fixture is derived from the triangulation's
/// facet list (its generators are the minimal non-faces) and self-validates
/// four pinned facts on load, throwing fixture_validation_error on any
/// mismatch: 10 cubic generators, height 3, projdim(R/I) = 4 over F_2, and
/// single extremal Betti position (2,5) of the ideal over F_5. The z1
/// fixture is derived by intersecting all 20 coordinate-triple ideals and
/// must come out to the 15 square-free quartics.
MonomialIdeal fixture(const std::string& name);

bool is_fixture_name(const std::string& name);

/// Names for help text; koszul appears as "koszul(n)".
std::vector<std::string> fixture_names();

} // namespace mct

#endif
