#ifndef MCT_JSON_IO_HPP
#define MCT_JSON_IO_HPP

#include <string>

#include "mct/betti.hpp"
#include "mct/etale.hpp"
#include "mct/generators.hpp"
#include "mct/ideal.hpp"
#include "mct/lattice.hpp"
#include "mct/rooting.hpp"

namespace mct {

/// Emitters produce deterministic JSON: sorted keys, pinned schemas, two
/// space indent, trailing newline. Maps keyed by integers are rendered as
/// sorted [key, value] pair arrays.
std::string ideal_to_json(const MonomialIdeal& I);
std::string lattice_to_json(const LcmLattice& L);
/// Hasse diagram in DOT, edges bottom-up.
std::string lattice_to_dot(const LcmLattice& L);
std::string betti_to_json(const BettiTable& T);
std::string cohomology_to_json(const CohomologyProfile& prof);
std::string hypotheses_to_json(const HypothesesReport& rep, const MonomialIdeal& I);
std::string conjecture_to_json(const ConjectureReport& rep);
/// Either search result may be null when that mode was not run; the pinned
/// keys are still emitted with null values.
std::string explorer_to_json(const LcmLattice& L, const MinRootingDim* all_mode,
                             const MinRootingDim* orders_mode);
std::string generators_to_json(const GeneratorSet& G);
std::string verification_to_json(const VerificationReport& rep);
std::string ara_to_json(const AraBounds& b);

/// Parses generator-set JSON as emitted by generators_to_json. The ambient
/// variable count may be explicit ("variables") or inferred from a term.
GeneratorSet generator_set_from_json(const std::string& text);

} // namespace mct

#endif
