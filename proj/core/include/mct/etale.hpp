#ifndef MCT_ETALE_HPP
#define MCT_ETALE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mct/ideal.hpp"

namespace mct {

/// Constant-sheaf étale cohomology of the affine complement A^N ∖ Z with
/// Z/ell coefficients, Z the coordinate-subspace arrangement of a
/// square-free ideal. Zero dimensions are omitted from dims.
struct CohomologyProfile {
    int ell = 2;
    std::map<int, int> dims;
    int top_affine = 0;
    int top_projective = -1;
};

/// Computable hypotheses of the projective-complement vanishing criterion
/// for unions of coordinate subspaces in P^n (n = variables - 1).
struct HypothesesReport {
    int ell = 2;
    /// Every pair of components meets in P^n, i.e. no two minimal primes
    /// cover all variables between them.
    bool pairwise_intersections = false;
    /// H^r vanishes for r ≥ 2n - 2, i.e. top projective degree ≤ 2n - 3.
    bool cohomology_vanishing = false;
    /// Stalkwise arithmetic-rank hypothesis; outside computation.
    std::string local_ara = "not computed";
    int top_projective = -1;
    /// Witness when pairwise_intersections fails: two minimal primes whose
    /// variables cover everything, so the subspaces are disjoint in P^n.
    std::optional<std::pair<VariableSubset, VariableSubset>> disjoint_pair;
};

/// One characteristic's constant-sheaf lower bound for the étale
/// cohomological dimension of the projective complement.
struct ProbeBound {
    int ell = 2;
    int top_projective_ideal = -1;
    std::optional<int> top_projective_witness;
    int lower_bound = -1;
    /// True when dim U + qccd(U) exceeds this constant-sheaf lower bound;
    /// deciding an actual violation needs a theory-level upper bound.
    bool lhs_exceeds_lower_bound = false;
};

/// Arithmetic of the conjectured inequality etcd(U) ≥ dim U + qccd(U) for
/// U = P^n ∖ Z, with per-ell constant-sheaf lower bounds on etcd.
struct ConjectureReport {
    int char_k = 0;
    int effective_char = 2;
    bool char_heuristic = false;
    int dim_u = 0;
    int cohdim = 0;
    int qccd = 0;
    int lhs = 0;
    std::vector<ProbeBound> bounds;
    std::vector<std::string> annotations;
};

/// max{i + j : β_{i,j}(I) ≠ 0 over F_ell} = top nonvanishing degree of
/// H^*((A^N ∖ Z)_ét, Z/ell).
int top_degree_affine(const MonomialIdeal& I, int ell);

/// Affine top degree minus one: top degree for the projective complement.
int top_degree_projective(const MonomialIdeal& I, int ell);

/// Full affine dimension vector over the intersection lattice: element v
/// with vanishing set S_v contributes its strict-upper order complex's
/// reduced homology dim H̃_k at degree r = 2|S_v| - k - 2, and the ambient
/// space contributes 1 at r = 0.
CohomologyProfile yan_cohomology(const MonomialIdeal& I, int ell);

/// Cohomological dimension cd(I, R) = projdim(R/I) over F_char_k.
/// char_k = 0 is heuristic: computed at a large stand-in prime.
int cohdim_monomial(const MonomialIdeal& I, int char_k, int char0_stand_in = 32003);

/// qccd of the complement = cd(I, R) - 1.
int qccd_complement(const MonomialIdeal& I, int char_k, int char0_stand_in = 32003);

/// Hypotheses (2) pairwise intersections and (3) high-degree cohomology
/// vanishing; hypothesis (1) on stalks is reported as not computed.
HypothesesReport check_complement_hypotheses(const MonomialIdeal& I, int ell);

/// Compare dim U + qccd(U) against per-ell constant-sheaf lower bounds for
/// etcd(U), optionally strengthened through a witness ideal whose vanishing
/// locus contains Z (so its complement's bound transfers).
ConjectureReport conjecture_probe(const MonomialIdeal& I, int char_k,
                                  const std::vector<int>& ells,
                                  const std::optional<MonomialIdeal>& witness = std::nullopt,
                                  int char0_stand_in = 32003);

} // namespace mct

#endif
