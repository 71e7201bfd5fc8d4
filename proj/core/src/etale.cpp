#include "mct/etale.hpp"

#include <algorithm>
#include <bit>

#include "mct/betti.hpp"
#include "mct/errors.hpp"
#include "mct/homology.hpp"
#include "mct/lattice.hpp"
#include "mct/simplicial.hpp"

namespace mct {

namespace {

void require_squarefree_proper(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw error("arrangement requires a proper nonzero ideal");
    if (!I.is_squarefree()) throw error("arrangement requires a square-free ideal");
}

void require_prime_char(int ell) {
    if (!is_prime(ell)) throw error("sheaf characteristic must be prime, got " + std::to_string(ell));
}

int effective_characteristic(int char_k, int char0_stand_in) {
    if (char_k == 0) {
        if (!is_prime(char0_stand_in)) throw error("char-zero stand-in must be prime");
        return char0_stand_in;
    }
    if (!is_prime(char_k)) throw error("field characteristic must be prime or zero");
    return char_k;
}

} // namespace

int top_degree_affine(const MonomialIdeal& I, int ell) {
    require_squarefree_proper(I);
    require_prime_char(ell);
    return max_i_plus_j(betti_gpw(I, ell, Subject::ideal));
}

int top_degree_projective(const MonomialIdeal& I, int ell) {
    return top_degree_affine(I, ell) - 1;
}

CohomologyProfile yan_cohomology(const MonomialIdeal& I, int ell) {
    require_squarefree_proper(I);
    require_prime_char(ell);
    const IntersectionLattice A = IntersectionLattice::build(I);

    CohomologyProfile prof;
    prof.ell = ell;
    prof.dims[0] = 1;
    for (int v = 0; v < A.size(); ++v) {
        auto [P, elems] = A.strict_upper(v);
        const HomologyVector h = reduced_homology_dims(order_complex(P), ell);
        const int s = std::popcount(A.vanishing_mask(v));
        for (const auto& [k, d] : h.dims) prof.dims[2 * s - k - 2] += d;
    }
    prof.top_affine = prof.dims.rbegin()->first;
    prof.top_projective = prof.top_affine - 1;
    if (prof.top_affine > 2 * I.nvars())
        throw error("computed top degree exceeds the general bound 2N");
    return prof;
}

int cohdim_monomial(const MonomialIdeal& I, int char_k, int char0_stand_in) {
    if (!I.is_proper_nonzero()) throw error("cohomological dimension requires a proper nonzero ideal");
    const int p = effective_characteristic(char_k, char0_stand_in);
    return projdim(betti_gpw(I, p, Subject::quotient));
}

int qccd_complement(const MonomialIdeal& I, int char_k, int char0_stand_in) {
    return cohdim_monomial(I, char_k, char0_stand_in) - 1;
}

HypothesesReport check_complement_hypotheses(const MonomialIdeal& I, int ell) {
    require_squarefree_proper(I);
    require_prime_char(ell);

    HypothesesReport rep;
    rep.ell = ell;
    rep.pairwise_intersections = true;
    const auto primes = minimal_primes(I);
    const std::uint32_t all = I.nvars() >= 32
                                  ? ~std::uint32_t{0}
                                  : (std::uint32_t{1} << I.nvars()) - 1;
    for (std::size_t a = 0; a < primes.size() && rep.pairwise_intersections; ++a)
        for (std::size_t b = a + 1; b < primes.size(); ++b)
            if ((primes[a].mask | primes[b].mask) == all) {
                rep.pairwise_intersections = false;
                rep.disjoint_pair = {primes[a], primes[b]};
                break;
            }

    const int n = I.nvars() - 1;
    rep.top_projective = top_degree_projective(I, ell);
    rep.cohomology_vanishing = rep.top_projective <= 2 * n - 3;
    return rep;
}

ConjectureReport conjecture_probe(const MonomialIdeal& I, int char_k,
                                  const std::vector<int>& ells,
                                  const std::optional<MonomialIdeal>& witness,
                                  int char0_stand_in) {
    require_squarefree_proper(I);
    if (ells.empty()) throw error("conjecture probe needs at least one sheaf characteristic");
    if (witness) {
        require_squarefree_proper(*witness);
        if (witness->variables() != I.variables())
            throw error("witness ideal lives in a different ambient ring");
        for (const auto& g : witness->generators())
            if (!I.contains(g))
                throw error("invalid witness: generator " + to_string(g, witness->variables()) +
                            " is not in the ideal, so its locus does not contain Z");
    }

    ConjectureReport rep;
    rep.char_k = char_k;
    rep.effective_char = effective_characteristic(char_k, char0_stand_in);
    rep.char_heuristic = char_k == 0;
    rep.dim_u = I.nvars() - 1;
    rep.cohdim = cohdim_monomial(I, char_k, char0_stand_in);
    rep.qccd = rep.cohdim - 1;
    rep.lhs = rep.dim_u + rep.qccd;

    for (int ell : ells) {
        ProbeBound b;
        b.ell = ell;
        b.top_projective_ideal = top_degree_projective(I, ell);
        b.lower_bound = b.top_projective_ideal;
        if (witness) {
            b.top_projective_witness = top_degree_projective(*witness, ell);
            b.lower_bound = std::max(b.lower_bound, *b.top_projective_witness);
        }
        b.lhs_exceeds_lower_bound = rep.lhs > b.lower_bound;
        rep.bounds.push_back(b);
    }

    rep.annotations = {
        "probed inequality: etcd(U) >= dim U + qccd(U) for U = P^n minus a union of "
        "coordinate subspaces (conjectured by G. Lyubeznik, 2002)",
        "per-characteristic lower bounds are top nonvanishing constant-sheaf degrees, "
        "computed from graded Betti numbers (Z. Yan 2000; Gasharov-Peeva-Welker 1999)",
        "a witness locus containing Z passes its lower bound to U via the open "
        "immersion of its complement into U",
        "matching upper bounds for etcd are theory-level (set-theoretic complete "
        "intersection criteria, cf. G. Lyubeznik 1984) and are not computed here",
    };
    return rep;
}

} // namespace mct
