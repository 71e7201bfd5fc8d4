#include "mct/lattice.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mct/errors.hpp"

namespace mct {

LcmLattice LcmLattice::build(const MonomialIdeal& I, std::size_t element_cap) {
    if (!I.is_proper_nonzero())
        throw error("lcm lattice requires a proper nonzero ideal");

    LcmLattice L;
    L.ideal_ = I;

    // Close {1} ∪ gens under join with the generators; every subset lcm is
    // reached by adjoining one generator at a time.
    std::map<Monomial, int> seen;
    std::vector<Monomial> work;
    auto push = [&](const Monomial& m) {
        if (seen.emplace(m, 0).second) {
            work.push_back(m);
            if (seen.size() > element_cap)
                throw size_error("lcm lattice exceeds element cap (" +
                                 std::to_string(element_cap) + ")");
        }
    };
    push(Monomial::one(I.nvars()));
    for (const auto& g : I.generators()) push(g);
    for (std::size_t k = 0; k < work.size(); ++k) {
        const Monomial m = work[k];
        for (const auto& g : I.generators()) push(lcm(m, g));
    }

    L.elems_.reserve(seen.size());
    for (const auto& [m, unused] : seen) L.elems_.push_back(m);
    std::sort(L.elems_.begin(), L.elems_.end(), canonical_less);
    for (int i = 0; i < static_cast<int>(L.elems_.size()); ++i)
        L.index_[L.elems_[static_cast<std::size_t>(i)]] = i;

    // Canonical order is degree-ascending, hence a linear extension of
    // divisibility: longest-chain heights by DP over smaller indices.
    const int n = L.size();
    L.heights_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        int h = 0;
        for (int j = 0; j < i; ++j)
            if (L.leq(j, i)) h = std::max(h, L.heights_[static_cast<std::size_t>(j)] + 1);
        L.heights_[static_cast<std::size_t>(i)] = h;
    }

    for (const auto& g : I.generators()) L.atoms_.push_back(L.index_.at(g));

    Monomial t = Monomial::one(I.nvars());
    for (const auto& g : I.generators()) t = lcm(t, g);
    L.top_ = L.index_.at(t);
    return L;
}

bool LcmLattice::leq(int a, int b) const {
    return elems_[static_cast<std::size_t>(a)].divides(elems_[static_cast<std::size_t>(b)]);
}

int LcmLattice::join(int a, int b) const {
    return index_.at(lcm(elems_[static_cast<std::size_t>(a)], elems_[static_cast<std::size_t>(b)]));
}

int LcmLattice::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

std::pair<Poset, std::vector<int>> LcmLattice::open_interval(int a, int b) const {
    if (!leq(a, b)) throw error("open_interval requires a <= b");
    std::vector<int> elems;
    for (int i = 0; i < size(); ++i)
        if (i != a && i != b && leq(a, i) && leq(i, b)) elems.push_back(i);
    Poset P(static_cast<int>(elems.size()), [&](int x, int y) {
        return leq(elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(y)]);
    });
    return {P, elems};
}

IntersectionLattice IntersectionLattice::build(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw error("intersection lattice requires a proper nonzero ideal");
    if (!I.is_squarefree())
        throw error("intersection lattice requires a square-free ideal");
    const auto primes = minimal_primes(I);
    IntersectionLattice A;
    A.nvars_ = I.nvars();

    // Intersections of components have vanishing sets equal to unions of the
    // primes' variable sets; close under pairwise union.
    std::vector<std::uint32_t> prime_masks;
    for (const auto& P : primes) prime_masks.push_back(P.mask);
    std::vector<std::uint32_t> work = prime_masks;
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());
    std::vector<std::uint32_t> elems = work;
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (std::uint32_t pm : prime_masks) {
            std::uint32_t u = elems[k] | pm;
            if (std::find(elems.begin(), elems.end(), u) == elems.end()) elems.push_back(u);
        }

    std::sort(elems.begin(), elems.end(), [](std::uint32_t x, std::uint32_t y) {
        int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    A.masks_ = elems;
    for (int i = 0; i < A.size(); ++i) {
        bool maximal = true;
        for (int j = 0; j < A.size() && maximal; ++j)
            if (j != i && A.leq(i, j)) maximal = false;
        if (maximal) A.maximal_.push_back(i);
    }
    return A;
}

int IntersectionLattice::subspace_dim(int i) const {
    return nvars_ - std::popcount(masks_[static_cast<std::size_t>(i)]);
}

bool IntersectionLattice::leq(int a, int b) const {
    // Smaller subspace has the larger vanishing set.
    std::uint32_t ma = masks_[static_cast<std::size_t>(a)];
    std::uint32_t mb = masks_[static_cast<std::size_t>(b)];
    return (mb & ~ma) == 0;
}

std::pair<Poset, std::vector<int>> IntersectionLattice::strict_upper(int v) const {
    std::vector<int> elems;
    for (int i = 0; i < size(); ++i)
        if (i != v && leq(v, i)) elems.push_back(i);
    Poset P(static_cast<int>(elems.size()), [&](int x, int y) {
        return leq(elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(y)]);
    });
    return {P, elems};
}

std::vector<int> duality_mu(const IntersectionLattice& A, const LcmLattice& dual) {
    if (dual.ideal().nvars() != A.nvars())
        throw error("duality_mu: ambient variable counts differ");
    if (A.size() != dual.size() - 1)
        throw error("duality_mu: size mismatch, map cannot be bijective");

    std::vector<int> mu(static_cast<std::size_t>(A.size()), -1);
    std::vector<bool> hit(static_cast<std::size_t>(dual.size()), false);
    for (int v = 0; v < A.size(); ++v) {
        Monomial m = squarefree_from_mask(A.nvars(), A.vanishing_mask(v));
        int idx = dual.index_of(m);
        if (idx < 0 || idx == dual.bottom())
            throw error("duality_mu: image not in the dual lcm lattice minus bottom");
        if (hit[static_cast<std::size_t>(idx)]) throw error("duality_mu: map is not injective");
        hit[static_cast<std::size_t>(idx)] = true;
        mu[static_cast<std::size_t>(v)] = idx;
    }
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < A.size(); ++b)
            if (A.leq(a, b) != dual.leq(mu[static_cast<std::size_t>(b)], mu[static_cast<std::size_t>(a)]))
                throw error("duality_mu: map does not reverse order");
    return mu;
}

} // namespace mct
