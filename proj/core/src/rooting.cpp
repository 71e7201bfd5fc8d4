#include "mct/rooting.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mct/errors.hpp"

namespace mct {

namespace {

std::vector<int> atom_divisors(const LcmLattice& L, int e) {
    std::vector<int> out;
    for (int a : L.atoms())
        if (L.leq(a, e)) out.push_back(a);
    return out;
}

/// Non-bottom elements sorted by (height, index); divisors precede.
std::vector<int> height_order(const LcmLattice& L) {
    std::vector<int> order;
    for (int i = 1; i < L.size(); ++i) order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return L.height(a) < L.height(b); });
    return order;
}

} // namespace

RootingMap rooting_from_order(const LcmLattice& L, const std::vector<int>& order) {
    std::vector<int> sorted = order, atoms = L.atoms();
    std::sort(sorted.begin(), sorted.end());
    std::sort(atoms.begin(), atoms.end());
    if (sorted != atoms) throw error("rooting order must be a permutation of the atoms");

    RootingMap rho;
    rho.atom_of.assign(static_cast<std::size_t>(L.size()), -1);
    for (int e = 1; e < L.size(); ++e)
        for (int a : order)
            if (L.leq(a, e)) {
                rho.atom_of[static_cast<std::size_t>(e)] = a;
                break;
            }
    return rho;
}

bool is_rooting_map(const LcmLattice& L, const RootingMap& rho) {
    if (static_cast<int>(rho.atom_of.size()) != L.size())
        throw error("rooting assignment must cover every lattice element");
    std::vector<bool> is_atom(static_cast<std::size_t>(L.size()), false);
    for (int a : L.atoms()) is_atom[static_cast<std::size_t>(a)] = true;

    for (int e = 1; e < L.size(); ++e) {
        const int a = rho.atom_of[static_cast<std::size_t>(e)];
        if (a < 0 || a >= L.size() || !is_atom[static_cast<std::size_t>(a)]) return false;
        if (!L.leq(a, e)) return false;
        for (int m = 1; m < L.size(); ++m)
            if (L.leq(a, m) && L.leq(m, e) && rho.atom_of[static_cast<std::size_t>(m)] != a)
                return false;
    }
    return true;
}

long long rooting_search_space(const LcmLattice& L, long long cap) {
    long long prod = 1;
    for (int e = 1; e < L.size(); ++e) {
        prod *= static_cast<long long>(atom_divisors(L, e).size());
        if (prod > cap) return cap + 1;
    }
    return prod;
}

long long enumerate_rooting_maps(const LcmLattice& L,
                                 const std::function<bool(const RootingMap&)>& visit,
                                 long long cap) {
    if (rooting_search_space(L, cap) > cap)
        throw size_error("rooting search space exceeds cap (" + std::to_string(cap) + ")");

    const std::vector<int> order = height_order(L);
    std::vector<int> assign(static_cast<std::size_t>(L.size()), -1);
    long long visited = 0;
    bool keep_going = true;

    // Choosing a for e is consistent iff every already-assigned element of
    // [a, e) already maps to a; larger elements are checked at their turn.
    std::function<void(std::size_t)> rec = [&](std::size_t step) {
        if (!keep_going) return;
        if (step == order.size()) {
            RootingMap rho;
            rho.atom_of = assign;
            ++visited;
            if (!visit(rho)) keep_going = false;
            return;
        }
        const int e = order[step];
        for (int a : atom_divisors(L, e)) {
            bool ok = true;
            for (std::size_t earlier = 0; earlier < step && ok; ++earlier) {
                const int m = order[earlier];
                if (L.leq(a, m) && L.leq(m, e) && assign[static_cast<std::size_t>(m)] != a)
                    ok = false;
            }
            if (!ok) continue;
            assign[static_cast<std::size_t>(e)] = a;
            rec(step + 1);
            assign[static_cast<std::size_t>(e)] = -1;
            if (!keep_going) return;
        }
    };
    rec(0);
    return visited;
}

RootingComplex rooting_complex(const LcmLattice& L, const RootingMap& rho) {
    if (!is_rooting_map(L, rho)) throw error("rooting_complex requires a valid rooting map");
    const std::vector<int>& atoms = L.atoms();
    const int n = static_cast<int>(atoms.size());
    if (n > 25) throw size_error("rooting complex supports at most 25 atoms");

    std::map<int, int> pos_of_atom;
    for (int i = 0; i < n; ++i) pos_of_atom[atoms[static_cast<std::size_t>(i)]] = i;

    // level k holds (atom mask, join index); a face extends only by atoms
    // past its highest bit, so each subset is tried once
    struct Face {
        std::uint32_t mask;
        int lambda;
    };
    std::vector<std::vector<int>> all_faces;
    std::vector<Face> level;
    std::set<std::uint32_t> level_masks;
    for (int i = 0; i < n; ++i) {
        level.push_back({std::uint32_t{1} << i, atoms[static_cast<std::size_t>(i)]});
        level_masks.insert(std::uint32_t{1} << i);
        all_faces.push_back({i});
    }

    while (!level.empty()) {
        std::vector<Face> next;
        std::set<std::uint32_t> next_masks;
        for (const Face& f : level) {
            for (int a = std::bit_width(f.mask); a < n; ++a) {
                const std::uint32_t cand = f.mask | (std::uint32_t{1} << a);
                bool closed = true;
                for (std::uint32_t rest = cand; rest != 0 && closed; rest &= rest - 1)
                    if (!level_masks.count(cand ^ (rest & ~(rest - 1)))) closed = false;
                if (!closed) continue;
                const int lam = L.join(f.lambda, atoms[static_cast<std::size_t>(a)]);
                const int root = rho.atom_of[static_cast<std::size_t>(lam)];
                if (!(cand >> pos_of_atom.at(root) & 1u)) continue;
                next.push_back({cand, lam});
                next_masks.insert(cand);
                std::vector<int> verts;
                for (int i = 0; i < n; ++i)
                    if (cand >> i & 1u) verts.push_back(i);
                all_faces.push_back(std::move(verts));
            }
        }
        level = std::move(next);
        level_masks = std::move(next_masks);
    }

    RootingComplex G;
    G.complex = SimplicialComplex::from_closed_faces(n, all_faces);
    G.apex = pos_of_atom.at(rho.atom_of[static_cast<std::size_t>(L.top())]);
    if (!G.complex.is_cone_with_apex(G.apex))
        throw error("rooting complex failed the cone property; construction bug");
    return G;
}

namespace {

/// Deterministic Fisher-Yates; std::shuffle is implementation-defined.
void shuffle_atoms(std::vector<int>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
}

struct SearchState {
    MinRootingDim result;
    std::map<std::vector<int>, int> dim_memo;

    void offer(const LcmLattice& L, const RootingMap& rho, const std::string& origin) {
        auto it = dim_memo.find(rho.atom_of);
        int d;
        if (it != dim_memo.end()) {
            d = it->second;
        } else {
            d = rooting_complex(L, rho).dim();
            dim_memo.emplace(rho.atom_of, d);
            ++result.maps_examined;
        }
        if (result.min_dim < 0 || d < result.min_dim) {
            result.min_dim = d;
            result.witness = rho;
            result.witness_origin = origin;
        }
    }
};

void search_orders(const LcmLattice& L, SearchState& st, std::uint64_t seed, int samples,
                   bool& exhaustive) {
    std::vector<int> order = L.atoms();
    if (order.size() <= 8) {
        std::sort(order.begin(), order.end());
        do
            st.offer(L, rooting_from_order(L, order), "order");
        while (std::next_permutation(order.begin(), order.end()));
        exhaustive = true;
        return;
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        shuffle_atoms(order, rng);
        st.offer(L, rooting_from_order(L, order), "order");
    }
    exhaustive = false;
}

} // namespace

MinRootingDim min_rooting_dim(const LcmLattice& L, RootingSearchMode mode, long long budget,
                              std::uint64_t seed, int samples) {
    SearchState st;
    if (mode == RootingSearchMode::orders) {
        search_orders(L, st, seed, samples, st.result.exhaustive);
        return st.result;
    }

    if (rooting_search_space(L, budget) <= budget) {
        enumerate_rooting_maps(
            L,
            [&](const RootingMap& rho) {
                st.offer(L, rho, "enumeration");
                return true;
            },
            budget);
        st.result.exhaustive = true;
        return st.result;
    }

    // budget exceeded: partial scan seeded with the order sample, so the
    // all-mode minimum never exceeds the orders-mode one at equal seeds,
    // plus an equal-effort slice of the enumeration
    bool orders_exhaustive = false;
    search_orders(L, st, seed, samples, orders_exhaustive);
    long long enumerated = 0;
    enumerate_rooting_maps(
        L,
        [&](const RootingMap& rho) {
            st.offer(L, rho, "enumeration");
            return ++enumerated < samples;
        },
        std::numeric_limits<long long>::max());
    st.result.exhaustive = false;
    return st.result;
}

bool restriction_check(const MonomialIdeal& I, const RootingMap& rho, int var) {
    const LcmLattice L = LcmLattice::build(I);
    if (!is_rooting_map(L, rho)) throw error("restriction_check requires a valid rooting map");

    const MonomialIdeal J = restrict_ideal(I, var);
    if (J.is_zero()) return true;
    const LcmLattice LJ = LcmLattice::build(J);

    RootingMap restricted;
    restricted.atom_of.assign(static_cast<std::size_t>(LJ.size()), -1);
    for (int e = 1; e < LJ.size(); ++e) {
        const int in_L = L.index_of(LJ.element(e));
        if (in_L < 0) throw error("restricted lattice element missing from the original lattice");
        const int root = rho.atom_of[static_cast<std::size_t>(in_L)];
        const int root_in_LJ = LJ.index_of(L.element(root));
        if (root_in_LJ < 0) return false;
        restricted.atom_of[static_cast<std::size_t>(e)] = root_in_LJ;
    }
    if (!is_rooting_map(LJ, restricted)) return false;

    // surviving atoms keep their relative order, so positions line up
    std::vector<int> keep;
    const auto& gens = I.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].exponent(var) == 0) keep.push_back(static_cast<int>(i));

    const RootingComplex whole = rooting_complex(L, rho);
    const RootingComplex small = rooting_complex(LJ, restricted);
    return whole.complex.induced(keep) == small.complex;
}

} // namespace mct
