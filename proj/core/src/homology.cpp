#include "mct/homology.hpp"

#include <algorithm>
#include <map>

#include "mct/errors.hpp"

namespace mct {

namespace {

/// Faces of K not in K0, per dimension starting at -1, with index maps.
struct Basis {
    // level t holds faces of dimension t - 1
    std::vector<std::vector<std::vector<int>>> faces;
    std::vector<std::map<std::vector<int>, int>> index;

    int levels() const { return static_cast<int>(faces.size()); }
};

Basis quotient_basis(const SimplicialComplex& K, const SimplicialComplex* K0) {
    Basis b;
    const int levels = K.dim() + 2; // dimensions -1..dim
    if (levels <= 0) return b;
    b.faces.resize(static_cast<std::size_t>(levels));
    b.index.resize(static_cast<std::size_t>(levels));

    auto excluded = [&](const std::vector<int>& f) {
        return K0 != nullptr && K0->has_face(f);
    };

    if (!excluded({})) {
        b.faces[0].push_back({});
        b.index[0].emplace(std::vector<int>{}, 0);
    }
    for (int k = 0; k <= K.dim(); ++k) {
        for (const auto& f : K.faces_of_dim(k)) {
            if (excluded(f)) continue;
            auto& level = b.faces[static_cast<std::size_t>(k + 1)];
            b.index[static_cast<std::size_t>(k + 1)].emplace(f, static_cast<int>(level.size()));
            level.push_back(f);
        }
    }
    // drop empty top levels so degree bookkeeping stays tight
    while (!b.faces.empty() && b.faces.back().empty()) {
        b.faces.pop_back();
        b.index.pop_back();
    }
    return b;
}

ChainComplexModP complex_from_basis(const Basis& b, int p) {
    if (!is_prime(p)) throw error("coefficient characteristic must be prime");
    ChainComplexModP C;
    C.p = p;
    C.min_degree = -1;
    const int levels = b.levels();
    C.dim_by_degree.resize(static_cast<std::size_t>(levels));
    C.boundary.resize(static_cast<std::size_t>(levels));
    for (int t = 0; t < levels; ++t)
        C.dim_by_degree[static_cast<std::size_t>(t)] = static_cast<int>(b.faces[static_cast<std::size_t>(t)].size());

    for (int t = 0; t < levels; ++t) {
        MatModP& m = C.boundary[static_cast<std::size_t>(t)];
        m.p = p;
        m.cols = C.dim_by_degree[static_cast<std::size_t>(t)];
        m.rows = (t == 0) ? 0 : C.dim_by_degree[static_cast<std::size_t>(t - 1)];
        if (t == 0) continue;
        const auto& lower = b.index[static_cast<std::size_t>(t - 1)];
        const auto& level = b.faces[static_cast<std::size_t>(t)];
        for (int j = 0; j < static_cast<int>(level.size()); ++j) {
            const auto& f = level[static_cast<std::size_t>(j)];
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<int> sub;
                sub.reserve(f.size() - 1);
                for (std::size_t k = 0; k < f.size(); ++k)
                    if (k != i) sub.push_back(f[k]);
                auto it = lower.find(sub);
                if (it == lower.end()) continue; // face lies in the subcomplex
                int sign = (i % 2 == 0) ? 1 : p - 1;
                m.entries.push_back({it->second, j, sign});
            }
        }
    }
    return C;
}

} // namespace

bool ChainComplexModP::composes_to_zero() const {
    for (int t = 1; t < degree_count(); ++t) {
        const MatModP& lo = boundary[static_cast<std::size_t>(t - 1)];
        const MatModP& hi = boundary[static_cast<std::size_t>(t)];
        if (lo.rows == 0 || hi.cols == 0) continue;
        // dense compose; chain complexes here are small
        std::vector<std::vector<long long>> a(static_cast<std::size_t>(lo.rows),
                                              std::vector<long long>(static_cast<std::size_t>(lo.cols), 0));
        for (const auto& [r, c, v] : lo.entries) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += v;
        std::vector<std::vector<long long>> bmat(static_cast<std::size_t>(hi.rows),
                                                 std::vector<long long>(static_cast<std::size_t>(hi.cols), 0));
        for (const auto& [r, c, v] : hi.entries) bmat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += v;
        for (int i = 0; i < lo.rows; ++i)
            for (int j = 0; j < hi.cols; ++j) {
                long long sum = 0;
                for (int k = 0; k < lo.cols; ++k)
                    sum += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                           bmat[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (sum % p != 0) return false;
            }
    }
    return true;
}

HomologyVector homology_dims(const ChainComplexModP& C) {
    HomologyVector h;
    const int levels = C.degree_count();
    std::vector<int> ranks(static_cast<std::size_t>(levels) + 1, 0);
    for (int t = 0; t < levels; ++t) ranks[static_cast<std::size_t>(t)] = rank_mod_p(C.boundary[static_cast<std::size_t>(t)]);
    for (int t = 0; t < levels; ++t) {
        int dim = C.dim_by_degree[static_cast<std::size_t>(t)] - ranks[static_cast<std::size_t>(t)] -
                  ranks[static_cast<std::size_t>(t) + 1];
        if (dim != 0) h.dims[C.min_degree + t] = dim;
    }
    return h;
}

ChainComplexModP chain_complex(const SimplicialComplex& K, int p) {
    if (!is_prime(p)) throw error("coefficient characteristic must be prime");
    if (K.is_void()) return ChainComplexModP{p, -1, {}, {}};
    return complex_from_basis(quotient_basis(K, nullptr), p);
}

ChainComplexModP relative_chain_complex(const SimplicialComplex& K,
                                        const SimplicialComplex& K0, int p) {
    if (!is_prime(p)) throw error("coefficient characteristic must be prime");
    if (!K.contains_complex(K0)) throw error("relative pair: K0 is not a subcomplex of K");
    if (K.is_void()) return ChainComplexModP{p, -1, {}, {}};
    if (K0.is_void()) return chain_complex(K, p);
    return complex_from_basis(quotient_basis(K, &K0), p);
}

HomologyVector reduced_homology_dims(const SimplicialComplex& K, int p) {
    return homology_dims(chain_complex(K, p));
}

HomologyVector relative_homology_dims(const SimplicialComplex& K,
                                      const SimplicialComplex& K0, int p) {
    return homology_dims(relative_chain_complex(K, K0, p));
}

} // namespace mct
