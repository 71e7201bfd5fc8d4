#include "mct/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include "mct/errors.hpp"
#include "mct/homology.hpp"
#include "mct/lattice.hpp"
#include "mct/simplicial.hpp"

namespace mct {

namespace {

void require_prime(int ell) {
    if (!is_prime(ell)) throw error("characteristic must be prime, got " + std::to_string(ell));
}

void require_proper(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero()) throw error("Betti numbers require a proper nonzero ideal");
}

/// β_{i,m}(I) = β_{i+1,m}(R/I); the quotient's β_{0,1} entry has no ideal
/// counterpart.
std::map<std::pair<int, Monomial>, int>
quotient_to_ideal(const std::map<std::pair<int, Monomial>, int>& q) {
    std::map<std::pair<int, Monomial>, int> out;
    for (const auto& [key, val] : q)
        if (key.first >= 1) out[{key.first - 1, key.second}] = val;
    return out;
}

} // namespace

std::string to_string(Subject s) {
    return s == Subject::ideal ? "ideal" : "quotient";
}

BettiTable::BettiTable(int ell, Subject subject, int variables,
                       std::map<std::pair<int, Monomial>, int> multigraded)
    : ell_(ell), subject_(subject), vars_(variables), multi_(std::move(multigraded)) {
    require_prime(ell_);
    for (const auto& [key, val] : multi_) {
        if (val <= 0) throw error("Betti table stores only positive entries");
        if (key.first < 0) throw error("negative homological degree in Betti table");
        graded_[{key.first, key.second.degree()}] += val;
    }
}

int BettiTable::multigraded(int i, const Monomial& m) const {
    auto it = multi_.find({i, m});
    return it == multi_.end() ? 0 : it->second;
}

int BettiTable::graded(int i, int j) const {
    auto it = graded_.find({i, j});
    return it == graded_.end() ? 0 : it->second;
}

BettiTable betti_gpw(const MonomialIdeal& I, int ell, Subject subject) {
    require_prime(ell);
    require_proper(I);
    const LcmLattice L = LcmLattice::build(I);

    std::map<std::pair<int, Monomial>, int> multi;
    multi[{0, Monomial::one(I.nvars())}] = 1;
    for (int v = 1; v < L.size(); ++v) {
        auto [P, elems] = L.open_interval(L.bottom(), v);
        const HomologyVector h = reduced_homology_dims(order_complex(P), ell);
        for (const auto& [k, d] : h.dims) multi[{k + 2, L.element(v)}] = d;
    }
    if (subject == Subject::ideal)
        return BettiTable(ell, subject, I.nvars(), quotient_to_ideal(multi));
    return BettiTable(ell, subject, I.nvars(), std::move(multi));
}

BettiTable betti_taylor_oracle(const MonomialIdeal& I, int ell, Subject subject) {
    require_prime(ell);
    require_proper(I);
    const auto& gens = I.generators();
    const int r = static_cast<int>(gens.size());
    if (r > 20) throw size_error("Taylor oracle supports at most 20 generators, got " +
                                 std::to_string(r));

    // lcm of each generator subset, by stripping the lowest bit
    const std::uint32_t total = std::uint32_t{1} << r;
    std::vector<Monomial> sublcm(total, Monomial::one(I.nvars()));
    for (std::uint32_t mask = 1; mask < total; ++mask)
        sublcm[mask] = lcm(sublcm[mask & (mask - 1)],
                           gens[static_cast<std::size_t>(std::countr_zero(mask))]);

    std::map<Monomial, std::vector<std::uint32_t>> strands;
    for (std::uint32_t mask = 0; mask < total; ++mask) strands[sublcm[mask]].push_back(mask);

    std::map<std::pair<int, Monomial>, int> multi;
    for (const auto& [m, masks] : strands) {
        int maxdeg = 0;
        for (std::uint32_t f : masks) maxdeg = std::max(maxdeg, std::popcount(f));

        ChainComplexModP C;
        C.p = ell;
        C.min_degree = 0;
        C.dim_by_degree.assign(static_cast<std::size_t>(maxdeg) + 1, 0);
        std::map<std::uint32_t, int> pos;
        for (std::uint32_t f : masks)
            pos[f] = C.dim_by_degree[static_cast<std::size_t>(std::popcount(f))]++;

        C.boundary.resize(static_cast<std::size_t>(maxdeg) + 1);
        for (int t = 0; t <= maxdeg; ++t) {
            MatModP& mat = C.boundary[static_cast<std::size_t>(t)];
            mat.p = ell;
            mat.cols = C.dim_by_degree[static_cast<std::size_t>(t)];
            mat.rows = t == 0 ? 0 : C.dim_by_degree[static_cast<std::size_t>(t - 1)];
        }
        // faces keep only the subsets whose lcm stays at m
        for (std::uint32_t f : masks) {
            const int t = std::popcount(f);
            if (t == 0) continue;
            int bit_index = 0;
            for (std::uint32_t rest = f; rest != 0; rest &= rest - 1, ++bit_index) {
                const std::uint32_t sub = f ^ (rest & ~(rest - 1));
                auto it = pos.find(sub);
                if (it != pos.end()) {
                    const int sign = (bit_index % 2 == 0) ? 1 : ell - 1;
                    C.boundary[static_cast<std::size_t>(t)].entries.push_back(
                        {it->second, pos.at(f), sign});
                }
            }
        }
        const HomologyVector h = homology_dims(C);
        for (const auto& [deg, d] : h.dims) multi[{deg, m}] = d;
    }

    if (subject == Subject::ideal)
        return BettiTable(ell, subject, I.nvars(), quotient_to_ideal(multi));
    return BettiTable(ell, Subject::quotient, I.nvars(), std::move(multi));
}

ExtremalSet extremal_betti(const BettiTable& T) {
    if (T.empty()) throw error("extremal_betti on an empty Betti table");
    const auto& g = T.graded_entries();
    ExtremalSet out;
    for (const auto& [ij, unused] : g) {
        const auto [i, j] = ij;
        bool extremal = true;
        for (const auto& [kl, unused2] : g) {
            const auto [k, l] = kl;
            if (kl != ij && k >= i && l - k >= j - i) {
                extremal = false;
                break;
            }
        }
        if (extremal) out.push_back(ij);
    }
    return out;
}

int projdim(const BettiTable& T) {
    if (T.empty()) throw error("projdim on an empty Betti table");
    int best = 0;
    for (const auto& [ij, unused] : T.graded_entries()) best = std::max(best, ij.first);
    return best;
}

int regularity(const BettiTable& T) {
    if (T.empty()) throw error("regularity on an empty Betti table");
    int best = 0;
    bool first = true;
    for (const auto& [ij, unused] : T.graded_entries()) {
        const int v = ij.second - ij.first;
        best = first ? v : std::max(best, v);
        first = false;
    }
    return best;
}

int max_i_plus_j(const BettiTable& T) {
    if (T.empty()) throw error("max_i_plus_j on an empty Betti table");
    int best = 0;
    bool first = true;
    for (const auto& [ij, unused] : T.graded_entries()) {
        const int v = ij.first + ij.second;
        best = first ? v : std::max(best, v);
        first = false;
    }
    return best;
}

int max_2j_minus_i(const BettiTable& T) {
    if (T.empty()) throw error("max_2j_minus_i on an empty Betti table");
    int best = 0;
    bool first = true;
    for (const auto& [ij, unused] : T.graded_entries()) {
        const int v = 2 * ij.second - ij.first;
        best = first ? v : std::max(best, v);
        first = false;
    }
    return best;
}

std::string betti_diagram(const BettiTable& T) {
    if (T.empty()) return "(empty)\n";
    const auto& g = T.graded_entries();
    int maxi = 0, minrow = 0, maxrow = 0;
    bool first = true;
    for (const auto& [ij, unused] : g) {
        const int row = ij.second - ij.first;
        maxi = std::max(maxi, ij.first);
        minrow = first ? row : std::min(minrow, row);
        maxrow = first ? row : std::max(maxrow, row);
        first = false;
    }

    std::vector<int> total(static_cast<std::size_t>(maxi) + 1, 0);
    for (const auto& [ij, v] : g) total[static_cast<std::size_t>(ij.first)] += v;

    auto cell = [&](int i, int row) -> std::string {
        const int v = T.graded(i, row + i);
        return v == 0 ? "." : std::to_string(v);
    };

    std::vector<std::size_t> width(static_cast<std::size_t>(maxi) + 1);
    for (int i = 0; i <= maxi; ++i) {
        std::size_t w = std::to_string(i).size();
        w = std::max(w, std::to_string(total[static_cast<std::size_t>(i)]).size());
        for (int row = minrow; row <= maxrow; ++row) w = std::max(w, cell(i, row).size());
        width[static_cast<std::size_t>(i)] = w;
    }
    std::size_t label = std::string("total").size();
    for (int row = minrow; row <= maxrow; ++row)
        label = std::max(label, std::to_string(row).size());

    std::ostringstream out;
    auto emit = [&](const std::string& name, auto value_of) {
        out << std::setw(static_cast<int>(label)) << name << (name.empty() ? "  " : ": ");
        for (int i = 0; i <= maxi; ++i) {
            if (i > 0) out << ' ';
            out << std::setw(static_cast<int>(width[static_cast<std::size_t>(i)])) << value_of(i);
        }
        out << '\n';
    };
    emit("", [](int i) { return std::to_string(i); });
    emit("total", [&](int i) { return std::to_string(total[static_cast<std::size_t>(i)]); });
    for (int row = minrow; row <= maxrow; ++row)
        emit(std::to_string(row), [&](int i) { return cell(i, row); });
    return out.str();
}

} // namespace mct
