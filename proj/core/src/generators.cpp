#include "mct/generators.hpp"

#include <algorithm>

#include "mct/errors.hpp"
#include "mct/etale.hpp"
#include "mct/lattice.hpp"
#include "mct/modp.hpp"

namespace mct {

int Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, int c) {
    if (m.nvars() != vars_) throw error("term from a different ambient ring");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::all_unit_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second == 1; });
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

int Polynomial::evaluate_mod(const std::vector<int>& point, int q) const {
    if (static_cast<int>(point.size()) != vars_) throw error("evaluation point has wrong arity");
    long long total = 0;
    for (const auto& [m, c] : terms_) {
        long long val = ((c % q) + q) % q;
        for (int v = 0; v < vars_ && val != 0; ++v) {
            for (int e = 0; e < m.exponent(v); ++e) val = val * point[v] % q;
        }
        total = (total + val) % q;
    }
    return static_cast<int>(total);
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, int>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    std::string out;
    for (const auto& [m, c] : sorted) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += mct::to_string(m, vars);
    }
    return out;
}

std::string to_string(GenMethod m) {
    return m == GenMethod::rooting ? "rooting" : "height";
}

bool VerificationReport::all_equal() const {
    return subset_certified &&
           std::all_of(equal_over.begin(), equal_over.end(),
                       [](const auto& kv) { return kv.second; });
}

Monomial normalize_generator(const Monomial& f, int d) {
    if (f.is_one()) throw error("cannot normalize the unit monomial");
    if (d < f.degree())
        throw error("normalization target degree " + std::to_string(d) +
                    " is below the monomial degree " + std::to_string(f.degree()));
    return f.times_power(f.first_support_var(), d - f.degree());
}

GeneratorSet generators_from_rooting(const MonomialIdeal& I, const RootingMap& rho,
                                     std::optional<int> d_opt) {
    if (!I.is_proper_nonzero()) throw error("generator construction requires a proper nonzero ideal");
    const LcmLattice L = LcmLattice::build(I);
    const RootingComplex G = rooting_complex(L, rho); // validates rho

    const int maxdeg = I.max_generator_degree();
    const int d = d_opt.value_or(maxdeg);
    if (d < maxdeg)
        throw error("rooting degree parameter must be at least the max generator degree");

    const auto& gens = I.generators();
    std::vector<Monomial> bar;
    bar.reserve(gens.size());
    for (const auto& f : gens) bar.push_back(normalize_generator(f, d));

    GeneratorSet out;
    out.method = GenMethod::rooting;
    out.variables = I.nvars();
    out.d = d;
    out.claimed_bound = G.dim() + 1;
    for (int r = 0; r <= G.dim(); ++r) {
        Polynomial g(I.nvars());
        for (const auto& F : G.complex.faces_of_dim(r)) {
            Monomial prod = Monomial::one(I.nvars());
            for (int v : F) prod = prod * bar[static_cast<std::size_t>(v)];
            g.add_term(prod, 1);
        }
        if (g.homogeneous_degree() != (r + 1) * d)
            throw error("rooting generator degree drifted; construction bug");
        out.polys.push_back(std::move(g));
        out.degrees.push_back((r + 1) * d);
    }
    return out;
}

GeneratorSet generators_from_heights(const MonomialIdeal& I,
                                     std::optional<std::vector<int>> d_vec) {
    if (!I.is_proper_nonzero()) throw error("generator construction requires a proper nonzero ideal");
    const LcmLattice L = LcmLattice::build(I);
    const int h = L.height();

    std::vector<std::vector<int>> strata(static_cast<std::size_t>(h) + 1);
    for (int e = 1; e < L.size(); ++e) strata[static_cast<std::size_t>(L.height(e))].push_back(e);

    std::vector<int> degs(static_cast<std::size_t>(h) + 1, 0);
    for (int r = 1; r <= h; ++r)
        for (int e : strata[static_cast<std::size_t>(r)])
            degs[static_cast<std::size_t>(r)] = std::max(degs[static_cast<std::size_t>(r)],
                                                         L.element(e).degree());
    if (d_vec) {
        if (static_cast<int>(d_vec->size()) != h)
            throw error("height degree vector must have one entry per height 1.." +
                        std::to_string(h));
        for (int r = 1; r <= h; ++r) {
            if ((*d_vec)[static_cast<std::size_t>(r - 1)] < degs[static_cast<std::size_t>(r)])
                throw error("height degree vector too small at height " + std::to_string(r));
            degs[static_cast<std::size_t>(r)] = (*d_vec)[static_cast<std::size_t>(r - 1)];
        }
    }

    GeneratorSet out;
    out.method = GenMethod::height;
    out.variables = I.nvars();
    out.claimed_bound = h;
    for (int r = 1; r <= h; ++r) {
        Polynomial g(I.nvars());
        for (int e : strata[static_cast<std::size_t>(r)])
            g.add_term(normalize_generator(L.element(e), degs[static_cast<std::size_t>(r)]), 1);
        if (g.is_zero()) throw error("empty height stratum; construction bug");
        out.polys.push_back(std::move(g));
        out.degrees.push_back(degs[static_cast<std::size_t>(r)]);
    }
    return out;
}

VerificationReport verify_radical_equality(const MonomialIdeal& I, const GeneratorSet& G,
                                           const std::vector<int>& primes, long long point_cap) {
    if (!I.is_proper_nonzero()) throw error("verification requires a proper nonzero ideal");
    if (primes.empty()) throw error("verification needs at least one prime");
    if (G.variables != I.nvars()) throw error("generator set from a different ambient ring");

    VerificationReport rep;

    // (a) every term is killed by every point of V(I): its support must
    // contain the support of some generator
    rep.subset_certified = true;
    for (const auto& g : G.polys)
        for (const auto& [term, c] : g.terms()) {
            bool covered = false;
            for (const auto& f : I.generators())
                if ((f.support_mask() & ~term.support_mask()) == 0) {
                    covered = true;
                    break;
                }
            if (!covered) rep.subset_certified = false;
        }

    // (b) exhaustive scan of F_q^N per prime, lexicographic order
    const int n = I.nvars();
    for (int q : primes) {
        if (!is_prime(q)) throw error("verification field size must be prime");
        long long points = 1;
        for (int v = 0; v < n; ++v) {
            points *= q;
            if (points > point_cap)
                throw size_error("brute-force scan exceeds the point cap");
        }

        bool equal = true;
        std::vector<int> point(static_cast<std::size_t>(n), 0);
        for (long long step = 0; step < points; ++step) {
            bool on_variety = true;
            for (const auto& f : I.generators()) {
                bool kills = false;
                std::uint32_t s = f.support_mask();
                for (int v = 0; v < n && !kills; ++v)
                    if ((s >> v & 1u) && point[static_cast<std::size_t>(v)] == 0) kills = true;
                if (!kills) {
                    on_variety = false;
                    break;
                }
            }
            bool all_zero = true;
            for (const auto& g : G.polys)
                if (g.evaluate_mod(point, q) != 0) {
                    all_zero = false;
                    break;
                }
            if (on_variety != all_zero) {
                equal = false;
                if (!rep.counterexample) rep.counterexample = Counterexample{q, point};
                break;
            }
            for (int v = n - 1; v >= 0; --v) {
                if (++point[static_cast<std::size_t>(v)] < q) break;
                point[static_cast<std::size_t>(v)] = 0;
            }
        }
        rep.fields_checked.push_back(q);
        rep.equal_over[q] = equal;
    }
    return rep;
}

AraBounds ara_bounds_report(const MonomialIdeal& I, const std::vector<int>& chars,
                            const std::vector<int>& ells, std::uint64_t seed, int samples) {
    if (!I.is_proper_nonzero()) throw error("ara bounds require a proper nonzero ideal");
    const LcmLattice L = LcmLattice::build(I);

    AraBounds out;
    const MinRootingDim found =
        min_rooting_dim(L, RootingSearchMode::orders, 1'000'000, seed, samples);
    out.upper_rooting = 1 + found.min_dim;
    out.rooting_exhaustive = found.exhaustive;
    out.upper_height = L.height();
    for (int c : chars) out.lower_qccd[c] = qccd_complement(I, c) + 1;
    if (I.is_squarefree()) {
        for (int ell : ells)
            out.lower_etale[ell] = top_degree_projective(I, ell) - (I.nvars() - 1) + 1;
    }

    out.notes = {
        "upper_rooting: 1 + dim of the smallest rooting complex found over order-induced maps" +
            std::string(out.rooting_exhaustive ? " (exhaustive)" : " (sampled)"),
        "upper_height: polynomial count of the height-strata construction, = height of the "
        "lcm lattice (the classical statement reads 1 + height; the construction emits "
        "height-many polynomials)",
        "lower_qccd: ara >= qccd + 1 = projdim(R/I) per field characteristic",
        I.is_squarefree()
            ? std::string("lower_etale: ara >= (top projective constant-sheaf degree) - n + 1 "
                          "per sheaf characteristic")
            : std::string("lower_etale: skipped, ideal is not square-free"),
    };
    return out;
}

} // namespace mct
