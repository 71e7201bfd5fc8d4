#include "mct/json_io.hpp"

#include <json.hpp>

#include "mct/errors.hpp"

namespace mct {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json covers_of(const LcmLattice& L) {
    json covers = json::array();
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
            if (a == b || !L.leq(a, b)) continue;
            bool covered = true;
            for (int k = 0; k < L.size() && covered; ++k)
                if (k != a && k != b && L.leq(a, k) && L.leq(k, b)) covered = false;
            if (covered) covers.push_back(json::array({a, b}));
        }
    return covers;
}

template <typename Map>
json pairs_of(const Map& m) {
    json out = json::array();
    for (const auto& [k, v] : m) out.push_back(json::array({k, v}));
    return out;
}

json assignment_of(const LcmLattice& L, const RootingMap& rho) {
    const auto& vars = L.ideal().variables();
    json out = json::array();
    for (int e = 1; e < L.size(); ++e)
        out.push_back(json::array(
            {to_string(L.element(e), vars),
             to_string(L.element(rho.atom_of[static_cast<std::size_t>(e)]), vars)}));
    return out;
}

json search_result_of(const LcmLattice& L, const MinRootingDim& r) {
    return json{{"min_dim", r.min_dim},
                {"exhaustive", r.exhaustive},
                {"maps_examined", r.maps_examined},
                {"witness_origin", r.witness_origin},
                {"witness_assignment", assignment_of(L, r.witness)}};
}

} // namespace

std::string ideal_to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const auto& g : I.generators()) gens.push_back(to_string(g, I.variables()));
    return dump(json{{"variables", I.variables()},
                     {"generators", gens},
                     {"squarefree", I.is_squarefree()},
                     {"zero", I.is_zero()},
                     {"unit", I.is_unit()}});
}

std::string lattice_to_json(const LcmLattice& L) {
    const auto& vars = L.ideal().variables();
    json elements = json::array();
    json heights = json::array();
    for (int i = 0; i < L.size(); ++i) {
        elements.push_back(to_string(L.element(i), vars));
        heights.push_back(L.height(i));
    }
    return dump(json{{"elements", elements}, {"covers", covers_of(L)}, {"heights", heights}});
}

std::string lattice_to_dot(const LcmLattice& L) {
    const auto& vars = L.ideal().variables();
    std::string out = "digraph lcm_lattice {\n  rankdir=BT;\n";
    for (int i = 0; i < L.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + to_string(L.element(i), vars) +
               "\"];\n";
    for (const auto& edge : covers_of(L))
        out += "  n" + edge[0].dump() + " -> n" + edge[1].dump() + ";\n";
    out += "}\n";
    return out;
}

std::string betti_to_json(const BettiTable& T) {
    json entries = json::array();
    for (const auto& [ij, beta] : T.graded_entries())
        entries.push_back(json{{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
    json extremal = json::array();
    for (const auto& [i, j] : extremal_betti(T)) extremal.push_back(json::array({i, j}));
    return dump(json{{"char", T.characteristic()},
                     {"subject", to_string(T.subject())},
                     {"entries", entries},
                     {"extremal", extremal},
                     {"projdim", projdim(T)},
                     {"regularity", regularity(T)}});
}

std::string cohomology_to_json(const CohomologyProfile& prof) {
    return dump(json{{"char_l", prof.ell},
                     {"dims", pairs_of(prof.dims)},
                     {"top_affine", prof.top_affine},
                     {"top_projective", prof.top_projective}});
}

std::string hypotheses_to_json(const HypothesesReport& rep, const MonomialIdeal& I) {
    json pair = nullptr;
    if (rep.disjoint_pair) {
        auto names = [&](const VariableSubset& s) {
            json out = json::array();
            for (int v : s.members()) out.push_back(I.variables()[static_cast<std::size_t>(v)]);
            return out;
        };
        pair = json::array({names(rep.disjoint_pair->first), names(rep.disjoint_pair->second)});
    }
    return dump(json{{"char_l", rep.ell},
                     {"pairwise_intersections", rep.pairwise_intersections},
                     {"cohomology_vanishing", rep.cohomology_vanishing},
                     {"local_ara", rep.local_ara},
                     {"top_projective", rep.top_projective},
                     {"disjoint_pair", pair}});
}

std::string conjecture_to_json(const ConjectureReport& rep) {
    json bounds = json::array();
    for (const auto& b : rep.bounds) {
        json jb{{"char_l", b.ell},
                {"top_projective_ideal", b.top_projective_ideal},
                {"lower_bound", b.lower_bound},
                {"lhs_exceeds_lower_bound", b.lhs_exceeds_lower_bound}};
        jb["top_projective_witness"] =
            b.top_projective_witness ? json(*b.top_projective_witness) : json(nullptr);
        bounds.push_back(jb);
    }
    return dump(json{{"char_k", rep.char_k},
                     {"effective_char", rep.effective_char},
                     {"char_heuristic", rep.char_heuristic},
                     {"dim_u", rep.dim_u},
                     {"cohdim", rep.cohdim},
                     {"qccd", rep.qccd},
                     {"lhs", rep.lhs},
                     {"bounds", bounds},
                     {"annotations", rep.annotations}});
}

std::string explorer_to_json(const LcmLattice& L, const MinRootingDim* all_mode,
                             const MinRootingDim* orders_mode) {
    json out{{"min_all", nullptr},
             {"min_orders", nullptr},
             {"exhaustive_all", nullptr},
             {"exhaustive_orders", nullptr},
             {"witness_maps", json{{"all", nullptr}, {"orders", nullptr}}}};
    if (all_mode != nullptr) {
        out["min_all"] = all_mode->min_dim;
        out["exhaustive_all"] = all_mode->exhaustive;
        out["witness_maps"]["all"] = search_result_of(L, *all_mode);
    }
    if (orders_mode != nullptr) {
        out["min_orders"] = orders_mode->min_dim;
        out["exhaustive_orders"] = orders_mode->exhaustive;
        out["witness_maps"]["orders"] = search_result_of(L, *orders_mode);
    }
    return dump(out);
}

std::string generators_to_json(const GeneratorSet& G) {
    json polys = json::array();
    for (const auto& p : G.polys) {
        json terms = json::array();
        for (const auto& [m, c] : p.terms()) terms.push_back(json::array({m.exponents(), c}));
        polys.push_back(terms);
    }
    return dump(json{{"tag", to_string(G.method)},
                     {"d", G.d},
                     {"polys", polys},
                     {"variables", G.variables},
                     {"degrees", G.degrees},
                     {"claimed_bound", G.claimed_bound}});
}

std::string verification_to_json(const VerificationReport& rep) {
    json cx = nullptr;
    if (rep.counterexample)
        cx = json{{"q", rep.counterexample->q}, {"point", rep.counterexample->point}};
    return dump(json{{"subset_certified", rep.subset_certified},
                     {"fields_checked", rep.fields_checked},
                     {"equal_over", pairs_of(rep.equal_over)},
                     {"counterexample", cx},
                     {"all_equal", rep.all_equal()}});
}

std::string ara_to_json(const AraBounds& b) {
    return dump(json{{"upper_rooting", b.upper_rooting},
                     {"rooting_exhaustive", b.rooting_exhaustive},
                     {"upper_height", b.upper_height},
                     {"lower_qccd", pairs_of(b.lower_qccd)},
                     {"lower_etale", pairs_of(b.lower_etale)},
                     {"notes", b.notes}});
}

GeneratorSet generator_set_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw error(std::string("generator-set JSON: ") + e.what());
    }
    try {
        GeneratorSet G;
        const std::string tag = j.at("tag").get<std::string>();
        if (tag == "rooting")
            G.method = GenMethod::rooting;
        else if (tag == "height")
            G.method = GenMethod::height;
        else
            throw error("generator-set JSON: unknown tag \"" + tag + "\"");
        G.d = j.value("d", 0);

        int vars = j.value("variables", -1);
        if (vars < 0) {
            for (const auto& poly : j.at("polys"))
                for (const auto& term : poly) {
                    vars = static_cast<int>(term.at(0).size());
                    break;
                }
            if (vars < 0)
                throw error("generator-set JSON: no variable count and no term to infer it");
        }
        G.variables = vars;

        for (const auto& poly : j.at("polys")) {
            Polynomial p(vars);
            for (const auto& term : poly) {
                const std::vector<int> exps = term.at(0).get<std::vector<int>>();
                if (static_cast<int>(exps.size()) != vars)
                    throw error("generator-set JSON: exponent vector arity mismatch");
                p.add_term(Monomial(exps), term.at(1).get<int>());
            }
            G.polys.push_back(std::move(p));
        }
        G.degrees = j.value("degrees", std::vector<int>{});
        G.claimed_bound = j.value("claimed_bound", static_cast<int>(G.polys.size()));
        return G;
    } catch (const json::exception& e) {
        throw error(std::string("generator-set JSON: ") + e.what());
    }
}

} // namespace mct
