// mct: exact combinatorial invariants of monomial ideals.
//
// Every subcommand takes an ideal reference: a built-in fixture name
// (reisner, bipartite6, z1, triangle, principal, koszul(n)) or a path to a
// file in the input grammar, e.g. "x0*x1^2, x2^3". Output is JSON by
// default and is byte-identical across reruns at a fixed seed.
//
// Exit codes: 0 success, 2 input error, 3 fixture self-validation failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mct/betti.hpp"
#include "mct/errors.hpp"
#include "mct/etale.hpp"
#include "mct/fixtures.hpp"
#include "mct/generators.hpp"
#include "mct/ideal.hpp"
#include "mct/json_io.hpp"
#include "mct/lattice.hpp"
#include "mct/monomial.hpp"
#include "mct/rooting.hpp"

namespace {

mct::MonomialIdeal resolve_ideal(const std::string& ref) {
    if (mct::is_fixture_name(ref)) return mct::fixture(ref);
    std::ifstream in(ref, std::ios::binary);
    if (!in)
        throw mct::error("'" + ref + "' is neither a fixture name nor a readable file");
    std::ostringstream text;
    text << in.rdbuf();
    return mct::MonomialIdeal::parse(text.str());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mct::error("cannot read file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw mct::error("cannot open output file '" + out_path + "'");
    out << payload;
    if (!out) throw mct::error("failed writing output file '" + out_path + "'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string table_ideal(const mct::MonomialIdeal& I) {
    std::ostringstream s;
    s << "variables:";
    for (const auto& v : I.variables()) s << ' ' << v;
    s << '\n';
    s << "generators: " << I.to_input_string() << '\n';
    s << "squarefree: " << yes_no(I.is_squarefree()) << '\n';
    return s.str();
}

std::string table_lattice(const mct::LcmLattice& L) {
    const auto& vars = L.ideal().variables();
    std::ostringstream s;
    s << "elements: " << L.size() << "  height: " << L.height() << '\n';
    s << "idx  height  element\n";
    for (int i = 0; i < L.size(); ++i)
        s << i << "  " << L.height(i) << "  " << mct::to_string(L.element(i), vars) << '\n';
    return s.str();
}

std::string table_betti(const mct::BettiTable& T) {
    std::ostringstream s;
    s << "char: " << T.characteristic() << '\n';
    s << "subject: " << mct::to_string(T.subject()) << '\n';
    s << mct::betti_diagram(T);
    if (!T.empty()) {
        s << "projdim: " << mct::projdim(T) << '\n';
        s << "regularity: " << mct::regularity(T) << '\n';
        s << "extremal:";
        for (const auto& [i, j] : mct::extremal_betti(T)) s << " (" << i << "," << j << ")";
        s << '\n';
    }
    return s.str();
}

std::string table_cohomology(const mct::CohomologyProfile& prof) {
    std::ostringstream s;
    s << "char_l: " << prof.ell << '\n';
    s << "r  dim\n";
    for (const auto& [r, d] : prof.dims) s << r << "  " << d << '\n';
    s << "top_affine: " << prof.top_affine << '\n';
    s << "top_projective: " << prof.top_projective << '\n';
    return s.str();
}

std::string table_hypotheses(const mct::HypothesesReport& rep, const mct::MonomialIdeal& I) {
    std::ostringstream s;
    s << "char_l: " << rep.ell << '\n';
    s << "pairwise_intersections: " << yes_no(rep.pairwise_intersections);
    if (rep.disjoint_pair) {
        s << "  (disjoint pair: " << mct::to_string(rep.disjoint_pair->first, I.variables())
          << " and " << mct::to_string(rep.disjoint_pair->second, I.variables()) << ")";
    }
    s << '\n';
    s << "cohomology_vanishing: " << yes_no(rep.cohomology_vanishing)
      << "  (top_projective " << rep.top_projective << ", vanishing required from r >= "
      << 2 * (I.nvars() - 1) - 2 << ")\n";
    s << "local_ara: " << rep.local_ara << '\n';
    return s.str();
}

std::string table_probe(const mct::ConjectureReport& rep) {
    std::ostringstream s;
    s << "char_k: " << rep.char_k;
    if (rep.char_heuristic) s << "  (heuristic stand-in " << rep.effective_char << ")";
    s << '\n';
    s << "dim_u: " << rep.dim_u << '\n';
    s << "cohdim: " << rep.cohdim << '\n';
    s << "qccd: " << rep.qccd << '\n';
    s << "lhs (dim_u + qccd): " << rep.lhs << '\n';
    s << "ell  top_proj_ideal  top_proj_witness  lower  lhs_exceeds\n";
    for (const auto& b : rep.bounds) {
        s << b.ell << "  " << b.top_projective_ideal << "  ";
        if (b.top_projective_witness)
            s << *b.top_projective_witness;
        else
            s << "-";
        s << "  " << b.lower_bound << "  " << yes_no(b.lhs_exceeds_lower_bound) << '\n';
    }
    for (const auto& a : rep.annotations) s << "note: " << a << '\n';
    return s.str();
}

std::string table_search(const mct::LcmLattice& L, const char* label,
                         const mct::MinRootingDim* r) {
    std::ostringstream s;
    s << label << ": ";
    if (r == nullptr) {
        s << "not run\n";
        return s.str();
    }
    s << r->min_dim << "  (exhaustive: " << yes_no(r->exhaustive)
      << ", maps examined: " << r->maps_examined << ", witness via " << r->witness_origin
      << ")\n";
    const auto& vars = L.ideal().variables();
    for (int e = 1; e < L.size(); ++e)
        s << "  rho(" << mct::to_string(L.element(e), vars) << ") = "
          << mct::to_string(L.element(r->witness.atom_of[static_cast<std::size_t>(e)]), vars)
          << '\n';
    return s.str();
}

std::string table_explorer(const mct::LcmLattice& L, const mct::MinRootingDim* all_mode,
                           const mct::MinRootingDim* orders_mode) {
    return table_search(L, "min_all", all_mode) + table_search(L, "min_orders", orders_mode);
}

std::string table_generators(const mct::GeneratorSet& G, std::vector<std::string> vars) {
    if (static_cast<int>(vars.size()) != G.variables) {
        vars.clear();
        for (int v = 0; v < G.variables; ++v) vars.push_back("x" + std::to_string(v));
    }
    std::ostringstream s;
    s << "method: " << mct::to_string(G.method) << '\n';
    if (G.method == mct::GenMethod::rooting) s << "d: " << G.d << '\n';
    s << "claimed_bound: " << G.claimed_bound << '\n';
    int first = G.method == mct::GenMethod::rooting ? 0 : 1;
    for (std::size_t k = 0; k < G.polys.size(); ++k) {
        s << "g_" << first + static_cast<int>(k) << " (degree " << G.degrees[k]
          << ") = " << G.polys[k].to_string(vars) << '\n';
    }
    return s.str();
}

std::string table_verification(const mct::VerificationReport& rep) {
    std::ostringstream s;
    s << "subset_certified: " << yes_no(rep.subset_certified) << '\n';
    for (const auto& [q, eq] : rep.equal_over)
        s << "F_" << q << ": " << (eq ? "equal" : "NOT equal") << '\n';
    if (rep.counterexample) {
        s << "counterexample over F_" << rep.counterexample->q << ": (";
        for (std::size_t i = 0; i < rep.counterexample->point.size(); ++i) {
            if (i > 0) s << ", ";
            s << rep.counterexample->point[i];
        }
        s << ")\n";
    } else {
        s << "counterexample: none\n";
    }
    s << "all_equal: " << yes_no(rep.all_equal()) << '\n';
    return s.str();
}

std::string table_ara(const mct::AraBounds& b) {
    std::ostringstream s;
    s << "upper_rooting: " << b.upper_rooting << "  (exhaustive: " << yes_no(b.rooting_exhaustive)
      << ")\n";
    s << "upper_height: " << b.upper_height << '\n';
    for (const auto& [c, v] : b.lower_qccd) s << "lower_qccd char " << c << ": " << v << '\n';
    for (const auto& [l, v] : b.lower_etale) s << "lower_etale ell " << l << ": " << v << '\n';
    for (const auto& n : b.notes) s << "note: " << n << '\n';
    return s.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorial invariants of monomial ideals"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--seed", seed, "seed for sampled searches")
        ->envname("MCT_SEED")
        ->capture_default_str();

    auto add_sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };
    auto pick = [&](const std::string& json_payload, const std::string& table_payload) {
        emit(format == "json" ? json_payload : table_payload, out_path);
    };

    mct::Config cfg;

    // print
    std::string print_ref;
    CLI::App* cmd_print = add_sub("print", "parse and print the canonical form of an ideal");
    cmd_print->add_option("ideal", print_ref, "fixture name or input file")->required();
    cmd_print->callback([&] {
        mct::MonomialIdeal I = resolve_ideal(print_ref);
        pick(mct::ideal_to_json(I), table_ideal(I));
    });

    // lattice
    std::string lat_ref;
    bool lat_dot = false;
    CLI::App* cmd_lattice = add_sub("lattice", "lcm-lattice: elements, covers, heights");
    cmd_lattice->add_option("ideal", lat_ref, "fixture name or input file")->required();
    cmd_lattice->add_flag("--dot", lat_dot, "emit the Hasse diagram in DOT instead");
    cmd_lattice->callback([&] {
        mct::LcmLattice L = mct::LcmLattice::build(resolve_ideal(lat_ref), cfg.lattice_cap);
        if (lat_dot) {
            emit(mct::lattice_to_dot(L), out_path);
            return;
        }
        pick(mct::lattice_to_json(L), table_lattice(L));
    });

    // betti
    std::string betti_ref;
    int betti_char = 2;
    std::string betti_subject = "ideal";
    bool betti_oracle = false;
    CLI::App* cmd_betti = add_sub("betti", "graded and multigraded Betti numbers over F_ell");
    cmd_betti->add_option("ideal", betti_ref, "fixture name or input file")->required();
    cmd_betti->add_option("--char", betti_char, "coefficient field characteristic (prime)")
        ->capture_default_str();
    cmd_betti->add_option("--subject", betti_subject, "resolve the ideal or the quotient")
        ->check(CLI::IsMember({"ideal", "quotient"}))
        ->capture_default_str();
    cmd_betti->add_flag("--oracle", betti_oracle,
                        "use the Taylor-complex oracle instead of the lattice route");
    cmd_betti->callback([&] {
        mct::MonomialIdeal I = resolve_ideal(betti_ref);
        mct::Subject subj =
            betti_subject == "ideal" ? mct::Subject::ideal : mct::Subject::quotient;
        mct::BettiTable T = betti_oracle ? mct::betti_taylor_oracle(I, betti_char, subj)
                                         : mct::betti_gpw(I, betti_char, subj);
        pick(mct::betti_to_json(T), table_betti(T));
    });

    // etale
    std::string et_ref;
    int et_ell = 2;
    bool et_hyp = false;
    CLI::App* cmd_etale =
        add_sub("etale", "constant-sheaf etale cohomology of the subspace-arrangement complement");
    cmd_etale->add_option("ideal", et_ref, "fixture name or input file (square-free)")->required();
    cmd_etale->add_option("--char-l", et_ell, "coefficient characteristic ell (prime)")
        ->capture_default_str();
    cmd_etale->add_flag("--hypotheses", et_hyp,
                        "report the projective vanishing-criterion hypotheses instead");
    cmd_etale->callback([&] {
        mct::MonomialIdeal I = resolve_ideal(et_ref);
        if (et_hyp) {
            mct::HypothesesReport rep = mct::check_complement_hypotheses(I, et_ell);
            pick(mct::hypotheses_to_json(rep, I), table_hypotheses(rep, I));
            return;
        }
        mct::CohomologyProfile prof = mct::yan_cohomology(I, et_ell);
        pick(mct::cohomology_to_json(prof), table_cohomology(prof));
    });

    // probe
    std::string probe_ref;
    std::string probe_witness;
    int probe_char_k = 2;
    std::vector<int> probe_ells = cfg.primes;
    CLI::App* cmd_probe =
        add_sub("probe", "compare dim U + qccd(U) against constant-sheaf lower bounds");
    cmd_probe->add_option("ideal", probe_ref, "fixture name or input file (square-free)")
        ->required();
    cmd_probe->add_option("--char-k", probe_char_k, "base field characteristic (prime or 0)")
        ->capture_default_str();
    cmd_probe->add_option("--ells", probe_ells, "coefficient characteristics to probe")
        ->delimiter(',')
        ->capture_default_str();
    cmd_probe->add_option("--witness", probe_witness,
                          "ideal whose vanishing locus contains V(I), for sharper bounds");
    cmd_probe->callback([&] {
        mct::MonomialIdeal I = resolve_ideal(probe_ref);
        std::optional<mct::MonomialIdeal> W;
        if (!probe_witness.empty()) W = resolve_ideal(probe_witness);
        mct::ConjectureReport rep =
            mct::conjecture_probe(I, probe_char_k, probe_ells, W, cfg.char0_stand_in);
        pick(mct::conjecture_to_json(rep), table_probe(rep));
    });

    // rooting
    std::string root_ref;
    std::string root_mode = "both";
    long long root_budget = cfg.rooting_cap;
    int root_samples = cfg.order_samples;
    CLI::App* cmd_rooting = add_sub("rooting", "minimum rooting-complex dimension search");
    cmd_rooting->add_option("ideal", root_ref, "fixture name or input file")->required();
    cmd_rooting->add_option("--mode", root_mode, "which searches to run")
        ->check(CLI::IsMember({"both", "all", "orders"}))
        ->capture_default_str();
    cmd_rooting->add_option("--budget", root_budget, "search-space cap for full enumeration")
        ->capture_default_str();
    cmd_rooting->add_option("--samples", root_samples, "sampled maps per non-exhaustive search")
        ->capture_default_str();
    cmd_rooting->callback([&] {
        mct::LcmLattice L = mct::LcmLattice::build(resolve_ideal(root_ref), cfg.lattice_cap);
        std::optional<mct::MinRootingDim> all_mode;
        std::optional<mct::MinRootingDim> orders_mode;
        if (root_mode != "orders")
            all_mode = mct::min_rooting_dim(L, mct::RootingSearchMode::all, root_budget, seed,
                                            root_samples);
        if (root_mode != "all")
            orders_mode = mct::min_rooting_dim(L, mct::RootingSearchMode::orders, root_budget,
                                               seed, root_samples);
        const mct::MinRootingDim* ap = all_mode ? &*all_mode : nullptr;
        const mct::MinRootingDim* op = orders_mode ? &*orders_mode : nullptr;
        pick(mct::explorer_to_json(L, ap, op), table_explorer(L, ap, op));
    });

    // generators
    std::string gen_ref;
    std::string gen_method = "height";
    int gen_d = 0;
    CLI::App* cmd_generators =
        add_sub("generators", "polynomials cutting out V(I) up to radical");
    cmd_generators->add_option("ideal", gen_ref, "fixture name or input file")->required();
    cmd_generators->add_option("--method", gen_method, "construction")
        ->check(CLI::IsMember({"height", "rooting"}))
        ->capture_default_str();
    cmd_generators->add_option("--d", gen_d,
                               "normalization degree for the rooting construction (0 = default)");
    cmd_generators->callback([&] {
        mct::MonomialIdeal I = resolve_ideal(gen_ref);
        mct::GeneratorSet G;
        if (gen_method == "rooting") {
            mct::LcmLattice L = mct::LcmLattice::build(I, cfg.lattice_cap);
            mct::RootingMap rho = mct::rooting_from_order(L, L.atoms());
            G = mct::generators_from_rooting(
                I, rho, gen_d > 0 ? std::optional<int>(gen_d) : std::nullopt);
        } else {
            G = mct::generators_from_heights(I);
        }
        pick(mct::generators_to_json(G), table_generators(G, I.variables()));
    });

    // verify
    std::string ver_ref;
    std::string ver_file;
    std::vector<int> ver_primes = cfg.primes;
    CLI::App* cmd_verify =
        add_sub("verify", "check a generator set cuts out V(I) over small prime fields");
    cmd_verify->add_option("ideal", ver_ref, "fixture name or input file")->required();
    cmd_verify->add_option("generators", ver_file, "generator-set JSON file")->required();
    cmd_verify->add_option("--primes", ver_primes, "field sizes to scan")
        ->delimiter(',')
        ->capture_default_str();
    cmd_verify->callback([&] {
        mct::MonomialIdeal I = resolve_ideal(ver_ref);
        mct::GeneratorSet G = mct::generator_set_from_json(read_file(ver_file));
        mct::VerificationReport rep =
            mct::verify_radical_equality(I, G, ver_primes, cfg.point_cap);
        pick(mct::verification_to_json(rep), table_verification(rep));
    });

    // ara
    std::string ara_ref;
    std::vector<int> ara_chars = cfg.primes;
    std::vector<int> ara_ells = cfg.primes;
    int ara_samples = cfg.ara_samples;
    CLI::App* cmd_ara = add_sub("ara", "arithmetic-rank bounds with provenance notes");
    cmd_ara->add_option("ideal", ara_ref, "fixture name or input file")->required();
    cmd_ara->add_option("--chars", ara_chars, "characteristics for the qccd lower bounds")
        ->delimiter(',')
        ->capture_default_str();
    cmd_ara->add_option("--ells", ara_ells, "coefficient characteristics for the etale bounds")
        ->delimiter(',')
        ->capture_default_str();
    cmd_ara->add_option("--samples", ara_samples, "sampled rooting maps for the upper bound")
        ->capture_default_str();
    cmd_ara->callback([&] {
        mct::MonomialIdeal I = resolve_ideal(ara_ref);
        mct::AraBounds b = mct::ara_bounds_report(I, ara_chars, ara_ells, seed, ara_samples);
        pick(mct::ara_to_json(b), table_ara(b));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const mct::fixture_validation_error& e) {
        std::cerr << "mct: fixture self-validation failed: " << e.what() << '\n';
        return 3;
    } catch (const mct::error& e) {
        std::cerr << "mct: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mct: internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
