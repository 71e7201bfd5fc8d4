#include "mct/fixtures.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "mct/betti.hpp"
#include "mct/errors.hpp"

namespace mct {

namespace {

std::vector<std::string> xvars(int n) {
    std::vector<std::string> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw fixture_validation_error("fixture self-validation failed: " + what);
}

/// Generators are the minimal non-faces of the triangulation; since its
/// 1-skeleton is complete, these are exactly the ten non-facet triples.
MonomialIdeal build_reisner() {
    std::set<std::vector<int>> facets;
    for (auto f : projective_plane_facets()) {
        std::sort(f.begin(), f.end());
        facets.insert(f);
    }
    std::vector<Monomial> gens;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                if (!facets.count({a, b, c})) {
                    std::vector<int> e(6, 0);
                    e[static_cast<std::size_t>(a)] = e[static_cast<std::size_t>(b)] =
                        e[static_cast<std::size_t>(c)] = 1;
                    gens.emplace_back(e);
                }
    MonomialIdeal I = MonomialIdeal::from_generators(xvars(6), std::move(gens));

    expect(I.generator_count() == 10, "reisner: expected 10 generators, got " +
                                          std::to_string(I.generator_count()));
    expect(I.max_generator_degree() == 3 &&
               std::all_of(I.generators().begin(), I.generators().end(),
                           [](const Monomial& m) { return m.degree() == 3; }),
           "reisner: expected all generators cubic");
    const int h = ideal_height(I);
    expect(h == 3, "reisner: expected height 3, got " + std::to_string(h));
    const int pd = projdim(betti_gpw(I, 2, Subject::quotient));
    expect(pd == 4, "reisner: expected projdim(R/I) = 4 over F_2, got " + std::to_string(pd));
    const ExtremalSet ex = extremal_betti(betti_gpw(I, 5, Subject::ideal));
    expect(ex == ExtremalSet{{2, 5}},
           "reisner: expected the single extremal Betti position (2,5) over F_5");
    return I;
}

MonomialIdeal build_z1() {
    const auto vars = xvars(6);
    MonomialIdeal acc;
    bool first = true;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                MonomialIdeal P = MonomialIdeal::from_generators(
                    vars, {Monomial::variable(6, a), Monomial::variable(6, b),
                           Monomial::variable(6, c)});
                acc = first ? P : intersect(acc, P);
                first = false;
            }
    expect(acc.generator_count() == 15, "z1: expected 15 generators, got " +
                                            std::to_string(acc.generator_count()));
    expect(std::all_of(acc.generators().begin(), acc.generators().end(),
                       [](const Monomial& m) { return m.degree() == 4 && m.is_squarefree(); }),
           "z1: expected square-free quartic generators");
    return acc;
}

MonomialIdeal build_koszul(int n) {
    if (n < 0 || n > 19) throw error("koszul(n) supports 0 <= n <= 19");
    std::vector<Monomial> gens;
    for (int i = 0; i <= n; ++i) gens.push_back(Monomial::variable(n + 1, i));
    return MonomialIdeal::from_generators(xvars(n + 1), std::move(gens));
}

const std::regex koszul_re(R"(^koszul\((\d{1,2})\)$)");

} // namespace

std::vector<std::vector<int>> projective_plane_facets() {
    return {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
}

MonomialIdeal fixture(const std::string& name) {
    if (name == "reisner") {
        static const MonomialIdeal I = build_reisner();
        return I;
    }
    if (name == "bipartite6")
        return MonomialIdeal::parse("x0*x1, x2*x3, x4*x5, x0*x3, x0*x5, x2*x5", xvars(6));
    if (name == "z1") {
        static const MonomialIdeal I = build_z1();
        return I;
    }
    if (name == "triangle")
        return MonomialIdeal::parse("x*y, x*z, y*z",
                                    std::vector<std::string>{"x", "y", "z"});
    if (name == "principal") return MonomialIdeal::parse("x0*x1", xvars(2));
    std::smatch m;
    if (std::regex_match(name, m, koszul_re)) return build_koszul(std::stoi(m[1].str()));
    throw error("unknown fixture: " + name);
}

bool is_fixture_name(const std::string& name) {
    static const std::set<std::string> plain = {"reisner", "bipartite6", "z1", "triangle",
                                                "principal"};
    return plain.count(name) > 0 || std::regex_match(name, koszul_re);
}

std::vector<std::string> fixture_names() {
    return {"reisner", "bipartite6", "z1", "triangle", "principal", "koszul(n)"};
}

} // namespace mct
