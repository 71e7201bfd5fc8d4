#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "mct/errors.hpp"
#include "mct/fixtures.hpp"
#include "mct/generators.hpp"
#include "mct/ideal.hpp"
#include "mct/lattice.hpp"
#include "mct/monomial.hpp"
#include "mct/rooting.hpp"
#include "test_util.hpp"

using mct::GeneratorSet;
using mct::GenMethod;
using mct::LcmLattice;
using mct::Monomial;
using mct::MonomialIdeal;
using mct::Polynomial;

namespace {

Monomial mono(const MonomialIdeal& I, const std::string& s) {
    MonomialIdeal J = MonomialIdeal::parse(s, I.variables());
    REQUIRE(J.generators().size() == 1);
    return J.generators().front();
}

} // namespace

TEST_CASE("polynomial arithmetic") {
    Polynomial f(3);
    Monomial xy = mct::squarefree_from_mask(3, 0b011);
    Monomial z = Monomial::variable(3, 2);
    f.add_term(xy, 1);
    f.add_term(z, 2);
    f.add_term(xy, 3);
    CHECK(f.coefficient(xy) == 4);
    f.add_term(xy, -4); // cancels away
    CHECK(f.coefficient(xy) == 0);
    CHECK(f.terms().size() == 1);
    CHECK(f.homogeneous_degree() == 1);
    f.add_term(xy, 1);
    CHECK_FALSE(f.homogeneous_degree().has_value());
    CHECK_FALSE(f.all_unit_coefficients());

    CHECK(f.evaluate_mod({1, 1, 1}, 5) == 3); // 1*1 + 2*1
    CHECK(f.evaluate_mod({1, 1, 1}, 3) == 0);
    CHECK(f.evaluate_mod({0, 4, 2}, 5) == 4); // 2*2 only
    CHECK_THROWS_AS(f.evaluate_mod({1, 1}, 5), mct::error);
    CHECK_THROWS_AS(f.add_term(Monomial::one(2), 1), mct::error);

    CHECK(f.to_string({"x", "y", "z"}) == "2*z + x*y");
    CHECK(Polynomial(3).to_string({"x", "y", "z"}) == "0");
    CHECK(Polynomial(3).is_zero());
}

TEST_CASE("normalize_generator keeps support and hits the degree") {
    Monomial yz = mct::squarefree_from_mask(3, 0b110);
    Monomial n = mct::normalize_generator(yz, 5);
    CHECK(n.degree() == 5);
    CHECK(n.support_mask() == yz.support_mask());
    CHECK(n.exponent(1) == 4); // first support variable absorbs the slack
    CHECK(n.exponent(2) == 1);
    CHECK(mct::normalize_generator(yz, 2) == yz);
    CHECK_THROWS_AS(mct::normalize_generator(yz, 1), mct::error);
    CHECK_THROWS_AS(mct::normalize_generator(Monomial::one(3), 4), mct::error);
}

TEST_CASE("triangle: height construction pinned") {
    MonomialIdeal T = mct::fixture("triangle");
    GeneratorSet G = mct::generators_from_heights(T);
    CHECK(G.method == GenMethod::height);
    CHECK(G.variables == 3);
    CHECK(G.claimed_bound == 2);
    CHECK(G.d == 0);
    REQUIRE(G.polys.size() == 2);
    CHECK(G.degrees == std::vector<int>{2, 3});
    CHECK(G.polys[0].to_string(T.variables()) == "x*y + x*z + y*z");
    CHECK(G.polys[1].to_string(T.variables()) == "x*y*z");
    CHECK(G.polys[0].all_unit_coefficients());

    // grown target degrees renormalize each stratum
    GeneratorSet G2 = mct::generators_from_heights(T, std::vector<int>{3, 4});
    CHECK(G2.degrees == std::vector<int>{3, 4});
    CHECK(G2.polys[0].homogeneous_degree() == 3);
    CHECK(G2.polys[0].coefficient(mono(T, "x^2*y")) == 1);
    CHECK_THROWS_AS(mct::generators_from_heights(T, std::vector<int>{1, 3}), mct::error);
    CHECK_THROWS_AS(mct::generators_from_heights(T, std::vector<int>{3}), mct::error);
}

TEST_CASE("triangle: rooting construction pinned") {
    MonomialIdeal T = mct::fixture("triangle");
    LcmLattice L = LcmLattice::build(T);
    mct::RootingMap rho = mct::rooting_from_order(L, L.atoms());
    GeneratorSet G = mct::generators_from_rooting(T, rho);
    CHECK(G.method == GenMethod::rooting);
    CHECK(G.d == 2);
    CHECK(G.claimed_bound == 2);
    REQUIRE(G.polys.size() == 2);
    CHECK(G.degrees == std::vector<int>{2, 4});
    CHECK(G.polys[0].to_string(T.variables()) == "x*y + x*z + y*z");
    CHECK(G.polys[1].to_string(T.variables()) == "x^2*y*z + x*y^2*z");
    for (std::size_t r = 0; r < G.polys.size(); ++r)
        CHECK(G.polys[r].homogeneous_degree() == static_cast<int>(r + 1) * G.d);

    GeneratorSet G3 = mct::generators_from_rooting(T, rho, 3);
    CHECK(G3.degrees == std::vector<int>{3, 6});
    CHECK_THROWS_AS(mct::generators_from_rooting(T, rho, 1), mct::error);
}

TEST_CASE("construction degrees and shapes on random ideals") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        MonomialIdeal I = t % 2 ? mct_test::random_squarefree_ideal(rng)
                                : mct_test::random_ideal(rng);
        LcmLattice L = LcmLattice::build(I);

        GeneratorSet H = mct::generators_from_heights(I);
        CHECK(static_cast<int>(H.polys.size()) == L.height());
        CHECK(H.claimed_bound == L.height());
        for (std::size_t r = 0; r < H.polys.size(); ++r) {
            CHECK(H.polys[r].homogeneous_degree() == H.degrees[r]);
            if (I.is_squarefree()) CHECK(H.polys[r].all_unit_coefficients());
        }

        mct::RootingMap rho = mct::rooting_from_order(L, L.atoms());
        GeneratorSet R = mct::generators_from_rooting(I, rho);
        auto gamma = mct::rooting_complex(L, rho);
        CHECK(static_cast<int>(R.polys.size()) == gamma.dim() + 1);
        for (std::size_t r = 0; r < R.polys.size(); ++r)
            CHECK(R.polys[r].homogeneous_degree() == static_cast<int>(r + 1) * R.d);
    }
}

TEST_CASE("verification: both constructions pass on the triangle") {
    MonomialIdeal T = mct::fixture("triangle");
    LcmLattice L = LcmLattice::build(T);
    for (GeneratorSet G : {mct::generators_from_heights(T),
                           mct::generators_from_rooting(T, mct::rooting_from_order(L, L.atoms()))}) {
        auto rep = mct::verify_radical_equality(T, G, {2, 3, 5});
        CHECK(rep.subset_certified);
        CHECK(rep.fields_checked == std::vector<int>{2, 3, 5});
        CHECK(rep.all_equal());
        CHECK_FALSE(rep.counterexample.has_value());
    }
}

TEST_CASE("verification catches a deliberately truncated set") {
    // x*y + x*z + y*z alone cuts out V(triangle) over F_2 but not F_3:
    // at (1,1,1) the sum vanishes mod 3 while x*y does not.
    MonomialIdeal T = mct::fixture("triangle");
    GeneratorSet G = mct::generators_from_heights(T);
    G.polys.resize(1);
    G.degrees.resize(1);
    G.claimed_bound = 1;

    auto rep = mct::verify_radical_equality(T, G, {2, 3});
    CHECK(rep.subset_certified);
    CHECK(rep.equal_over.at(2));
    CHECK_FALSE(rep.equal_over.at(3));
    CHECK_FALSE(rep.all_equal());
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->q == 3);
    CHECK(rep.counterexample->point == std::vector<int>{1, 1, 1});
}

TEST_CASE("verification rejects bad inputs") {
    MonomialIdeal T = mct::fixture("triangle");
    GeneratorSet G = mct::generators_from_heights(T);
    CHECK_THROWS_AS(mct::verify_radical_equality(T, G, {}), mct::error);
    CHECK_THROWS_AS(mct::verify_radical_equality(T, G, {4}), mct::error);
    CHECK_THROWS_AS(mct::verify_radical_equality(T, G, {2, 3, 5}, 5), mct::size_error);
    GeneratorSet other = mct::generators_from_heights(mct::fixture("koszul(3)"));
    CHECK_THROWS_AS(mct::verify_radical_equality(T, other), mct::error);
}

TEST_CASE("verification passes on fixtures and random square-free ideals") {
    std::mt19937_64 rng(59);
    std::vector<MonomialIdeal> subjects{mct::fixture("koszul(2)"), mct::fixture("bipartite6")};
    for (int t = 0; t < 6; ++t)
        subjects.push_back(mct_test::random_squarefree_ideal(rng, 4, 4));
    for (const auto& I : subjects) {
        LcmLattice L = LcmLattice::build(I);
        auto h = mct::verify_radical_equality(I, mct::generators_from_heights(I), {2, 3});
        CHECK(h.all_equal());
        auto r = mct::verify_radical_equality(
            I, mct::generators_from_rooting(I, mct::rooting_from_order(L, L.atoms())), {2, 3});
        CHECK(r.all_equal());
    }
}

TEST_CASE("arithmetic-rank bounds: triangle exhaustive, reisner pinned") {
    mct::AraBounds tri = mct::ara_bounds_report(mct::fixture("triangle"));
    CHECK(tri.upper_rooting == 2);
    CHECK(tri.rooting_exhaustive);
    CHECK(tri.upper_height == 2);
    for (int ell : {2, 3, 5}) {
        CHECK(tri.lower_qccd.at(ell) == 2);
        CHECK(tri.lower_etale.at(ell) == 2);
    }

    mct::AraBounds r = mct::ara_bounds_report(mct::fixture("reisner"));
    CHECK(r.upper_rooting == 4);
    CHECK_FALSE(r.rooting_exhaustive);
    CHECK(r.upper_height == 4);
    CHECK(r.lower_qccd == std::map<int, int>{{2, 4}, {3, 3}, {5, 3}});
    CHECK(r.lower_etale == std::map<int, int>{{2, 4}, {3, 2}, {5, 2}});
    CHECK_FALSE(r.notes.empty());

    // at l = 2 the sandwich pins ara(reisner) = 4 exactly
    CHECK(r.lower_etale.at(2) == r.upper_rooting);
}

TEST_CASE("arithmetic-rank bounds skip etale lower bounds off square-free") {
    MonomialIdeal I = MonomialIdeal::parse("x^2*y, y*z^3");
    mct::AraBounds b = mct::ara_bounds_report(I);
    CHECK(b.upper_height >= 1);
    CHECK(b.lower_etale.empty());
    CHECK_FALSE(b.notes.empty());
}
