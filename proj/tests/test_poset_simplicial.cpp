#include <doctest.h>

#include <utility>
#include <vector>

#include "mct/errors.hpp"
#include "mct/poset.hpp"
#include "mct/simplicial.hpp"

using mct::Poset;
using mct::SimplicialComplex;

TEST_CASE("poset construction verifies axioms") {
    // divisibility on {1, 2, 3, 6}
    std::vector<int> vals{1, 2, 3, 6};
    Poset d(4, [&](int a, int b) { return vals[static_cast<std::size_t>(b)] % vals[static_cast<std::size_t>(a)] == 0; });
    CHECK(d.leq(0, 3));
    CHECK(d.less(1, 3));
    CHECK_FALSE(d.leq(1, 2));
    auto covers = d.cover_pairs();
    CHECK(covers == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    // antisymmetry violation: two distinct elements each below the other
    CHECK_THROWS_AS(Poset(2, [](int, int) { return true; }), mct::error);
    // missing reflexivity
    CHECK_THROWS_AS(Poset(2, [](int a, int b) { return a < b; }), mct::error);
    // broken transitivity
    CHECK_THROWS_AS(Poset(3,
                          [](int a, int b) {
                              if (a == b) return true;
                              return (a == 0 && b == 1) || (a == 1 && b == 2);
                          }),
                    mct::error);
}

TEST_CASE("poset induced subposet") {
    Poset c = Poset::chain(4);
    Poset sub = c.induced({1, 3});
    CHECK(sub.size() == 2);
    CHECK(sub.leq(0, 1));
    CHECK_FALSE(sub.leq(1, 0));
    CHECK(Poset::antichain(3).cover_pairs().empty());
}

TEST_CASE("simplicial complex basics") {
    SimplicialComplex v = SimplicialComplex::void_complex();
    CHECK(v.is_void());
    CHECK(v.dim() == -2);
    CHECK(v.face_count() == 0);

    SimplicialComplex irr = SimplicialComplex::irrelevant_complex();
    CHECK_FALSE(irr.is_void());
    CHECK(irr.dim() == -1);
    CHECK(irr.face_count() == 1);
    CHECK(irr.has_face({}));

    SimplicialComplex full = SimplicialComplex::closure(3, {{0, 1, 2}});
    CHECK(full.dim() == 2);
    CHECK(full.face_count() == 8);
    CHECK(full.has_face({0, 2}));
    CHECK(full.is_cone_with_apex(0));
    CHECK(full.is_cone_with_apex(1));
    CHECK(full.euler_characteristic_reduced() == 0);
}

TEST_CASE("boundary of the triangle is a circle") {
    SimplicialComplex circle = SimplicialComplex::closure(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(circle.dim() == 1);
    CHECK(circle.euler_characteristic_reduced() == -1 + 3 - 3);
    CHECK_FALSE(circle.is_cone_with_apex(0));
    CHECK_FALSE(circle.has_face({0, 1, 2}));
}

TEST_CASE("from_closed_faces validates closedness") {
    std::vector<std::vector<int>> closed{{}, {0}, {1}, {0, 1}};
    SimplicialComplex K = SimplicialComplex::from_closed_faces(2, closed);
    CHECK(K.dim() == 1);
    CHECK(K == SimplicialComplex::closure(2, {{0, 1}}));

    // {0,1} without {1}
    CHECK_THROWS_AS(SimplicialComplex::from_closed_faces(2, {{}, {0}, {0, 1}}), mct::error);
}

TEST_CASE("induced subcomplex relabels in order") {
    SimplicialComplex K = SimplicialComplex::closure(4, {{0, 1, 2}, {2, 3}});
    SimplicialComplex sub = K.induced({1, 2, 3});
    // vertices 1,2,3 become 0,1,2; faces {1,2} -> {0,1}, {2,3} -> {1,2}
    CHECK(sub.has_face({0, 1}));
    CHECK(sub.has_face({1, 2}));
    CHECK_FALSE(sub.has_face({0, 2}));
    CHECK(sub.dim() == 1);
    CHECK(K.contains_complex(SimplicialComplex::closure(4, {{0, 1}})));
    CHECK_FALSE(SimplicialComplex::closure(4, {{0, 1}}).contains_complex(K));
}

TEST_CASE("order complex") {
    // chain of 3: order complex is the full 2-simplex
    CHECK(mct::order_complex(Poset::chain(3)) == SimplicialComplex::closure(3, {{0, 1, 2}}));
    // antichain: just the vertices
    CHECK(mct::order_complex(Poset::antichain(3)).dim() == 0);
    // empty poset: the irrelevant complex
    CHECK(mct::order_complex(Poset::antichain(0)) == SimplicialComplex::irrelevant_complex());

    // divisibility on {1,2,3,6}: chains avoid {2,3}; two hollow triangles
    std::vector<int> vals{1, 2, 3, 6};
    Poset d(4, [&](int a, int b) { return vals[static_cast<std::size_t>(b)] % vals[static_cast<std::size_t>(a)] == 0; });
    SimplicialComplex oc = mct::order_complex(d);
    CHECK(oc.has_face({0, 1, 3}));
    CHECK(oc.has_face({0, 2, 3}));
    CHECK_FALSE(oc.has_face({1, 2}));
    CHECK(oc.face_count() == 1 + 4 + 5 + 2);
}
