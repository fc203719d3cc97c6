#include "doctest.h"

#include "boolspec/constructions.hpp"
#include "boolspec/core.hpp"
#include "boolspec/measures.hpp"

using namespace boolspec;

TEST_CASE("AND_3 profile") {
    auto p = profile(make(FamilySpec::and_n(3)));
    CHECK(p.delta == Rational(1, 8));
    CHECK(p.k == 8);
    CHECK(p.r == 3);
    CHECK(p.kprime == Rational(4));
    CHECK(p.kdprime == Rational(4));
    CHECK_FALSE(p.degenerate);
}

TEST_CASE("constant and parity are degenerate") {
    auto c = profile(BooleanFunction(3));
    CHECK(c.k == 1);
    CHECK(c.r == 0);
    CHECK(c.degenerate);
    auto x = profile(BooleanFunction::from_string(2, "+--+"));
    CHECK(x.k == 1);
    CHECK(x.r == 1);
    CHECK(x.delta == Rational(1, 2));
}

TEST_CASE("threshold steps") {
    auto c = threshold_dims(to_sparse(wht(BooleanFunction(2))));
    REQUIRE(c.size() == 1);
    CHECK(c[0].t == Rational(1));
    CHECK(c[0].dim == 0);

    auto b = threshold_dims(to_sparse(wht(BooleanFunction::from_string(2, "+++-"))));
    REQUIRE(b.size() == 1);
    CHECK(b[0].t == Rational(2));
    CHECK(b[0].dim == 2);

    // AD_{8,8}: two magnitudes, the large one on the empty set only
    auto s = spectrum_of(FamilySpec::ad_tt(8, 8));
    auto steps = threshold_dims(s);
    REQUIRE(steps.size() == 2);
    CHECK(steps[1].t == Rational(32));
    CHECK(steps[1].dim == 27);
}

TEST_CASE("kdprime basis spans the support") {
    auto s = to_sparse(wht(make(FamilySpec::ad_tt(2, 4))));
    auto p = profile(s);
    auto basis = kdprime_basis(s);
    CHECK(static_cast<int>(basis.size()) == p.r);
}

TEST_CASE("coset count") {
    auto s = to_sparse(wht(make(FamilySpec::and_n(2))));
    CHECK(coset_count(s, {}) == 4);
    CHECK(coset_count(s, {Mask(1)}) == 2);
    CHECK(coset_count(s, {Mask(1), Mask(2)}) == 1);
    CHECK(nonempty_sparsity(s) == 3);
}

TEST_CASE("norms") {
    auto s = to_sparse(wht(make(FamilySpec::and_n(2))));
    CHECK(l1_norm(s) == Rational(2));
    CHECK(level1_l1(s) == Rational(1));
}
