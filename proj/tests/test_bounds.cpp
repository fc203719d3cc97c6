#include <cmath>

#include "doctest.h"

#include "boolspec/bounds.hpp"
#include "boolspec/constructions.hpp"
#include "boolspec/errors.hpp"

using namespace boolspec;

TEST_CASE("chang weight bound") {
    CHECK(chang_weight_bound(27, Rational(32)) == doctest::Approx(std::sqrt(27.0) / (32 * std::sqrt(std::log2(1024.0 / 27)))));
    CHECK(chang_weight_bound(27, Rational(32)) == doctest::Approx(0.0709).epsilon(1e-3));
    CHECK_THROWS_AS(chang_weight_bound(1, Rational(4)), Undefined);
    CHECK_THROWS_AS(chang_weight_bound(16, Rational(4)), Undefined);
}

TEST_CASE("chang dimension bound") {
    CHECK(chang_dim_bound(Rational(4), Rational(1, 2)) == doctest::Approx(4));
    CHECK(chang_dim_bound(Rational(2), Rational(1, 4)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(chang_dim_bound(Rational(2), Rational(0)), Undefined);
}

TEST_CASE("best chang bound") {
    auto b = best_chang_bound(spectrum_of(FamilySpec::ad_tt(8, 8)));
    CHECK(b.t == Rational(32));
    CHECK(b.dim == 27);
    CHECK(b.value == doctest::Approx(0.0709013).epsilon(1e-5));

    auto bent = best_chang_bound(to_sparse(wht(BooleanFunction::from_string(2, "+++-"))));
    CHECK(bent.t == Rational(2));
    CHECK(bent.dim == 2);
    CHECK(bent.value == doctest::Approx(std::sqrt(2.0) / 2));

    CHECK_THROWS_AS(best_chang_bound(to_sparse(wht(BooleanFunction(2)))), NoValidThreshold);
}

TEST_CASE("inequality verdicts pass on the constructions") {
    for (const auto& s : {FamilySpec::and_n(4), FamilySpec::ad_tt(2, 4), FamilySpec::ad_tta(4, 4, 8),
                          FamilySpec::ab(8, 4), FamilySpec::bent_ip(6)}) {
        for (const auto& v : verify_inequalities(make(s))) {
            INFO(s.label() << " " << v.name << " " << v.lhs << " " << v.rhs);
            CHECK((v.skipped || v.pass));
        }
    }
}

TEST_CASE("improved CHLT only applies at small weight") {
    auto v = verify_inequalities(make(FamilySpec::addressing(2)));
    bool found = false;
    for (const auto& x : v)
        if (x.name == "improved_chlt") {
            found = true;
            CHECK(x.skipped);
        }
    CHECK(found);
}

TEST_CASE("bound report curves") {
    auto r = bound_report(make(FamilySpec::and_n(3)));
    REQUIRE(r.kline);
    CHECK(*r.kline == doctest::Approx(9.0 / (8 * 9)));
    CHECK(*r.kprime_curve == doctest::Approx(0.5));
    CHECK(*r.kdprime_curve == doctest::Approx(3.0 / (4 * 3)));
    auto c = bound_report(BooleanFunction(2));
    CHECK_FALSE(c.kline);
    CHECK_FALSE(c.chang_best);
}

TEST_CASE("appendix screen reports without asserting") {
    auto a = appendix_check(to_sparse(wht(make(FamilySpec::and_n(4)))));
    CHECK(a.thresholds_checked >= 1);
    CHECK(a.violations == 0);
}
