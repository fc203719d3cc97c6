#include "doctest.h"

#include "boolspec/constructions.hpp"
#include "boolspec/errors.hpp"
#include "boolspec/measures.hpp"

using namespace boolspec;

namespace {

bool same_spectrum(const SparseSpectrum& a, const SparseSpectrum& b) {
    if (a.n != b.n || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].mask != b.terms[i].mask || !(a.terms[i].value == b.terms[i].value)) return false;
    return true;
}

}  // namespace

TEST_CASE("AND_2 spectrum") {
    auto s = wht(make(FamilySpec::and_n(2)));
    CHECK(s.coeffs == std::vector<std::int64_t>{2, 2, 2, -2});
}

TEST_CASE("addressing profile") {
    auto s = FamilySpec::addressing(2);
    CHECK(arity(s) == 3);
    auto p = profile(make(s));
    CHECK(p.delta == Rational(1, 2));
    CHECK(p.k == 4);
    CHECK(p.r == 3);
    CHECK(p.kprime == Rational(2));
}

TEST_CASE("AD_{t,t',a} empty coefficient") {
    auto s = closed_form_spectrum(FamilySpec::ad_tta(4, 4, 8));
    // 1 + 2/(tt') - 2/(at) - 2/t' = 1 - 2 delta
    CHECK(s.at(0) == Rational(9, 16));
}

TEST_CASE("bent inner product") {
    for (int n = 2; n <= 8; n += 2) {
        auto s = to_sparse(wht(make(FamilySpec::bent_ip(n))));
        CHECK(s.terms.size() == (std::size_t(1) << n));
        for (const auto& t : s.terms) CHECK(t.value.abs() == pow2(n / 2).inverse());
    }
    CHECK_THROWS_AS(validate(FamilySpec::bent_ip(3)), InvalidSpec);
}

TEST_CASE("closed forms match the transform on a grid") {
    std::vector<FamilySpec> grid;
    for (int n = 1; n <= 8; ++n) grid.push_back(FamilySpec::and_n(n));
    for (int n = 1; n <= 6; ++n) grid.push_back(FamilySpec::parity_n(n));
    for (int n = 2; n <= 8; n += 2) grid.push_back(FamilySpec::bent_ip(n));
    for (int t : {2, 4, 8}) grid.push_back(FamilySpec::addressing(t));
    grid.push_back(FamilySpec::ad_tt(2, 4));
    grid.push_back(FamilySpec::ad_tt(4, 4));
    grid.push_back(FamilySpec::ad_tta(2, 2, 4));
    grid.push_back(FamilySpec::ab(4, 4));
    grid.push_back(FamilySpec::aab(2, 4, 4));
    grid.push_back(FamilySpec::mand(4, 2));
    for (const auto& s : grid) {
        INFO(s.label());
        CHECK(same_spectrum(closed_form_spectrum(s), to_sparse(wht(make(s)))));
    }
}

TEST_CASE("mad has no closed form") {
    CHECK_THROWS_AS(closed_form_spectrum(FamilySpec::mad(4, 4, 2)), NoClosedForm);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(FamilySpec::addressing(3)), InvalidSpec);
    CHECK_THROWS_AS(validate(FamilySpec::ad_tta(4, 8, 8)), InvalidSpec);  // needs a >= 2t'
    CHECK_NOTHROW(validate(FamilySpec::ad_tta(4, 4, 8)));
}

TEST_CASE("closed form beyond the dense guard") {
    auto s = FamilySpec::ad_tt(16, 16);
    CHECK(arity(s) > 22);
    auto p = measure(s);
    CHECK(p.delta == Rational(1, 16));
    CHECK(p.k == 1 + 256 * 15);
    CHECK(p.kprime == Rational(128));
}

TEST_CASE("witness kline instantiation") {
    auto plan = witness(WitnessKind::KLine, 16, 4096, 2048);
    CHECK(plan.spec.family == Family::AdTta);
    CHECK(plan.spec.a >= 2 * plan.spec.tprime);
}

TEST_CASE("witness rejects out-of-range parameters") {
    CHECK_THROWS(witness(WitnessKind::KLine, 2, 4096, 2048));
}
