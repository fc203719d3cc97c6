#include <sstream>

#include "doctest.h"

#include "boolspec/errors.hpp"
#include "boolspec/io.hpp"

using namespace boolspec;

TEST_CASE("truth table text round trip") {
    auto f = make(FamilySpec::addressing(2));
    std::stringstream ss;
    write_truth_table(ss, f);
    CHECK(read_truth_table(ss) == f);
}

TEST_CASE("malformed truth tables") {
    std::istringstream a("2\n+-+\n"), b("2\n+-x+\n"), c("x\n");
    CHECK_THROWS_AS(read_truth_table(a), ParseError);
    CHECK_THROWS_AS(read_truth_table(b), ParseError);
    CHECK_THROWS_AS(read_truth_table(c), ParseError);
}

TEST_CASE("spectrum csv") {
    std::ostringstream os;
    write_spectrum_csv(os, wht(make(FamilySpec::and_n(2))));
    CHECK(os.str() == "mask_hex,c,fhat_num,fhat_den\n0x0,2,1,2\n0x1,2,1,2\n0x2,2,1,2\n0x3,-2,-1,2\n");
}

TEST_CASE("family spec json round trip") {
    for (const auto& s : {FamilySpec::ad_tta(4, 4, 8), FamilySpec::mad(4, 4, 2),
                          FamilySpec::composed(2, BooleanFunction::from_string(2, "+++-"))}) {
        auto back = family_from_json(to_json(s));
        CHECK(back.label() == s.label());
        CHECK(make(back) == make(s));
    }
    CHECK_THROWS_AS(family_from_json(nlohmann::json{{"family", "ad_tt"}, {"t", 3}, {"tprime", 4}}), InvalidSpec);
}

TEST_CASE("profile json carries exact rationals") {
    auto j = to_json(profile(make(FamilySpec::ad_tta(4, 4, 8))));
    CHECK(j["delta"]["num"] == 7);
    CHECK(j["delta"]["den"] == 32);
    CHECK(j["k"] == 68);
}
