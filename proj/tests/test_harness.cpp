#include <sstream>

#include "doctest.h"

#include "boolspec/harness.hpp"

using namespace boolspec;

TEST_CASE("scan over n = 3") {
    auto rows = scan(3, 0, 1);
    CHECK(rows.size() == 256);
    for (const auto& r : rows) CHECK(r.failed_checks == 0);
    auto serial = scan(3, 0, 1, false);
    std::ostringstream a, b;
    write_scan_csv(a, rows);
    write_scan_csv(b, serial);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("index,w,k,r,kprime_num,kprime_den,kdprime_num,kdprime_den,degf2,", 0) == 0);
}

TEST_CASE("sampled scan is sorted and deterministic") {
    auto a = scan(5, 50, 3), b = scan(5, 50, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].index == b[i].index);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].index < a[i].index);
    CHECK_THROWS(scan(5, 0, 1));
}

TEST_CASE("suites are deterministic given a seed") {
    SuiteOptions o;
    o.max_n = 3;
    o.samples = 20;
    o.seed = 4;
    for (const std::string name : {"composition", "napdt"}) {
        auto a = failure_json(run_suite(name, o).front()).dump();
        auto b = failure_json(run_suite(name, o).front()).dump();
        CHECK(a == b);
    }
}

TEST_CASE("beating chang suite passes") {
    auto r = suite_beating_chang();
    CHECK(r.passed());
    CHECK(r.cases == 3);
}

TEST_CASE("restriction expectation on AND_2") {
    auto f = BooleanFunction::from_string(2, "+++-");
    auto e = restriction_expectation(f, {Mask(1)});
    CHECK(e.mean_delta == Rational(1, 4));
    CHECK(e.ell == 2);
    CHECK(e.any_nonconstant);
}

TEST_CASE("plot data") {
    std::ostringstream os;
    write_plotdata(os, PlotKind::KdPrime, 16, 4096, 5);
    std::string s = os.str();
    CHECK(s.rfind("x,kline,curve,cl_curve\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 6);
    CHECK_THROWS(write_plotdata(os, PlotKind::KPrime, 16, 1, 5));
}
