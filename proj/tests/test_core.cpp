#include <random>

#include "doctest.h"

#include "boolspec/core.hpp"
#include "boolspec/errors.hpp"
#include "boolspec/gf2.hpp"
#include "boolspec/harness.hpp"

using namespace boolspec;

namespace {

// O(4^n) transform straight from the definition.
std::vector<std::int64_t> naive_wht(const BooleanFunction& f) {
    std::vector<std::int64_t> c(f.size(), 0);
    for (std::uint64_t s = 0; s < f.size(); ++s)
        for (std::uint64_t x = 0; x < f.size(); ++x)
            c[s] += f.value(x) * ((__builtin_popcountll(s & x) & 1) ? -1 : 1);
    return c;
}

int naive_degree(const BooleanFunction& f) {
    // ANF coefficient of monomial m is the XOR of f over subsets of m
    int deg = -1;
    for (std::uint64_t m = 0; m < f.size(); ++m) {
        int acc = 0;
        for (std::uint64_t x = 0; x < f.size(); ++x)
            if ((x & ~m) == 0) acc ^= f.minus(x);
        if (acc) deg = std::max(deg, __builtin_popcountll(m));
    }
    return std::max(deg, 0);
}

}  // namespace

TEST_CASE("truth table string round trip") {
    auto f = BooleanFunction::from_string(3, "+--+-++-");
    CHECK(f.to_string() == "+--+-++-");
    CHECK(f.weight() == 4);
    CHECK_FALSE(f.is_constant());
    CHECK(BooleanFunction(3).is_constant());
    CHECK_THROWS_AS(BooleanFunction::from_string(2, "+-+"), ParseError);
}

TEST_CASE("wht matches the definition") {
    std::mt19937_64 rng(7);
    for (int n = 0; n <= 7; ++n)
        for (int i = 0; i < 5; ++i) {
            auto f = random_function(n, rng);
            auto s = wht(f);
            CHECK(s.coeffs == naive_wht(f));
            CHECK(wht_serial(f).coeffs == s.coeffs);
            CHECK(inverse_wht(s) == f);
        }
}

TEST_CASE("parallel butterflies match serial above the threading cutoff") {
    std::mt19937_64 rng(3);
    auto f = random_function(16, rng);
    CHECK(wht(f).coeffs == wht_serial(f).coeffs);
}

TEST_CASE("inverse rejects non-Boolean spectra") {
    Spectrum s{2, {4, 4, 0, 0}};
    CHECK_THROWS_AS(inverse_wht(s), NotBoolean);
}

TEST_CASE("parity 1 xor 2 has a single coefficient") {
    auto f = BooleanFunction::from_string(2, "+--+");
    auto s = wht(f);
    CHECK(s.coeffs == std::vector<std::int64_t>{0, 0, 0, 4});
}

TEST_CASE("f2 degree matches ANF") {
    std::mt19937_64 rng(11);
    for (int n = 0; n <= 6; ++n)
        for (int i = 0; i < 10; ++i) {
            auto f = random_function(n, rng);
            CHECK(f2_degree(f) == naive_degree(f));
        }
}

TEST_CASE("restrict agrees with restrict_all and with pointwise evaluation") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        auto f = random_function(n, rng);
        auto gamma = random_independent(n, static_cast<int>(rng() % (n + 1)), rng);
        auto parts = restrict_all(f, gamma);
        REQUIRE(parts.size() == (std::size_t(1) << gamma.size()));
        for (std::uint64_t a = 0; a < parts.size(); ++a) {
            std::vector<int> b;
            for (std::size_t i = 0; i < gamma.size(); ++i) b.push_back(((a >> i) & 1) ? -1 : 1);
            RestrictionMap r(n, gamma, b);
            auto g = restrict(f, r);
            CHECK(g == parts[a]);
            for (std::uint64_t z = 0; z < g.size(); ++z) {
                Mask x = r.solve(z);
                CHECK(r.contains(x));
                CHECK(gather_bits(x, r.free_mask()) == z);
                CHECK(g.minus(z) == f.minus(static_cast<std::uint64_t>(x)));
                for (std::size_t i = 0; i < gamma.size(); ++i)
                    CHECK((parity(x & gamma[i]) ? -1 : 1) == b[i]);
            }
        }
    }
}

TEST_CASE("dependent restriction masks are rejected") {
    CHECK_THROWS_AS(RestrictionMap(3, {Mask(3), Mask(5), Mask(6)}, {1, 1, 1}), DependentMasks);
}

TEST_CASE("xor power of AND_1 is parity") {
    auto f = BooleanFunction::from_string(1, "+-");
    auto g = xor_power(f, 3);
    CHECK(g.to_string() == "+--+-++-");
}

TEST_CASE("basis change equals substitution by the inverse transpose") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        auto f = random_function(n, rng);
        auto cols = random_independent(n, n, rng);
        auto g = inverse_wht(basis_change(wht(f), cols));
        // g(y) = f(M y) where M = (B^-1)^T: <B a, M y> = <a, y>
        // find M column by column: M e_j is the x with <cols[i], x> = [i == j]
        std::vector<Mask> m(n);
        for (int j = 0; j < n; ++j) {
            for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x) {
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) ok = parity(cols[i] & Mask(x)) == (i == j);
                if (ok) {
                    m[j] = x;
                    break;
                }
            }
        }
        for (std::uint64_t y = 0; y < g.size(); ++y) {
            Mask x = 0;
            for (int j = 0; j < n; ++j)
                if ((y >> j) & 1) x ^= m[j];
            CHECK(g.minus(y) == f.minus(static_cast<std::uint64_t>(x)));
        }
    }
    CHECK_THROWS_AS(basis_change(wht(BooleanFunction(2)), {Mask(1), Mask(1)}), SingularMatrix);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::dyadic(12, 4) == Rational(3, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("mask helpers") {
    Mask m = bit(100) | bit(3);
    CHECK(popcount(m) == 2);
    CHECK(highest_bit(m) == 100);
    CHECK(lowest_bit(m) == 3);
    CHECK(parse_hex(to_hex(m)) == m);
    CHECK(gather_bits(Mask(0b101101), Mask(0b001110)) == 0b110);
    CHECK(scatter_bits(0b110, Mask(0b001110)) == Mask(0b001100));
}
