#include <random>
#include <set>

#include "doctest.h"

#include "boolspec/core.hpp"
#include "boolspec/gf2.hpp"
#include "boolspec/harness.hpp"

using namespace boolspec;

namespace {

// Gaussian binomial [n choose d]_2.
std::uint64_t gaussian_binomial(int n, int d) {
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < d; ++i) {
        num *= (std::uint64_t(1) << (n - i)) - 1;
        den *= (std::uint64_t(1) << (i + 1)) - 1;
    }
    return num / den;
}

}  // namespace

TEST_CASE("basis insert, reduce, rank") {
    Gf2Basis b;
    CHECK(b.insert(Mask(0b011)));
    CHECK(b.insert(Mask(0b110)));
    CHECK_FALSE(b.insert(Mask(0b101)));
    CHECK(b.dim() == 2);
    CHECK(b.contains(Mask(0b101)));
    CHECK_FALSE(b.contains(Mask(0b001)));
    CHECK(rank_of({Mask(1), Mask(2), Mask(3), bit(120)}) == 3);
    CHECK(rank_of({}) == 0);
}

TEST_CASE("linear subspace counts are Gaussian binomials") {
    for (int n = 0; n <= 5; ++n)
        for (int d = 0; d <= n; ++d) {
            std::uint64_t count = 0;
            std::set<std::vector<std::uint64_t>> seen;
            for_each_linear_subspace(n, d, [&](const std::vector<Mask>& rref, Mask) {
                ++count;
                CHECK(rank_of(rref) == d);
                // canonical span listing
                std::vector<std::uint64_t> span;
                for (std::uint64_t c = 0; c < (std::uint64_t(1) << d); ++c) {
                    Mask v = 0;
                    for (int i = 0; i < d; ++i)
                        if ((c >> i) & 1) v ^= rref[i];
                    span.push_back(static_cast<std::uint64_t>(v));
                }
                std::sort(span.begin(), span.end());
                CHECK(seen.insert(span).second);
                return true;
            });
            CHECK(count == gaussian_binomial(n, d));
        }
}

TEST_CASE("affine subspace count is 2^(n-d) times the Gaussian binomial") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= n; ++d)
            CHECK(enumerate_affine_subspaces(n, d).size() == (gaussian_binomial(n, d) << (n - d)));
}

TEST_CASE("dual constraints cut out exactly the affine subspace") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int d = static_cast<int>(rng() % (n + 1));
        auto W = random_independent(n, d, rng);
        Mask u = Mask(rng()) & low_bits(n);
        auto r = dual_constraints(W, u, n);
        CHECK(static_cast<int>(r.gamma().size()) == n - d);
        Gf2Basis span(W);
        for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x)
            CHECK(r.contains(Mask(x)) == span.contains(Mask(x) ^ u));
    }
}
