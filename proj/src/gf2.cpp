#include "boolspec/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "boolspec/config.hpp"
#include "boolspec/core.hpp"
#include "boolspec/errors.hpp"

namespace boolspec {

bool Gf2Basis::insert(Mask m) {
    m = reduce(m);
    if (m == 0) return false;
    int p = highest_bit(m);
    // keep rows ordered by pivot, descending
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](Mask r) { return highest_bit(r) < p; });
    rows_.insert(pos, m);
    pivots_ |= bit(p);
    pivot_row_.fill(-1);
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[highest_bit(rows_[i])] = static_cast<int>(i);
    return true;
}

Mask Gf2Basis::reduce(Mask m) const {
    for (Mask r : rows_)
        if (test_bit(m, highest_bit(r))) m ^= r;
    return m;
}

int rank_of(const std::vector<Mask>& masks) {
    Gf2Basis b;
    for (auto m : masks) b.insert(m);
    return b.dim();
}

Mask reduce_mod(const Gf2Basis& span, Mask m) { return span.reduce(m); }

namespace {

void check_search(int n, int d, const char* what) {
    if (n < 0 || n > kExactSearchGuard)
        throw SizeGuard(std::string(what) + ": n=" + std::to_string(n) + " exceeds exact-search guard " +
                        std::to_string(kExactSearchGuard));
    if (d < 0 || d > n) throw OutOfRange(std::string(what) + ": need 0 <= d <= n");
}

}  // namespace

void for_each_linear_subspace(int n, int d,
                              const std::function<bool(const std::vector<Mask>&, Mask)>& visit) {
    check_search(n, d, "for_each_linear_subspace");
    const std::uint32_t full = (1u << n) - 1;
    std::vector<Mask> rows(d);
    std::vector<int> piv(d);
    std::vector<std::vector<int>> slots(d);
    for (std::uint32_t P = 0; P <= full; ++P) {
        if (std::popcount(P) != d) continue;
        // pivots in descending order; row i may use non-pivot columns below its pivot
        int k = 0;
        for (int c = n - 1; c >= 0; --c)
            if ((P >> c) & 1) piv[k++] = c;
        int total = 0;
        for (int i = 0; i < d; ++i) {
            slots[i].clear();
            for (int c = 0; c < piv[i]; ++c)
                if (!((P >> c) & 1)) slots[i].push_back(c);
            total += static_cast<int>(slots[i].size());
        }
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << total); ++v) {
            int used = 0;
            for (int i = 0; i < d; ++i) {
                Mask r = bit(piv[i]);
                for (int c : slots[i]) {
                    if ((v >> used) & 1) r |= bit(c);
                    ++used;
                }
                rows[i] = r;
            }
            if (!visit(rows, Mask(P))) return;
        }
    }
}

void for_each_affine_subspace(int n, int d, const std::function<bool(const AffineSubspace&)>& visit) {
    AffineSubspace a;
    for_each_linear_subspace(n, d, [&](const std::vector<Mask>& rref, Mask pivots) {
        a.basis = rref;
        const Mask nonpivot = low_bits(n) & ~pivots;
        for (std::uint64_t o = 0; o < (std::uint64_t(1) << (n - d)); ++o) {
            a.offset = scatter_bits(o, nonpivot);
            if (!visit(a)) return false;
        }
        return true;
    });
}

std::vector<AffineSubspace> enumerate_affine_subspaces(int n, int d) {
    std::vector<AffineSubspace> out;
    for_each_affine_subspace(n, d, [&](const AffineSubspace& a) {
        out.push_back(a);
        return true;
    });
    return out;
}

RestrictionMap dual_constraints(const std::vector<Mask>& W, Mask u, int n) {
    // Fully reduced echelon form of W (highest-bit pivots).
    std::vector<Mask> rows;
    for (Mask w : W) {
        for (Mask r : rows)
            if (test_bit(w, highest_bit(r))) w ^= r;
        if (w == 0) throw DependentMasks("dual_constraints: W is not independent");
        int p = highest_bit(w);
        for (Mask& r : rows)
            if (test_bit(r, p)) r ^= w;
        rows.push_back(w);
    }
    Mask pivots = 0;
    for (Mask r : rows) pivots |= bit(highest_bit(r));

    std::vector<Mask> gamma;
    std::vector<int> b;
    for (int j = 0; j < n; ++j) {
        if (test_bit(pivots, j)) continue;
        Mask g = bit(j);
        for (Mask r : rows)
            if (test_bit(r, j)) g |= bit(highest_bit(r));
        gamma.push_back(g);
        b.push_back(parity(g & u) ? -1 : 1);
    }
    return RestrictionMap(n, std::move(gamma), std::move(b));
}

}  // namespace boolspec
