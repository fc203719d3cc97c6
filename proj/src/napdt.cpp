#include "boolspec/napdt.hpp"

#include <algorithm>
#include <bit>

#include "boolspec/config.hpp"
#include "boolspec/errors.hpp"
#include "boolspec/gf2.hpp"
#include "boolspec/measures.hpp"

namespace boolspec {

MonochromaticResult max_monochromatic(const BooleanFunction& f) {
    const int n = f.arity();
    if (n > kExactSearchGuard)
        throw SizeGuard("max_monochromatic: n=" + std::to_string(n) + " exceeds exact-search guard");
    const std::uint64_t size = f.size();
    const std::uint64_t w = f.weight();
    const std::uint64_t largest = std::max(w, size - w);
    int dmax = 63 - std::countl_zero(largest);  // 2^d points must share a value

    std::vector<std::uint8_t> state;
    for (int d = dmax; d >= 0; --d) {
        std::optional<MonochromaticResult> found;
        for_each_linear_subspace(n, d, [&](const std::vector<Mask>& rref, Mask pivots) {
            const Mask nonpivot = low_bits(n) & ~pivots;
            state.assign(std::size_t(1) << (n - d), 0);
            for (std::uint64_t x = 0; x < size; ++x) {
                Mask rep = Mask(x);
                for (Mask r : rref)
                    if (test_bit(rep, highest_bit(r))) rep ^= r;
                state[gather_bits(rep, nonpivot)] |= f.minus(x) ? 2 : 1;
            }
            for (std::size_t o = 0; o < state.size(); ++o)
                if (state[o] != 3) {
                    found.emplace(MonochromaticResult{d, dual_constraints(rref, scatter_bits(o, nonpivot), n)});
                    return false;
                }
            return true;
        });
        if (found) return *found;
    }
    throw Error("max_monochromatic: no monochromatic point found");  // unreachable
}

GreedyChoice greedy_step(const BooleanFunction& f) {
    if (f.is_constant()) throw Error("greedy_step: function is constant");
    const auto s = wht(f);
    std::uint64_t best = 0;
    std::int64_t best_mag = -1;
    for (std::uint64_t m = 1; m < s.size(); ++m) {
        std::int64_t mag = s.coeffs[m] < 0 ? -s.coeffs[m] : s.coeffs[m];
        if (mag > best_mag) {
            best_mag = mag;
            best = m;
        }
    }
    const int n = f.arity();
    auto plus = restrict(f, RestrictionMap(n, {Mask(best)}, {1}));
    auto minus = restrict(f, RestrictionMap(n, {Mask(best)}, {-1}));
    return {Mask(best), minus.weight() < plus.weight() ? -1 : 1};
}

namespace {

// Step (a): parities, in fmin's coordinates, whose fixing makes fmin constant.
std::vector<Mask> step_a(const BooleanFunction& fmin, NapdtMode mode) {
    if (mode == NapdtMode::Exact) return max_monochromatic(fmin).map.gamma();
    std::vector<Mask> gamma;
    std::vector<int> signs;
    BooleanFunction g = fmin;
    while (!g.is_constant()) {
        RestrictionMap current(fmin.arity(), gamma, signs);
        auto choice = greedy_step(g);
        gamma.push_back(current.lift(choice.mask));
        signs.push_back(choice.sign);
        g = restrict(fmin, RestrictionMap(fmin.arity(), gamma, signs));
    }
    return gamma;
}

struct Candidate {
    std::vector<int> b;
    Rational delta;
    std::int64_t k = 0;
    std::int64_t kplus = 0;
    BooleanFunction g;
};

}  // namespace

NapdtTrace napdt(const BooleanFunction& f, NapdtMode mode) {
    const int n = f.arity();
    if (mode == NapdtMode::Exact && n > kExactSearchGuard)
        throw SizeGuard("napdt exact mode: n=" + std::to_string(n) + " exceeds exact-search guard");

    NapdtTrace trace;
    trace.mode = mode;
    trace.n = n;
    const auto spec = to_sparse(wht(f));
    const auto prof = profile(spec);
    const Rational k(prof.k);
    const Rational delta = prof.delta;
    const Rational kd4 = Rational(4) * k * delta;
    trace.ell0 = prof.k;

    std::vector<Mask> gamma;
    std::vector<int> bstar;
    BooleanFunction fmin = f;
    std::int64_t ell_prev = trace.ell0;

    while (!fmin.is_constant()) {
        const RestrictionMap here(n, gamma, bstar);
        const auto added = step_a(fmin, mode);
        for (Mask m : added) gamma.push_back(here.lift(m));
        if (static_cast<int>(gamma.size()) > kAssignmentGuard)
            throw SizeGuard("napdt: |gamma| exceeds assignment guard");

        NapdtIteration it;
        it.q = static_cast<int>(added.size());
        it.ell = coset_count(spec, gamma);
        it.ell_decreased = it.ell < ell_prev;
        const Rational ell2 = Rational(it.ell) * Rational(it.ell);
        const Rational lemma_rhs = kd4 / ell2;

        const auto parts = restrict_all(f, gamma);
        const int m = static_cast<int>(gamma.size());
        std::optional<Candidate> best;
        it.main_lemma_exists = false;
        bool any_nonconstant = false;
        for (std::uint64_t lex = 0; lex < (std::uint64_t(1) << m); ++lex) {
            // b_1 is the most significant position; +1 sorts before -1
            std::size_t code = 0;
            std::vector<int> b(m);
            for (int i = 0; i < m; ++i) {
                bool neg = (lex >> (m - 1 - i)) & 1;
                b[i] = neg ? -1 : 1;
                if (neg) code |= std::size_t(1) << i;
            }
            const auto& g = parts[code];
            if (g.is_constant()) continue;
            any_nonconstant = true;
            auto gs = to_sparse(wht(g));
            Candidate c{b, Rational::dyadic(static_cast<std::int64_t>(g.weight()), g.arity()),
                        static_cast<std::int64_t>(gs.size()), nonempty_sparsity(gs), g};
            if (c.delta / Rational(c.kplus) <= lemma_rhs) it.main_lemma_exists = true;
            if (!best || c.delta / Rational(c.k) < best->delta / Rational(best->k)) best = std::move(c);
        }
        if (!any_nonconstant) it.main_lemma_exists = true;

        if (mode == NapdtMode::Exact) {
            // (q ell_prev)^2 <= 36 (ell_prev - ell)^2 delta k
            Rational lhs = Rational(it.q) * Rational(ell_prev);
            Rational gap = Rational(ell_prev - it.ell);
            it.qi_bound = it.ell_decreased && lhs * lhs <= Rational(36) * gap * gap * delta * k;
        }

        if (best) {
            it.b_star = best->b;
            it.delta_fmin = best->delta;
            it.k_fmin = best->k;
            it.kplus_fmin = best->kplus;
            it.main_lemma_chosen = best->delta / Rational(best->k) <= lemma_rhs;
            bstar = best->b;
            fmin = best->g;
        } else {
            bstar.assign(gamma.size(), 1);
            fmin = parts[0];
        }
        trace.iterations.push_back(it);
        ell_prev = it.ell;
    }

    trace.gamma = gamma;
    trace.all_constant = true;
    for (const auto& g : restrict_all(f, gamma))
        if (!g.is_constant()) trace.all_constant = false;
    return trace;
}

}  // namespace boolspec
