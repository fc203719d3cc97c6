#include "boolspec/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "boolspec/bounds.hpp"
#include "boolspec/config.hpp"
#include "boolspec/constructions.hpp"
#include "boolspec/errors.hpp"
#include "boolspec/gf2.hpp"
#include "boolspec/measures.hpp"
#include "boolspec/napdt.hpp"

namespace boolspec {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string num(const Rational& r) { return r.str(); }

std::string num(std::int64_t v) { return std::to_string(v); }

struct Timer {
    SuiteResult& r;
    Clock::time_point start = Clock::now();
    explicit Timer(SuiteResult& res) : r(res) {}
    ~Timer() { r.seconds = std::chrono::duration<double>(Clock::now() - start).count(); }
};

bool is_pow2(std::int64_t k) { return k > 0 && (k & (k - 1)) == 0; }

// lhs <= c log2(k), exact when k is a power of two
bool leq_c_log2(const Rational& lhs, double c, std::int64_t k) {
    if (is_pow2(k)) return lhs <= Rational(static_cast<std::int64_t>(c)) * Rational(63 - __builtin_clzll(k));
    return lhs.to_long_double() <= c * std::log2(static_cast<long double>(k));
}

void check_profile(SuiteResult& res, const std::string& id, const SpectralProfile& p, const Rational& delta,
                   std::int64_t k, int r, const Rational& kp, const Rational& kdp) {
    res.expect(p.delta == delta, id, "delta", num(p.delta), num(delta));
    res.expect(p.k == k, id, "k", num(p.k), num(k));
    res.expect(p.r == r, id, "r", num(std::int64_t(p.r)), num(std::int64_t(r)));
    res.expect(p.kprime == kp, id, "kprime", num(p.kprime), num(kp));
    res.expect(p.kdprime == kdp, id, "kdprime", num(p.kdprime), num(kdp));
}

bool in_sandwich(double v, double target, double factor) { return v >= target / factor && v <= target * factor; }

int ilog2(std::int64_t x) { return 63 - __builtin_clzll(static_cast<unsigned long long>(x)); }

}  // namespace

std::string function_id(const BooleanFunction& f) {
    if (f.arity() > 6) return "n=" + std::to_string(f.arity()) + ":w=" + std::to_string(f.weight());
    std::ostringstream os;
    os << "n=" << f.arity() << ":0x" << std::hex << f.words()[0];
    return os.str();
}

BooleanFunction random_function(int n, std::mt19937_64& rng) {
    return BooleanFunction::from_predicate(n, [&](std::uint64_t) { return (rng() >> 63) != 0; });
}

BooleanFunction function_from_index(int n, std::uint64_t index) {
    return BooleanFunction::from_predicate(n, [&](std::uint64_t x) { return (index >> x) & 1; });
}

std::vector<Mask> random_independent(int n, int count, std::mt19937_64& rng) {
    Gf2Basis span;
    std::vector<Mask> out;
    while (static_cast<int>(out.size()) < count) {
        Mask m = Mask(rng()) & low_bits(n);
        if (span.insert(m)) out.push_back(m);
    }
    return out;
}

RestrictionExpectation restriction_expectation(const BooleanFunction& f, const std::vector<Mask>& gamma) {
    RestrictionExpectation e;
    auto parts = restrict_all(f, gamma);
    Rational sum_delta(0), sum_kplus(0);
    for (const auto& g : parts) {
        sum_delta += Rational::dyadic(static_cast<std::int64_t>(g.weight()), g.arity());
        sum_kplus += Rational(nonempty_sparsity(to_sparse(wht(g))));
        if (!g.is_constant()) e.any_nonconstant = true;
    }
    const Rational count(static_cast<std::int64_t>(parts.size()));
    e.mean_delta = sum_delta / count;
    e.mean_kplus = sum_kplus / count;
    e.ell = coset_count(to_sparse(wht(f)), gamma);
    return e;
}

// ---------------------------------------------------------------- core

SuiteResult suite_core(const SuiteOptions& o) {
    SuiteResult res;
    res.name = "core";
    Timer timer(res);
    std::mt19937_64 rng(o.seed);

    auto per_function = [&](const BooleanFunction& f) {
        ++res.cases;
        const std::string id = function_id(f);
        const int n = f.arity();
        const auto s = wht(f);
        res.expect(s.coeffs == wht_serial(f).coeffs, id, "wht_parallel_equals_serial");
        __int128 sq = 0;
        for (auto c : s.coeffs) sq += __int128(c) * c;
        res.expect(sq == (__int128(1) << (2 * n)), id, "parseval");
        bool parity_ok = true;
        for (auto c : s.coeffs) parity_ok &= ((c - (std::int64_t(1) << n)) % 2 == 0);
        res.expect(parity_ok, id, "coefficient_parity");
        res.expect(s.coeffs[0] == (std::int64_t(1) << n) - 2 * static_cast<std::int64_t>(f.weight()), id,
                   "c_empty_vs_weight");
        res.expect(inverse_wht(s) == f, id, "inverse_roundtrip");

        const auto sp = to_sparse(s);
        auto p = profile(f);
        p.degf2 = f2_degree(f);
        // constants and +-parities (k = 1) are outside the claims' scope
        if (p.degenerate) return;
        res.expect((std::int64_t(1) << *p.degf2) <= p.k, id, "f2deg_vs_logk", num(std::int64_t(*p.degf2)), num(p.k));
        res.expect(Rational(p.k) * p.delta >= Rational(1), id, "k_delta_at_least_1", num(Rational(p.k) * p.delta), "1");

        // granularity: |c_S| 2^(floor(log2 k) - 1) divisible by 2^n
        const int L = ilog2(p.k);
        bool gran = true;
        for (const auto& t : sp.terms) {
            Rational q = t.value.abs() / pow2(1 - L);
            gran &= q.is_integer();
        }
        res.expect(gran, id, "granularity");

        // ranges of k, k', k'' relative to each other
        res.expect(p.r < 63 && (std::int64_t(1) << p.r) >= p.k, id, "logk_le_r", num(p.k), num(std::int64_t(p.r)));
        res.expect(p.kprime * p.kprime >= Rational(p.k), id, "sqrtk_le_kprime", num(p.kprime), num(p.k));
        res.expect(p.kprime <= Rational(p.k, 2), id, "kprime_le_k_half", num(p.kprime), num(p.k));
        res.expect(p.kdprime <= p.kprime, id, "kdprime_le_kprime", num(p.kdprime), num(p.kprime));
        res.expect(p.kdprime * p.kdprime >= Rational(p.r), id, "sqrtr_le_kdprime", num(p.kdprime), num(std::int64_t(p.r)));
        res.expect(leq_c_log2(Rational(p.r) / p.kdprime, 4, p.k), id, "r_over_4logk_le_kdprime", num(p.kdprime),
                   num(std::int64_t(p.r)));

        // k'' is the first threshold whose span reaches r
        for (const auto& step : threshold_dims(sp)) {
            if (step.t < p.kdprime) res.expect(step.dim < p.r, id, "kdprime_step_below", num(step.t), num(std::int64_t(step.dim)));
            if (step.t == p.kdprime) res.expect(step.dim == p.r, id, "kdprime_step_at", num(step.t), num(std::int64_t(step.dim)));
        }

        for (const auto& v : verify_inequalities(sp, p.degf2))
            if (!v.skipped) res.expect(v.pass, id, v.name, num(v.lhs), num(v.rhs));
    };

    for (int n = 0; n <= std::min(o.max_n, 4); ++n) {
        const std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << n);
        for (std::uint64_t i = 0; i < total; ++i) per_function(function_from_index(n, i));
    }
    for (int n = 5; n <= o.max_n; ++n)
        for (int i = 0; i < o.samples; ++i) per_function(random_function(n, rng));

    // restriction expectations on seeded (f, Gamma) pairs, n <= 4
    for (int i = 0; i < o.samples; ++i) {
        const int n = 1 + static_cast<int>(rng() % 4);
        auto f = random_function(n, rng);
        auto gamma = random_independent(n, static_cast<int>(rng() % (n + 1)), rng);
        auto e = restriction_expectation(f, gamma);
        const auto p = profile(f);
        const std::string id = function_id(f) + ":|gamma|=" + std::to_string(gamma.size());
        ++res.cases;
        res.expect(e.mean_delta == p.delta, id, "restriction_mean_delta", num(e.mean_delta), num(p.delta));
        // the bound needs at least two coset classes
        if (e.ell >= 2) {
            Rational rhs = Rational(e.ell) * Rational(e.ell) / (Rational(4) * Rational(p.k));
            res.expect(e.mean_kplus >= rhs, id, "restriction_mean_kplus", num(e.mean_kplus), num(rhs));
        }
    }

    // xor_power tensor law, n <= 3, t <= 3
    for (int i = 0; i < o.samples; ++i) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int t = 1 + static_cast<int>(rng() % 3);
        auto f = random_function(n, rng);
        auto F = xor_power(f, t);
        const auto fs = wht(f), Fs = wht(F);
        bool ok = true;
        for (std::uint64_t m = 0; m < Fs.size() && ok; ++m) {
            Rational prod(1);
            for (int j = 0; j < t; ++j) prod *= fs.fhat((m >> (j * n)) & (fs.size() - 1));
            ok = Fs.fhat(m) == prod;
        }
        ++res.cases;
        res.expect(ok, function_id(f) + ":t=" + std::to_string(t), "xor_power_tensor");
    }

    // basis change: Booleanity and F2-degree preserved
    for (int i = 0; i < o.samples; ++i) {
        const int n = 1 + static_cast<int>(rng() % 4);
        auto f = random_function(n, rng);
        auto cols = random_independent(n, n, rng);
        const std::string id = function_id(f);
        ++res.cases;
        try {
            auto g = inverse_wht(basis_change(wht(f), cols));
            res.expect(f2_degree(g) == f2_degree(f), id, "basis_change_degree", num(std::int64_t(f2_degree(g))),
                       num(std::int64_t(f2_degree(f))));
        } catch (const NotBoolean& e) {
            res.fail(id, "basis_change_boolean", e.what(), "");
        }
    }

    // sum_b prod_{i in S} b_i = 0 for nonempty S
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t S = 1; S < (std::uint64_t(1) << n); ++S) {
            std::int64_t sum = 0;
            for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) sum += (std::popcount(b & S) & 1) ? -1 : 1;
            ++res.cases;
            res.expect(sum == 0, "n=" + std::to_string(n) + ":S=" + to_hex(Mask(S)), "indicator_orthogonality", num(sum), "0");
        }
    return res;
}

// ---------------------------------------------------------------- tables

SuiteResult suite_tables(const SuiteOptions&) {
    SuiteResult res;
    res.name = "tables";
    Timer timer(res);
    auto check = [&](const FamilySpec& s, const Rational& d, std::int64_t k, int r, const Rational& kp,
                     const Rational& kdp) {
        ++res.cases;
        check_profile(res, s.label(), measure(s), d, k, r, kp, kdp);
    };

    // AND, bent and addressing rows
    for (int n = 2; n <= 6; ++n) check(FamilySpec::and_n(n), Rational::dyadic(1, n), std::int64_t(1) << n, n,
                                       Rational(std::int64_t(1) << (n - 1)), Rational(std::int64_t(1) << (n - 1)));
    for (int n = 2; n <= 8; n += 2) {
        auto s = FamilySpec::bent_ip(n);
        auto p = profile(make(s));
        ++res.cases;
        Rational mag = pow2(n / 2);
        res.expect(p.k == (std::int64_t(1) << n), s.label(), "k", num(p.k), num(std::int64_t(1) << n));
        res.expect(p.r == n, s.label(), "r");
        res.expect(p.kprime == mag && p.kdprime == mag, s.label(), "kprime=kdprime=2^(n/2)", num(p.kprime), num(mag));
    }
    for (int t : {2, 4, 8}) {
        const int L = ilog2(t);
        check(FamilySpec::addressing(t), Rational(1, 2), std::int64_t(t) * t, t + L, Rational(t), Rational(t));
    }

    // AD_{t,t'}: r = t log t' + log t, k = 1 + t^2 (t'-1), k' = k'' = t t'/2, delta = 1/t'
    for (auto [t, tp] : {std::pair{2, 8}, {4, 8}, {2, 16}, {4, 16}, {8, 8}}) {
        check(FamilySpec::ad_tt(t, tp), Rational(1, tp), 1 + std::int64_t(t) * t * (tp - 1), t * ilog2(tp) + ilog2(t),
              Rational(t * tp, 2), Rational(t * tp, 2));
    }
    // AD_{t,t',a}: r = (t-1) log t' + log a + log t, k = (t-1)(t'-1)t + t a, k' = k'' = t a/2,
    // delta = 1/t' + 1/(a t) - 1/(t t')
    for (auto [t, tp, a] : {std::tuple{4, 4, 8}, {2, 4, 8}, {4, 2, 4}, {2, 2, 16}, {4, 4, 16}, {8, 2, 8}}) {
        Rational d = Rational(1, tp) + Rational(1, a * t) - Rational(1, t * tp);
        check(FamilySpec::ad_tta(t, tp, a), d, std::int64_t(t - 1) * (tp - 1) * t + std::int64_t(t) * a,
              (t - 1) * ilog2(tp) + ilog2(a) + ilog2(t), Rational(t * a, 2), Rational(t * a, 2));
    }
    // AB: r = log t' + log l, k = t'/2 + l t'/2, k' = k'' = t' sqrt(l)/2, delta = 1/t'
    // AAB: k = 1 + t^2 (k(AB) - 1), k' = k'' = t t' sqrt(l)/2
    for (auto [tp, ell] : {std::pair{8, 4}, {4, 4}, {4, 16}, {16, 4}, {8, 16}}) {
        const int sl = 1 << (ilog2(ell) / 2);
        const std::int64_t kab = tp / 2 + std::int64_t(ell) * tp / 2;
        check(FamilySpec::ab(tp, ell), Rational(1, tp), kab, ilog2(tp) + ilog2(ell), Rational(tp * sl, 2),
              Rational(tp * sl, 2));
        for (int t : {2, 4}) {
            auto s = FamilySpec::aab(t, tp, ell);
            check(s, Rational(1, tp), 1 + std::int64_t(t) * t * (kab - 1), t * (ilog2(tp) + ilog2(ell)) + ilog2(t),
                  Rational(t * tp * sl, 2), Rational(t * tp * sl, 2));
        }
        const std::int64_t claimed = 1 + tp / 2 + std::int64_t(ell) * tp / 2;
        res.notes.push_back("AB(" + std::to_string(tp) + "," + std::to_string(ell) + "): measured k = " +
                            std::to_string(kab) + ", stated closed form 1 + t'/2 + l t'/2 = " + std::to_string(claimed));
    }
    // mAD: r and delta exact, k and k'' in the factor-8 sandwich
    for (auto [t, tp, p] : {std::tuple{4, 4, 2}, {4, 4, 6}, {4, 8, 3}, {8, 4, 5}, {2, 8, 3}, {8, 2, 7}}) {
        auto s = FamilySpec::mad(t, tp, p);
        if (arity(s) > arity_guard()) continue;
        auto pr = profile(make(s));
        ++res.cases;
        const std::string id = s.label();
        res.expect(pr.r == t * ilog2(tp) + ilog2(t), id, "r", num(std::int64_t(pr.r)));
        res.expect(pr.delta == Rational(1, tp), id, "delta", num(pr.delta), num(Rational(1, tp)));
        const double ktarget = std::ldexp(double(t) * tp, p) + double(t) * t * tp;
        res.expect(in_sandwich(double(pr.k), ktarget, 8), id, "k_sandwich", num(pr.k), num(ktarget));
        res.expect(in_sandwich(pr.kdprime.to_double(), double(t) * tp, 8), id, "kdprime_sandwich", num(pr.kdprime),
                   num(double(t) * tp));
    }
    // closed forms agree with the transform
    for (const auto& s : {FamilySpec::ad_tt(4, 8), FamilySpec::ad_tta(4, 4, 8), FamilySpec::aab(2, 8, 4),
                          FamilySpec::mand(8, 3), FamilySpec::ab(8, 4)}) {
        ++res.cases;
        auto a = closed_form_spectrum(s);
        auto b = to_sparse(wht(make(s)));
        bool same = a.terms.size() == b.terms.size();
        for (std::size_t i = 0; same && i < a.terms.size(); ++i)
            same = a.terms[i].mask == b.terms[i].mask && a.terms[i].value == b.terms[i].value;
        res.expect(same, s.label(), "closed_form_equals_wht");
    }
    return res;
}

// ---------------------------------------------------------------- composition

namespace {

bool composition_condition(const SparseSpectrum& g) {
    const Rational e = g.at(0).abs();
    if (e.is_zero()) return false;
    for (const auto& t : g.terms)
        if (t.mask != 0 && t.value.abs() <= e) return true;
    return false;
}

}  // namespace

SuiteResult suite_composition(const SuiteOptions& o) {
    SuiteResult res;
    res.name = "composition";
    Timer timer(res);
    std::mt19937_64 rng(o.seed);
    const int instances = std::max(o.samples, 200);
    int done = 0;
    while (done < instances) {
        const int t = (rng() & 1) ? 4 : 2;
        const int m = 1 + static_cast<int>(rng() % 4);
        auto g = random_function(m, rng);
        if (g.is_constant()) continue;
        const auto gs = to_sparse(wht(g));
        if (!composition_condition(gs)) continue;
        ++done;
        ++res.cases;
        const auto pg = profile(g);
        const auto pf = profile(make(FamilySpec::composed(t, g)));
        const std::string id = function_id(g) + ":t=" + std::to_string(t);
        const int L = ilog2(t);
        res.expect(pf.r == t * pg.r + L, id, "rank", num(std::int64_t(pf.r)), num(std::int64_t(t * pg.r + L)));
        const std::int64_t k = 1 + std::int64_t(t) * t * (pg.k - 1);
        res.expect(pf.k == k, id, "sparsity", num(pf.k), num(k));
        res.expect(pf.kprime == Rational(t) * pg.kprime, id, "kprime", num(pf.kprime), num(Rational(t) * pg.kprime));
        res.expect(pf.kdprime == Rational(t) * pg.kdprime, id, "kdprime", num(pf.kdprime), num(Rational(t) * pg.kdprime));
        res.expect(pf.delta == pg.delta, id, "weight", num(pf.delta), num(pg.delta));
    }
    return res;
}

// ---------------------------------------------------------------- napdt

namespace {

void check_trace(SuiteResult& res, const BooleanFunction& f, const NapdtTrace& tr, bool exact) {
    const std::string id = function_id(f) + (exact ? ":exact" : ":greedy");
    const auto p = profile(f);
    res.expect(tr.all_constant, id, "all_restrictions_constant");
    res.expect(rank_of(tr.gamma) == static_cast<int>(tr.gamma.size()), id, "gamma_independent");
    std::int64_t qsum = 0;
    for (const auto& it : tr.iterations) qsum += it.q;
    res.expect(qsum == static_cast<std::int64_t>(tr.gamma.size()), id, "sum_q_equals_gamma");
    if (f.is_constant()) {
        res.expect(tr.gamma.empty(), id, "constant_has_empty_gamma");
        return;
    }
    res.expect(p.r <= static_cast<int>(tr.gamma.size()), id, "rank_le_gamma", num(std::int64_t(p.r)),
               num(std::int64_t(tr.gamma.size())));
    if (p.degenerate) return;
    for (std::size_t i = 0; i < tr.iterations.size(); ++i) {
        const auto& it = tr.iterations[i];
        const std::string at = id + ":iter=" + std::to_string(i + 1);
        res.expect(it.ell_decreased, at, "ell_strictly_decreasing", num(it.ell));
        res.expect(it.main_lemma_chosen, at, "main_lemma_chosen");
        res.expect(it.main_lemma_exists, at, "main_lemma_exists");
        if (exact) res.expect(it.qi_bound, at, "qi_bound");
    }
    if (exact) {
        const double bound = 6.0 * std::sqrt(p.delta.to_double() * double(p.k)) * std::log2(double(p.k));
        res.expect(double(tr.gamma.size()) <= bound, id, "gamma_le_6sqrt_dk_logk", num(std::int64_t(tr.gamma.size())),
                   num(bound));
    }
}

}  // namespace

SuiteResult suite_napdt(const SuiteOptions& o) {
    SuiteResult res;
    res.name = "napdt";
    Timer timer(res);
    std::mt19937_64 rng(o.seed);

    for (int n = 0; n <= std::min(o.max_n, 3); ++n) {
        const std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << n);
        for (std::uint64_t i = 0; i < total; ++i) {
            auto f = function_from_index(n, i);
            ++res.cases;
            check_trace(res, f, napdt(f, NapdtMode::Exact), true);
        }
    }

    auto named = [&](const std::string& name, const BooleanFunction& f, std::size_t expect) {
        ++res.cases;
        auto tr = napdt(f, NapdtMode::Exact);
        check_trace(res, f, tr, true);
        res.expect(tr.gamma.size() == expect, name, "gamma_size", num(std::int64_t(tr.gamma.size())),
                   num(std::int64_t(expect)));
    };
    named("constant", BooleanFunction(3), 0);
    named("parity12", BooleanFunction::from_predicate(2, [](std::uint64_t x) { return std::popcount(x) & 1; }), 1);
    named("and3", make(FamilySpec::and_n(3)), 3);

    auto mono = [&](const std::string& name, const BooleanFunction& f, int dim) {
        ++res.cases;
        auto mm = max_monochromatic(f);
        res.expect(mm.dim == dim, name, "max_monochromatic_dim", num(std::int64_t(mm.dim)), num(std::int64_t(dim)));
        res.expect(static_cast<int>(mm.map.gamma().size()) == f.arity() - dim, name, "dual_size");
        bool constant = true;
        int seen = -1;
        for (std::uint64_t x = 0; x < f.size(); ++x)
            if (mm.map.contains(Mask(x))) {
                if (seen < 0) seen = f.minus(x);
                constant &= seen == static_cast<int>(f.minus(x));
            }
        res.expect(constant, name, "subspace_monochromatic");
    };
    mono("and3", make(FamilySpec::and_n(3)), 2);
    mono("parity123", make(FamilySpec::parity_n(3)), 2);
    mono("ad2", make(FamilySpec::addressing(2)), 1);

    // random exact runs up to n = 7, greedy runs up to n = 10
    for (int i = 0; i < o.samples / 10 + 2; ++i) {
        const int n = 4 + static_cast<int>(rng() % 4);
        auto f = random_function(n, rng);
        ++res.cases;
        check_trace(res, f, napdt(f, NapdtMode::Exact), true);
    }
    for (int i = 0; i < o.samples; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        auto f = random_function(n, rng);
        ++res.cases;
        check_trace(res, f, napdt(f, NapdtMode::Greedy), false);
    }
    return res;
}

// ---------------------------------------------------------------- chlt

SuiteResult suite_chlt(const SuiteOptions& o) {
    SuiteResult res;
    res.name = "chlt";
    Timer timer(res);
    std::mt19937_64 rng(o.seed);
    double worst = 0;  // max of level-1 / (delta deg) seen
    auto per_function = [&](const BooleanFunction& f) {
        if (f.is_constant()) return;
        ++res.cases;
        const std::string id = function_id(f);
        const auto s = to_sparse(wht(f));
        const Rational lvl1 = level1_l1(s);
        const int deg = f2_degree(f);
        const Rational delta = Rational::dyadic(static_cast<std::int64_t>(f.weight()), f.arity());
        res.expect(lvl1 <= Rational(4 * deg), id, "chlt_level1", num(lvl1), num(std::int64_t(4 * deg)));
        if (delta <= Rational(1, 4)) {
            Rational rhs = Rational(32) * delta * Rational(deg);
            res.expect(lvl1 <= rhs, id, "improved_chlt", num(lvl1), num(rhs));
            worst = std::max(worst, (lvl1 / (delta * Rational(deg))).to_double());
        }
    };
    for (int n = 1; n <= std::min(o.max_n, 4); ++n) {
        const std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << n);
        for (std::uint64_t i = 0; i < total; ++i) per_function(function_from_index(n, i));
    }
    for (int n = 5; n <= std::max(o.max_n, 8); ++n)
        for (int i = 0; i < o.samples; ++i) {
            // low-weight functions exercise the delta <= 1/4 branch
            auto f = BooleanFunction::from_predicate(n, [&](std::uint64_t) { return rng() % 8 == 0; });
            per_function(f);
        }
    for (int n : {6, 8, 10, 12}) per_function(make(FamilySpec::and_n(n)));
    res.notes.push_back("max level1/(delta*deg) observed with delta<=1/4: " + num(worst) + " (asserted <= 32)");

    // level-1 mass of the XOR power: t |fhat(0)|^(t-1) sum_i |fhat(i)|
    for (int i = 0; i < o.samples; ++i) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int t = 1 + static_cast<int>(rng() % 3);
        auto f = random_function(n, rng);
        const auto fs = to_sparse(wht(f));
        const auto Fs = to_sparse(wht(xor_power(f, t)));
        Rational e = fs.at(0).abs(), pw(1);
        for (int j = 1; j < t; ++j) pw *= e;
        Rational expect = Rational(t) * pw * level1_l1(fs);
        ++res.cases;
        res.expect(level1_l1(Fs) == expect, function_id(f) + ":t=" + std::to_string(t), "xor_power_level1",
                   num(level1_l1(Fs)), num(expect));
    }
    return res;
}

// ---------------------------------------------------------------- chang

SuiteResult suite_beating_chang() {
    SuiteResult res;
    res.name = "beating_chang";
    Timer timer(res);
    for (int t : {4, 8, 16}) {
        ++res.cases;
        auto s = FamilySpec::ad_tt(t, t);
        auto sp = spectrum_of(s);
        auto p = profile(sp);
        const std::string id = s.label();
        res.expect(p.delta == Rational(1, t), id, "delta_is_1_over_t", num(p.delta), num(Rational(1, t)));
        bool coeffs = true;
        for (const auto& term : sp.terms)
            if (term.mask != 0) coeffs &= term.value.abs() == Rational(2, std::int64_t(t) * t);
        res.expect(coeffs, id, "nonempty_coefficients_2_over_t2");
        auto best = best_chang_bound(sp);
        const double ratio = p.delta.to_double() / best.value;
        const double floor = 0.4 * std::sqrt(double(t));
        res.expect(ratio > floor + 1e-9, id, "delta_over_chang_ge_0.4sqrt_t", num(ratio), num(floor));
        res.notes.push_back(id + ": chang_best=" + num(best.value) + " at t=" + best.t.str() + ", ratio=" + num(ratio));
    }
    return res;
}

SuiteResult suite_chang(const SuiteOptions& o) {
    SuiteResult res = suite_beating_chang();
    res.name = "chang";
    Timer timer(res);

    // h(eta) = eta log2(1/eta) nondecreasing on (0, 1/e]
    {
        ++res.cases;
        double prev = 0;
        bool mono = true;
        const double top = std::exp(-1.0);
        for (int i = 1; i <= 10000; ++i) {
            double eta = top * i / 10000.0;
            double h = eta * std::log2(1.0 / eta);
            mono &= h >= prev - 1e-15;
            prev = h;
        }
        res.expect(mono, "h(eta)", "monotone_on_(0,1/e]");
    }

    // the step-point maximum is never beaten on a dense grid; appendix screen
    int appendix_violations = 0, appendix_thresholds = 0;
    double appendix_worst = 0;
    for (int n = 1; n <= std::min(o.max_n, 4); ++n) {
        const std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << n);
        for (std::uint64_t i = 0; i < total; ++i) {
            auto f = function_from_index(n, i);
            auto s = to_sparse(wht(f));
            auto ac = appendix_check(s, 64.0);
            appendix_violations += ac.violations;
            appendix_thresholds += ac.thresholds_checked;
            appendix_worst = std::max(appendix_worst, ac.worst_ratio);
            ChangBest best;
            try {
                best = best_chang_bound(s);
            } catch (const NoValidThreshold&) {
                continue;
            }
            ++res.cases;
            auto steps = threshold_dims(s);
            const double tmax = 4.0 * steps.back().t.to_double();
            double grid_best = 0;
            for (int g = 1; g <= 400; ++g) {
                double x = 1.0 + (tmax - 1.0) * g / 400.0;
                int d = 0;
                for (const auto& st : steps)
                    if (st.t.to_double() <= x) d = st.dim;
                if (d <= 1 || x * x <= d) continue;
                double v = std::sqrt(double(d)) / (x * std::sqrt(std::log2(x * x / d)));
                grid_best = std::max(grid_best, v);
            }
            res.expect(grid_best <= best.value * (1 + 1e-9), function_id(f), "chang_argmax_at_step", num(grid_best),
                       num(best.value));
        }
    }
    res.notes.push_back("appendix screen C=64: " + std::to_string(appendix_violations) + " violations over " +
                        std::to_string(appendix_thresholds) + " thresholds; worst dim/bound = " + num(appendix_worst));
    return res;
}

// ---------------------------------------------------------------- witness

SuiteResult suite_witness(const SuiteOptions&) {
    SuiteResult res;
    res.name = "witness";
    Timer timer(res);
    // kappa = 2^8..2^16, rho a multiple of log2(kappa) up to sqrt(kappa), five
    // log-spaced auxiliary targets across each kind's admissible range
    for (auto kind : {WitnessKind::KLine, WitnessKind::KdPrimeLine, WitnessKind::KPrimeCurve, WitnessKind::KdPrimeCurve}) {
        int inside = 0, outside = 0, rejected = 0, too_large = 0;
        for (int lk : {8, 10, 12, 14, 16}) {
            const double kappa = std::ldexp(1.0, lk);
            for (double mult : {1.0, 1.5, 2.0, 3.0}) {
                const double rho = mult * lk;
                if (rho > std::sqrt(kappa)) continue;
                double lo = kappa * lk / rho, hi = kappa;
                if (kind == WitnessKind::KPrimeCurve) lo = std::sqrt(kappa), hi = kappa * lk / rho;
                if (kind == WitnessKind::KdPrimeCurve) lo = std::exp(1.0) * rho, hi = kappa * lk / rho;
                for (int i = 0; i < 5; ++i) {
                    const double aux = lo * std::pow(hi / lo, i / 4.0);
                    std::ostringstream label;
                    label << witness_name(kind) << "(rho=" << rho << ",kappa=" << kappa << ",aux=" << aux << ")";
                    WitnessPlan plan;
                    try {
                        plan = witness(kind, rho, kappa, aux);
                    } catch (const OutOfRange&) {
                        ++rejected;
                        continue;
                    }
                    if (plan.spec.family == Family::Mad && arity(plan.spec) > arity_guard()) {
                        ++too_large;
                        continue;
                    }
                    ++res.cases;
                    const std::string id = label.str() + "->" + plan.spec.label();
                    const auto p = measure(plan.spec);
                    const double a = plan.aux_is_kdprime ? p.kdprime.to_double() : p.kprime.to_double();
                    const auto span = [](const Range& r) { return "[" + num(r.lo) + "," + num(r.hi) + "]"; };
                    bool ok = res.expect(plan.r.contains(p.r), id, "r_sandwich", num(std::int64_t(p.r)), span(plan.r));
                    ok &= res.expect(plan.k.contains(double(p.k)), id, "k_sandwich", num(p.k), span(plan.k));
                    ok &= res.expect(plan.aux.contains(a), id, plan.aux_is_kdprime ? "kdprime_sandwich" : "kprime_sandwich",
                                     num(a), span(plan.aux));
                    ok &= res.expect(plan.delta.contains(p.delta.to_double()), id, "delta_sandwich", num(p.delta),
                                     span(plan.delta));
                    (ok ? inside : outside)++;
                }
            }
        }
        res.notes.push_back(witness_name(kind) + ": " + std::to_string(inside) + " inside, " + std::to_string(outside) +
                            " outside, " + std::to_string(rejected) + " rejected by preconditions, " +
                            std::to_string(too_large) + " beyond the dense guard");
    }
    return res;
}

// ---------------------------------------------------------------- dispatch

std::vector<std::string> suite_names() { return {"core", "tables", "composition", "napdt", "chlt", "chang", "witness"}; }

std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& o) {
    if (name == "all") {
        std::vector<SuiteResult> out;
        for (const auto& s : suite_names()) out.push_back(run_suite(s, o).front());
        return out;
    }
    if (name == "core") return {suite_core(o)};
    if (name == "tables") return {suite_tables(o)};
    if (name == "composition") return {suite_composition(o)};
    if (name == "napdt") return {suite_napdt(o)};
    if (name == "chlt") return {suite_chlt(o)};
    if (name == "chang") return {suite_chang(o)};
    if (name == "witness") return {suite_witness(o)};
    throw InvalidSpec("unknown suite '" + name + "'");
}

json failure_json(const SuiteResult& r) {
    json f = json::array();
    for (const auto& x : r.failures)
        f.push_back(json{{"function", x.function}, {"check", x.check}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    return json{{"suite", r.name}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", f}};
}

json summary_json(const SuiteResult& r) {
    json j = failure_json(r);
    j["notes"] = r.notes;
    j["seconds"] = r.seconds;
    return j;
}

// ---------------------------------------------------------------- scan

ScanRow scan_row(int n, std::uint64_t index) {
    ScanRow row;
    row.index = index;
    auto f = function_from_index(n, index);
    const auto s = wht(f);
    const auto sp = to_sparse(s);
    row.w = f.weight();
    auto p = profile(sp);
    p.delta = Rational::dyadic(static_cast<std::int64_t>(row.w), n);
    p.degf2 = f2_degree(f);
    row.k = p.k;
    row.r = p.r;
    row.kprime = p.kprime;
    row.kdprime = p.kdprime;
    row.degf2 = *p.degf2;

    __int128 sq = 0;
    for (auto c : s.coeffs) sq += __int128(c) * c;
    if (sq != (__int128(1) << (2 * n))) ++row.failed_checks;
    if (!p.degenerate) {
        const int L = ilog2(p.k);
        for (const auto& t : sp.terms)
            if (!(t.value.abs() / pow2(1 - L)).is_integer()) {
                ++row.failed_checks;
                break;
            }
    }
    const auto rep = bound_report(sp, p);
    for (const auto& v : rep.verdicts)
        if (!v.skipped && !v.pass) ++row.failed_checks;
    if (rep.kline && rep.kprime_curve && rep.kdprime_curve) {
        row.has_curves = true;
        row.kline = *rep.kline;
        row.kprime_curve = *rep.kprime_curve;
        row.kdprime_curve = *rep.kdprime_curve;
    }
    if (rep.chang_best) {
        row.has_chang = true;
        row.chang_best = *rep.chang_best;
    }
    return row;
}

std::vector<ScanRow> scan(int n, int samples, std::uint64_t seed, bool parallel) {
    if (n < 0 || n > 6) throw OutOfRange("scan: n must be in [0, 6]");
    std::vector<std::uint64_t> indices;
    if (samples > 0) {
        std::mt19937_64 rng(seed);
        const std::uint64_t mask = n >= 6 ? ~std::uint64_t(0) : (std::uint64_t(1) << (1u << n)) - 1;
        for (int i = 0; i < samples; ++i) indices.push_back(rng() & mask);
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    } else {
        if (n > 4) throw OutOfRange("scan: exhaustive mode is limited to n <= 4; use samples for n = 5");
        const std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << n);
        indices.resize(total);
        for (std::uint64_t i = 0; i < total; ++i) indices[i] = i;
    }
    std::vector<ScanRow> rows(indices.size());
    const std::int64_t count = static_cast<std::int64_t>(indices.size());
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) rows[i] = scan_row(n, indices[i]);
    return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << "index,w,k,r,kprime_num,kprime_den,kdprime_num,kdprime_den,degf2,kline,kprime_curve,kdprime_curve,"
           "chang_best\n";
    out << std::setprecision(10);
    for (const auto& r : rows) {
        out << r.index << "," << r.w << "," << r.k << "," << r.r << "," << r.kprime.num() << "," << r.kprime.den()
            << "," << r.kdprime.num() << "," << r.kdprime.den() << "," << r.degf2 << ",";
        if (r.has_curves) out << r.kline << "," << r.kprime_curve << "," << r.kdprime_curve;
        else out << ",,";
        out << ",";
        if (r.has_chang) out << r.chang_best;
        out << "\n";
    }
}

void write_plotdata(std::ostream& out, PlotKind kind, double rho, double kappa, int points) {
    if (!(kappa > 2) || !(rho > 0) || points < 2) throw OutOfRange("plotdata: need kappa > 2, rho > 0, points >= 2");
    const double lk = std::log2(kappa);
    const double kline = (rho / lk) * (rho / lk) / kappa;
    double lo = kind == PlotKind::KPrime ? std::sqrt(kappa) : std::max(std::sqrt(rho), rho / lk);
    const double hi = kappa;
    if (lo >= hi) throw OutOfRange("plotdata: empty domain for these rho, kappa");
    out << "x,kline,curve,cl_curve\n" << std::setprecision(10);
    for (int i = 0; i < points; ++i) {
        const double x = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1));
        double curve, cl = NAN;
        if (kind == PlotKind::KPrime) {
            curve = kappa / (x * x);
            if (x > 1) cl = std::sqrt(rho) / (x * std::log2(x));
        } else {
            curve = rho / (x * lk);
            if (x * x > rho) cl = std::sqrt(rho) / (x * std::log2(x * x / rho));
        }
        out << x << "," << kline << "," << curve << ",";
        if (!std::isnan(cl)) out << cl;
        out << "\n";
    }
}

}  // namespace boolspec
