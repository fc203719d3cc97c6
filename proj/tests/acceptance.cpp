// One line per acceptance criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "boolspec/bounds.hpp"
#include "boolspec/constructions.hpp"
#include "boolspec/errors.hpp"
#include "boolspec/gf2.hpp"
#include "boolspec/harness.hpp"
#include "boolspec/measures.hpp"
#include "boolspec/napdt.hpp"

using namespace boolspec;

namespace {

constexpr double kChangEps = 1e-9;
constexpr double kSandwich = 8.0;
constexpr double kCoreSeconds = 60.0;
constexpr double kNapdtSeconds = 300.0;

struct Outcome {
    bool pass = true;
    std::string detail;
    int count = 0;
    void fail(const std::string& what) {
        if (count < 3) detail += (count ? "; " : "") + what;
        ++count;
        pass = false;
    }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %d %s: %s (%.2f s)%s%s\n", id, title.c_str(), o.pass ? "PASS" : "FAIL", secs,
                o.detail.empty() ? "" : " ", o.detail.c_str());
    std::fflush(stdout);
}

std::string show(const Rational& r) { return r.str(); }

bool same_spectrum(const SparseSpectrum& a, const SparseSpectrum& b) {
    if (a.n != b.n || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].mask != b.terms[i].mask || !(a.terms[i].value == b.terms[i].value)) return false;
    return true;
}

Outcome core_invariants() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    const int n = 4;
    int excluded = 0;
    for (std::uint64_t i = 0; i < 65536; ++i) {
        auto f = function_from_index(n, i);
        const auto s = wht_serial(f);
        const std::string id = function_id(f);
        __int128 sq = 0;
        for (auto c : s.coeffs) sq += __int128(c) * c;
        if (sq != 256) o.fail(id + " parseval");
        const auto sp = to_sparse(s);
        const auto p = profile(sp);
        // constants and +-parities (k = 1) are outside the claims' scope
        if (p.degenerate) {
            ++excluded;
            continue;
        }
        if (Rational(p.k) * p.delta < Rational(1)) o.fail(id + " k*delta");
        for (const auto& v : verify_inequalities(sp, f2_degree(f)))
            if (!v.skipped && !v.pass) o.fail(id + " " + v.name);
        const int L = 63 - __builtin_clzll(static_cast<unsigned long long>(p.k));
        for (const auto& t : sp.terms)
            if (!(t.value.abs() * pow2(L - 1)).is_integer()) o.fail(id + " granularity");
        if ((std::int64_t(1) << p.r) < p.k) o.fail(id + " log k <= r");
        if (p.kprime * p.kprime < Rational(p.k)) o.fail(id + " sqrt k <= k'");
        if (p.kprime > Rational(p.k, 2)) o.fail(id + " k' <= k/2");
        if (p.kdprime > p.kprime) o.fail(id + " k'' <= k'");
        if (p.kdprime * p.kdprime < Rational(p.r)) o.fail(id + " sqrt r <= k''");
        if (Rational(p.r) > Rational(4) * p.kdprime * Rational(L) && (p.k & (p.k - 1)) == 0)
            o.fail(id + " r <= 4 k'' log k");
        if ((p.k & (p.k - 1)) != 0 && p.r > 4 * p.kdprime.to_double() * std::log2(double(p.k)))
            o.fail(id + " r <= 4 k'' log k");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= kCoreSeconds) o.fail("runtime " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(65536 - excluded) + " functions with k >= 2, " + std::to_string(excluded) + " with k = 1 excluded";
    return o;
}

Outcome tables() {
    Outcome o;
    struct Row {
        FamilySpec spec;
        Rational delta;
        std::int64_t k;
        int r;
        Rational kp, kdp;
    };
    const std::vector<Row> rows = {
        {FamilySpec::and_n(3), Rational(1, 8), 8, 3, 4, 4},
        {FamilySpec::addressing(4), Rational(1, 2), 16, 6, 4, 4},
        {FamilySpec::ad_tt(4, 8), Rational(1, 8), 113, 14, 16, 16},
        {FamilySpec::ad_tta(4, 4, 8), Rational(7, 32), 68, 11, 16, 16},
        {FamilySpec::ab(8, 4), Rational(1, 8), 21, 5, 8, 8},
        {FamilySpec::aab(2, 8, 4), Rational(1, 8), 81, 11, 16, 16},
    };
    for (const auto& row : rows) {
        const auto p = profile(make(row.spec));
        if (!(p.delta == row.delta && p.k == row.k && p.r == row.r && p.kprime == row.kp && p.kdprime == row.kdp))
            o.fail(row.spec.label() + " measured (" + show(p.delta) + ", " + std::to_string(p.k) + ", " +
                   std::to_string(p.r) + ", " + show(p.kprime) + ", " + show(p.kdprime) + ") expected (" +
                   show(row.delta) + ", " + std::to_string(row.k) + ", " + std::to_string(row.r) + ", " +
                   show(row.kp) + ", " + show(row.kdp) + ")");
    }
    const auto m = profile(make(FamilySpec::mad(4, 4, 2)));
    const double k = double(m.k), kd = m.kdprime.to_double();
    if (!(m.delta == Rational(1, 4)) || m.r != 10) o.fail("mAD(4,4,2) delta/r");
    if (k < 320 / kSandwich || k > 320 * kSandwich) o.fail("mAD(4,4,2) k outside sandwich");
    if (kd < 16 / kSandwich || kd > 16 * kSandwich) o.fail("mAD(4,4,2) k'' outside sandwich");
    return o;
}

std::vector<FamilySpec> closed_form_grid() {
    std::vector<FamilySpec> grid;
    auto add = [&](const FamilySpec& s) {
        try {
            validate(s);
        } catch (const InvalidSpec&) {
            return;
        }
        if (arity(s) <= 14) grid.push_back(s);
    };
    const int pows[] = {1, 2, 4, 8, 16, 32, 64};
    for (int n = 1; n <= 14; ++n) {
        add(FamilySpec::and_n(n));
        add(FamilySpec::parity_n(n));
        add(FamilySpec::bent_ip(n));
    }
    for (int t : pows) {
        add(FamilySpec::addressing(t));
        for (int tp : pows) {
            add(FamilySpec::ad_tt(t, tp));
            for (int a : pows) add(FamilySpec::ad_tta(t, tp, a));
            for (int ell : pows) {
                if (t == 1) add(FamilySpec::ab(tp, ell));
                add(FamilySpec::aab(t, tp, ell));
            }
        }
    }
    for (int tp : pows)
        for (int p = 0; p <= 12; ++p) add(FamilySpec::mand(tp, p));
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const int m = 1 + static_cast<int>(rng() % 4);
        add(FamilySpec::composed(i % 2 ? 4 : 2, random_function(m, rng)));
    }
    return grid;
}

Outcome closed_forms() {
    Outcome o;
    auto grid = closed_form_grid();
    for (const auto& s : grid)
        if (!same_spectrum(closed_form_spectrum(s), to_sparse(wht(make(s))))) o.fail(s.label());
    if (o.pass) o.detail = std::to_string(grid.size()) + " specs";
    return o;
}

template <class Suite>
Outcome from_suite(Suite&& run) {
    Outcome o;
    SuiteResult r = run();
    for (const auto& f : r.failures) o.fail(f.function + " " + f.check + " lhs=" + f.lhs + " rhs=" + f.rhs);
    if (o.pass) o.detail = std::to_string(r.cases) + " cases";
    else o.detail = std::to_string(r.failures.size()) + " failed checks over " + std::to_string(r.cases) + " cases: " + o.detail;
    for (const auto& note : r.notes) o.detail += "\n    " + note;
    return o;
}

Outcome composition() {
    SuiteOptions opts;
    opts.samples = 200;
    opts.seed = 1;
    return from_suite([&] { return suite_composition(opts); });
}

Outcome napdt_exact() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    int runs = 0;
    auto check = [&](const BooleanFunction& f) {
        ++runs;
        const auto tr = napdt(f, NapdtMode::Exact);
        const auto p = profile(f);
        const std::string id = function_id(f);
        if (!tr.all_constant) o.fail(id + " restriction not constant");
        if (f.is_constant() || p.degenerate) return tr;
        if (static_cast<int>(tr.gamma.size()) < p.r) o.fail(id + " r > |Gamma|");
        const double bound = 6 * std::sqrt(p.delta.to_double() * double(p.k)) * std::log2(double(p.k));
        if (double(tr.gamma.size()) > bound) o.fail(id + " |Gamma| bound");
        for (const auto& it : tr.iterations)
            if (!it.main_lemma_chosen || !it.main_lemma_exists || !it.qi_bound) o.fail(id + " per-iteration lemma");
        return tr;
    };
    for (int n = 0; n <= 3; ++n)
        for (std::uint64_t i = 0; i < (std::uint64_t(1) << (1u << n)); ++i) check(function_from_index(n, i));
    if (!check(BooleanFunction(3)).gamma.empty()) o.fail("constant");
    if (check(make(FamilySpec::parity_n(2))).gamma.size() != 1) o.fail("parity");
    if (check(make(FamilySpec::and_n(3))).gamma.size() != 3) o.fail("AND_3");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= kNapdtSeconds) o.fail("runtime");
    if (o.pass) o.detail = std::to_string(runs) + " runs";
    return o;
}

Outcome beating_chang() {
    Outcome o;
    for (int t : {4, 8, 16}) {
        const auto s = spectrum_of(FamilySpec::ad_tt(t, t));
        const auto p = profile(s);
        if (!(p.delta == Rational(1, t))) o.fail("delta t=" + std::to_string(t));
        for (const auto& term : s.terms)
            if (term.mask != 0 && !(term.value.abs() == Rational(2, std::int64_t(t) * t)))
                o.fail("coefficient t=" + std::to_string(t));
        const double ratio = p.delta.to_double() / best_chang_bound(s).value;
        const double floor = 0.4 * std::sqrt(double(t));
        if (!(ratio > floor + kChangEps)) o.fail("ratio t=" + std::to_string(t));
        o.detail += (o.detail.empty() ? "ratios " : ", ") + std::to_string(ratio);
    }
    return o;
}

Outcome witnesses() { return from_suite([] { return suite_witness(SuiteOptions{}); }); }

Outcome restriction_expectations() {
    Outcome o;
    std::mt19937_64 rng(8);
    int pairs = 0, gated = 0;
    while (pairs < 100) {
        const int n = 1 + static_cast<int>(rng() % 4);
        auto f = random_function(n, rng);
        auto gamma = random_independent(n, static_cast<int>(rng() % (n + 1)), rng);
        const auto e = restriction_expectation(f, gamma);
        ++pairs;
        const auto p = profile(f);
        const std::string id = function_id(f);
        if (!(e.mean_delta == p.delta)) o.fail(id + " mean delta");
        const Rational rhs = Rational(e.ell) * Rational(e.ell) / (Rational(4) * Rational(p.k));
        if (e.ell >= 2) {
            ++gated;
            if (e.mean_kplus < rhs) o.fail(id + " mean k+");
        }
    }
    if (o.pass) o.detail = "100 pairs, sparsity bound applied to " + std::to_string(gated) + " with ell >= 2";
    return o;
}

}  // namespace

int main() {
    report(1, "exhaustive core invariants n=4", core_invariants);
    report(2, "construction tables", tables);
    report(3, "closed form equals transform", closed_forms);
    report(4, "composition lemma", composition);
    report(5, "restriction algorithm exact mode", napdt_exact);
    report(6, "beating chang", beating_chang);
    report(7, "witness instantiation", witnesses);
    report(8, "restriction expectations", restriction_expectations);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
