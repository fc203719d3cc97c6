#include "boolspec/bounds.hpp"

#include <cmath>

#include "boolspec/errors.hpp"

namespace boolspec {

namespace {

bool is_pow2(std::int64_t k) { return k > 0 && (k & (k - 1)) == 0; }

int log2_exact(std::int64_t k) { return 63 - __builtin_clzll(static_cast<unsigned long long>(k)); }

long double log2l_int(std::int64_t k) { return std::log2(static_cast<long double>(k)); }

// lhs <= c * log2(k), exact when k is a power of two.
bool leq_c_log2(const Rational& lhs, const Rational& c, std::int64_t k) {
    if (is_pow2(k)) return lhs <= c * Rational(log2_exact(k));
    return lhs.to_long_double() <= c.to_long_double() * log2l_int(k);
}

Verdict make(std::string name, double lhs, double rhs, bool pass) {
    Verdict v;
    v.name = std::move(name);
    v.lhs = lhs;
    v.rhs = rhs;
    v.pass = pass;
    return v;
}

Verdict skipped(std::string name) {
    Verdict v;
    v.name = std::move(name);
    v.skipped = true;
    return v;
}

}  // namespace

double chang_weight_bound(int d, const Rational& t) {
    if (d <= 1) throw Undefined("chang_weight_bound: need d > 1");
    if (t * t <= Rational(d)) throw Undefined("chang_weight_bound: need t^2 > d");
    long double tt = t.to_long_double();
    long double ratio = (tt * tt) / d;
    return static_cast<double>(std::sqrt(static_cast<long double>(d)) / (tt * std::sqrt(std::log2(ratio))));
}

double chang_dim_bound(const Rational& t, const Rational& delta) {
    if (delta <= Rational(0) || delta >= Rational(1)) throw Undefined("chang_dim_bound: need 0 < delta < 1");
    long double tt = t.to_long_double(), dd = delta.to_long_double();
    return static_cast<double>(tt * tt * dd * dd * std::log2(1.0L / dd));
}

ChangBest best_chang_bound(const SparseSpectrum& s) {
    ChangBest best;
    bool found = false;
    for (const auto& step : threshold_dims(s)) {
        if (step.dim <= 1 || step.t * step.t <= Rational(step.dim)) continue;
        double v = chang_weight_bound(step.dim, step.t);
        if (!found || v > best.value) {
            best = {v, step.t, step.dim};
            found = true;
        }
    }
    if (!found) throw NoValidThreshold("best_chang_bound: dim(S_t) <= 1 at every threshold");
    return best;
}

ChangBest best_chang_bound(const Spectrum& s) { return best_chang_bound(to_sparse(s)); }

std::vector<Verdict> verify_inequalities(const SparseSpectrum& s, std::optional<int> degf2) {
    const auto p = profile(s);
    if (p.degenerate) return {skipped("degenerate")};

    std::vector<Verdict> out;
    const Rational k(p.k);
    const Rational delta = p.delta;

    // (a) delta >= (k-1)/(4k'^2)
    {
        Rational rhs = (k - Rational(1)) / (Rational(4) * p.kprime * p.kprime);
        out.push_back(make("weight_vs_kprime", delta.to_double(), rhs.to_double(), delta >= rhs));
    }
    // (b) ||fhat||_1 <= 3 sqrt(k delta), squared
    {
        Rational l1 = l1_norm(s);
        Rational kd = k * delta;
        bool pass = l1 * l1 <= Rational(9) * kd;
        out.push_back(make("l1_vs_sqrt_kdelta", l1.to_double(), 3.0 * std::sqrt(kd.to_double()), pass));
    }
    // (c) basis l1 <= 4 log2 k, and r/k'' <= 4 log2 k
    {
        Rational sum(0);
        for (Mask m : kdprime_basis(s)) sum += s.at(m).abs();
        double rhs = 4.0 * std::log2(static_cast<double>(p.k));
        out.push_back(make("basis_l1_vs_logk", sum.to_double(), rhs, leq_c_log2(sum, Rational(4), p.k)));
        Rational ratio = Rational(p.r) / p.kdprime;
        out.push_back(make("rank_over_kdprime_vs_logk", ratio.to_double(), rhs, leq_c_log2(ratio, Rational(4), p.k)));
    }
    // deg_F2 <= log2 k, as 2^deg <= k
    if (degf2) {
        bool pass = *degf2 < 63 && (std::int64_t(1) << *degf2) <= p.k;
        out.push_back(make("f2deg_vs_logk", *degf2, std::log2(static_cast<double>(p.k)), pass));
    } else {
        out.push_back(skipped("f2deg_vs_logk"));
    }
    Rational lvl1 = level1_l1(s);
    // (d) level-1 l1 <= 4 deg
    if (degf2) {
        Rational rhs = Rational(4) * Rational(*degf2);
        out.push_back(make("chlt_level1", lvl1.to_double(), rhs.to_double(), lvl1 <= rhs));
    } else {
        out.push_back(skipped("chlt_level1"));
    }
    // (e) level-1 l1 <= 32 delta deg when delta <= 1/4
    if (degf2 && delta <= Rational(1, 4)) {
        Rational rhs = Rational(32) * delta * Rational(*degf2);
        out.push_back(make("improved_chlt", lvl1.to_double(), rhs.to_double(), lvl1 <= rhs));
    } else {
        out.push_back(skipped("improved_chlt"));
    }
    // (f) k delta >= 1
    {
        Rational kd = k * delta;
        out.push_back(make("sparsity_times_weight", kd.to_double(), 1.0, kd >= Rational(1)));
    }
    return out;
}

std::vector<Verdict> verify_inequalities(const BooleanFunction& f) {
    return verify_inequalities(to_sparse(wht(f)), f2_degree(f));
}

BoundReport bound_report(const SparseSpectrum& s, const SpectralProfile& p) {
    BoundReport rep;
    try {
        auto best = best_chang_bound(s);
        rep.chang_best = best.value;
        rep.chang_t = best.t;
    } catch (const NoValidThreshold&) {
    }
    if (p.k > 1) {
        double lk = std::log2(static_cast<double>(p.k));
        double k = static_cast<double>(p.k);
        rep.kline = static_cast<double>(p.r) * p.r / (k * lk * lk);
        rep.kprime_curve = k / (p.kprime.to_double() * p.kprime.to_double());
        if (!p.kdprime.is_zero()) rep.kdprime_curve = p.r / (p.kdprime.to_double() * lk);
    }
    rep.verdicts = verify_inequalities(s, p.degf2);
    return rep;
}

BoundReport bound_report(const BooleanFunction& f) {
    auto s = to_sparse(wht(f));
    auto p = profile(f);
    BoundReport rep = bound_report(s, p);
    return rep;
}

AppendixCheck appendix_check(const SparseSpectrum& s, double C) {
    AppendixCheck out;
    const Rational delta = (Rational(1) - s.at(0)) / Rational(2);
    if (delta <= Rational(0) || delta >= Rational(1, 2)) return out;
    for (const auto& step : threshold_dims(s)) {
        if (step.dim <= 1) continue;
        ++out.thresholds_checked;
        double bound = chang_dim_bound(step.t, delta);
        double ratio = step.dim / bound;
        if (ratio > out.worst_ratio) out.worst_ratio = ratio;
        if (ratio > C) ++out.violations;
    }
    return out;
}

}  // namespace boolspec
