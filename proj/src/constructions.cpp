#include "boolspec/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "boolspec/config.hpp"
#include "boolspec/errors.hpp"

namespace boolspec {

namespace {

bool is_pow2(long long x) { return x > 0 && (x & (x - 1)) == 0; }

int ilog2(long long x) { return 63 - __builtin_clzll(static_cast<unsigned long long>(x)); }

void require(bool ok, const FamilySpec& s, const std::string& what) {
    if (!ok) throw InvalidSpec(s.label() + ": " + what);
}

// ---- truth tables ----

BooleanFunction and_table(int m) {
    return BooleanFunction::from_predicate(m, [m](std::uint64_t idx) { return idx == (std::uint64_t(1) << m) - 1; });
}

bool ip_minus(std::uint64_t z) { return std::popcount(z & (z >> 1) & 0x5555555555555555ull) & 1; }

BooleanFunction ip_table(int m) { return BooleanFunction::from_predicate(m, ip_minus); }

// AND_ly(y1 * inner(u), y2, ..., y_ly) with u stored above the ly y-bits.
template <class Inner>
BooleanFunction and_with_first_modified(int ly, int lu, Inner&& inner_minus) {
    const std::uint64_t ymask = (std::uint64_t(1) << ly) - 1;
    return BooleanFunction::from_predicate(ly + lu, [&](std::uint64_t idx) {
        std::uint64_t y = (idx & ymask) ^ (inner_minus(idx >> ly) ? 1 : 0);
        return y == ymask;
    });
}

BooleanFunction compose_tables(int t, const std::vector<BooleanFunction>& blocks) {
    const int L = ilog2(t);
    std::vector<int> offset(t);
    int n = L;
    for (int j = 0; j < t; ++j) {
        offset[j] = n;
        n += blocks[j].arity();
    }
    check_arity(n, "make");
    return BooleanFunction::from_predicate(n, [&](std::uint64_t idx) {
        const std::uint64_t j = idx & static_cast<std::uint64_t>(t - 1);
        const auto& g = blocks[j];
        return g.minus((idx >> offset[j]) & (g.size() - 1));
    });
}

BooleanFunction mad_table(int t, int tp, int p) {
    const int L = ilog2(t), w = ilog2(tp);
    const int n = L + t * w;
    check_arity(n, "make");
    const std::uint64_t wmask = (std::uint64_t(1) << w) - 1;
    const std::uint64_t umask = (std::uint64_t(1) << p) - 1;
    return BooleanFunction::from_predicate(n, [&](std::uint64_t idx) {
        const std::uint64_t j = idx & static_cast<std::uint64_t>(t - 1);
        std::uint64_t y = (idx >> (L + j * w)) & wmask;
        if (j == 0) {
            // u: variables of blocks 1..t-1 in order, the first p of them
            std::uint64_t u = (idx >> (L + w)) & umask;
            if (u == umask) y ^= 1;
        }
        return y == wmask;
    });
}

// ---- closed forms ----

Rational sign_pow(int e) { return (e & 1) ? Rational(-1) : Rational(1); }

SparseSpectrum and_sparse(int m) {
    SparseSpectrum s;
    s.n = m;
    const Rational inv = pow2(-m);
    for (std::uint64_t S = 0; S < (std::uint64_t(1) << m); ++S) {
        if (S == 0) s.terms.push_back({0, Rational(1) - Rational(2) * inv});
        else s.terms.push_back({Mask(S), Rational(2) * sign_pow(std::popcount(S) + 1) * inv});
    }
    s.normalize();
    return s;
}

SparseSpectrum ip_sparse(int m) {
    SparseSpectrum s;
    s.n = m;
    const Rational mag = pow2(-m / 2);
    for (std::uint64_t S = 0; S < (std::uint64_t(1) << m); ++S) {
        int full_pairs = std::popcount(S & (S >> 1) & 0x5555555555555555ull);
        s.terms.push_back({Mask(S), sign_pow(full_pairs) * mag});
    }
    s.normalize();
    return s;
}

// AD_t with every target replaced by g.
SparseSpectrum compose_sparse(int t, const SparseSpectrum& g) {
    const int L = ilog2(t);
    SparseSpectrum s;
    s.n = L + t * g.n;
    if (s.n > kMaxMaskBits) throw SizeGuard("closed form: arity beyond 128-bit masks");
    s.terms.push_back({0, g.at(0)});
    const Rational inv_t(1, t);
    for (int j = 0; j < t; ++j)
        for (const auto& term : g.terms) {
            if (term.mask == 0) continue;
            Mask shifted = term.mask << (L + j * g.n);
            Rational base = term.value * inv_t;
            for (int T = 0; T < t; ++T)
                s.terms.push_back({shifted | Mask(T), sign_pow(std::popcount(static_cast<unsigned>(T & j))) * base});
        }
    s.normalize();
    return s;
}

SparseSpectrum ad_tta_sparse(int t, int tp, int a) {
    const int L = ilog2(t), w = ilog2(tp), wa = ilog2(a);
    SparseSpectrum s;
    s.n = L + wa + (t - 1) * w;
    if (s.n > kMaxMaskBits) throw SizeGuard("closed form: arity beyond 128-bit masks");
    const Rational tt(t), tpr(tp), ar(a);
    const Rational two(2);
    s.terms.push_back({0, Rational(1) + two / (tt * tpr) - two / (ar * tt) - two / tpr});
    for (int U = 1; U < t; ++U) s.terms.push_back({Mask(U), two / (tt * tpr) - two / (ar * tt)});
    // block 0 (address all +1) carries AND_{log a}
    for (std::uint64_t S = 1; S < (std::uint64_t(1) << wa); ++S)
        for (int T = 0; T < t; ++T)
            s.terms.push_back({(Mask(S) << L) | Mask(T), two * sign_pow(std::popcount(S) + 1) / (ar * tt)});
    for (int j = 1; j < t; ++j) {
        const int off = L + wa + (j - 1) * w;
        for (std::uint64_t S = 1; S < (std::uint64_t(1) << w); ++S)
            for (int T = 0; T < t; ++T) {
                int sgn = std::popcount(S) + 1 + std::popcount(static_cast<unsigned>(T & j));
                s.terms.push_back({(Mask(S) << off) | Mask(T), two * sign_pow(sgn) / (tt * tpr)});
            }
    }
    s.normalize();
    return s;
}

// AND_ly(y1 * h(u), y2, ...) where h has spectrum hs on the bits above y.
SparseSpectrum and_first_modified_sparse(int ly, const SparseSpectrum& hs) {
    SparseSpectrum s;
    s.n = ly + hs.n;
    const Rational tp = pow2(ly);
    const Rational two(2);
    s.terms.push_back({0, Rational(1) - two / tp});
    for (std::uint64_t S = 1; S < (std::uint64_t(1) << ly); ++S) {
        Rational a = two * sign_pow(std::popcount(S) + 1) / tp;
        if (!(S & 1)) {
            s.terms.push_back({Mask(S), a});
            continue;
        }
        for (const auto& h : hs.terms) s.terms.push_back({Mask(S) | (h.mask << ly), a * h.value});
    }
    s.normalize();
    return s;
}

SparseSpectrum ab_sparse(int tp, int ell) { return and_first_modified_sparse(ilog2(tp), ip_sparse(ilog2(ell))); }

SparseSpectrum mand_sparse(int tp, int p) { return and_first_modified_sparse(ilog2(tp), and_sparse(p)); }

SparseSpectrum identity_sparse() {
    SparseSpectrum s;
    s.n = 1;
    s.terms.push_back({1, Rational(1)});
    return s;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::And: return "and";
        case Family::Parity: return "parity";
        case Family::BentIp: return "bent_ip";
        case Family::Addressing: return "addressing";
        case Family::AdTt: return "ad_tt";
        case Family::AdTta: return "ad_tta";
        case Family::Ab: return "ab";
        case Family::Aab: return "aab";
        case Family::Mand: return "mand";
        case Family::Mad: return "mad";
        case Family::Composed: return "composed";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::And, Family::Parity, Family::BentIp, Family::Addressing, Family::AdTt, Family::AdTta,
                     Family::Ab, Family::Aab, Family::Mand, Family::Mad, Family::Composed})
        if (family_name(f) == name) return f;
    throw InvalidSpec("unknown family '" + name + "'");
}

std::string FamilySpec::label() const {
    std::ostringstream os;
    os << family_name(family) << "(";
    switch (family) {
        case Family::And:
        case Family::Parity:
        case Family::BentIp: os << "n=" << n; break;
        case Family::Addressing: os << "t=" << t; break;
        case Family::AdTt: os << "t=" << t << ",tprime=" << tprime; break;
        case Family::AdTta: os << "t=" << t << ",tprime=" << tprime << ",a=" << a; break;
        case Family::Ab: os << "tprime=" << tprime << ",ell=" << ell; break;
        case Family::Aab: os << "t=" << t << ",tprime=" << tprime << ",ell=" << ell; break;
        case Family::Mand: os << "tprime=" << tprime << ",p=" << p; break;
        case Family::Mad: os << "t=" << t << ",tprime=" << tprime << ",p=" << p; break;
        case Family::Composed: os << "t=" << t << ",inner_n=" << (inner ? inner->arity() : -1); break;
    }
    os << ")";
    return os.str();
}

void validate(const FamilySpec& s) {
    auto pow2_at_least = [&](int v, int lo, const char* name) {
        require(is_pow2(v), s, std::string(name) + " must be a power of two");
        require(v >= lo, s, std::string(name) + " must be >= " + std::to_string(lo));
    };
    switch (s.family) {
        case Family::And:
        case Family::Parity: require(s.n >= 1, s, "n must be >= 1"); break;
        case Family::BentIp: require(s.n >= 2 && s.n % 2 == 0, s, "n must be even and >= 2"); break;
        case Family::Addressing: pow2_at_least(s.t, 2, "t"); break;
        case Family::AdTt:
            pow2_at_least(s.t, 2, "t");
            pow2_at_least(s.tprime, 2, "tprime");
            break;
        case Family::AdTta:
            pow2_at_least(s.t, 2, "t");
            pow2_at_least(s.tprime, 2, "tprime");
            require(is_pow2(s.a), s, "a must be a power of two");
            require(s.a >= 2 * s.tprime, s, "a >= 2*tprime violated");
            break;
        case Family::Ab:
        case Family::Aab:
            if (s.family == Family::Aab) pow2_at_least(s.t, 2, "t");
            pow2_at_least(s.tprime, 4, "tprime");
            require(is_pow2(s.ell), s, "ell must be a power of two");
            require(s.ell >= 4 && ilog2(s.ell) % 2 == 0, s, "log2(ell) must be even and >= 2");
            break;
        case Family::Mand:
            pow2_at_least(s.tprime, 2, "tprime");
            require(s.p >= 1, s, "p must be >= 1");
            break;
        case Family::Mad:
            pow2_at_least(s.t, 2, "t");
            pow2_at_least(s.tprime, 2, "tprime");
            require(s.p >= 2 && s.p <= (s.t - 1) * ilog2(s.tprime), s, "2 <= p <= (t-1)*log2(tprime) violated");
            break;
        case Family::Composed:
            pow2_at_least(s.t, 2, "t");
            require(s.inner != nullptr, s, "inner function missing");
            require(s.inner->arity() >= 1, s, "inner function needs arity >= 1");
            break;
    }
}

int arity(const FamilySpec& s) {
    validate(s);
    switch (s.family) {
        case Family::And:
        case Family::Parity:
        case Family::BentIp: return s.n;
        case Family::Addressing: return ilog2(s.t) + s.t;
        case Family::AdTt: return ilog2(s.t) + s.t * ilog2(s.tprime);
        case Family::AdTta: return ilog2(s.t) + ilog2(s.a) + (s.t - 1) * ilog2(s.tprime);
        case Family::Ab: return ilog2(s.tprime) + ilog2(s.ell);
        case Family::Aab: return ilog2(s.t) + s.t * (ilog2(s.tprime) + ilog2(s.ell));
        case Family::Mand: return ilog2(s.tprime) + s.p;
        case Family::Mad: return ilog2(s.t) + s.t * ilog2(s.tprime);
        case Family::Composed: return ilog2(s.t) + s.t * s.inner->arity();
    }
    return 0;
}

BooleanFunction make(const FamilySpec& s) {
    check_arity(arity(s), "make");
    switch (s.family) {
        case Family::And: return and_table(s.n);
        case Family::Parity:
            return BooleanFunction::from_predicate(s.n, [](std::uint64_t idx) { return std::popcount(idx) & 1; });
        case Family::BentIp: return ip_table(s.n);
        case Family::Addressing:
            return compose_tables(s.t, std::vector<BooleanFunction>(s.t, BooleanFunction::from_string(1, "+-")));
        case Family::AdTt: return compose_tables(s.t, std::vector<BooleanFunction>(s.t, and_table(ilog2(s.tprime))));
        case Family::AdTta: {
            std::vector<BooleanFunction> blocks(s.t, and_table(ilog2(s.tprime)));
            blocks[0] = and_table(ilog2(s.a));
            return compose_tables(s.t, blocks);
        }
        case Family::Ab:
        case Family::Aab: {
            auto ab = and_with_first_modified(ilog2(s.tprime), ilog2(s.ell), ip_minus);
            if (s.family == Family::Ab) return ab;
            return compose_tables(s.t, std::vector<BooleanFunction>(s.t, ab));
        }
        case Family::Mand: {
            const std::uint64_t all = (std::uint64_t(1) << s.p) - 1;
            return and_with_first_modified(ilog2(s.tprime), s.p, [all](std::uint64_t u) { return u == all; });
        }
        case Family::Mad: return mad_table(s.t, s.tprime, s.p);
        case Family::Composed: return compose_tables(s.t, std::vector<BooleanFunction>(s.t, *s.inner));
    }
    throw InvalidSpec("unreachable family");
}

SparseSpectrum closed_form_spectrum(const FamilySpec& s) {
    validate(s);
    switch (s.family) {
        case Family::And: return and_sparse(s.n);
        case Family::Parity: {
            SparseSpectrum out;
            out.n = s.n;
            out.terms.push_back({low_bits(s.n), Rational(1)});
            return out;
        }
        case Family::BentIp: return ip_sparse(s.n);
        case Family::Addressing: return compose_sparse(s.t, identity_sparse());
        case Family::AdTt: return compose_sparse(s.t, and_sparse(ilog2(s.tprime)));
        case Family::AdTta: return ad_tta_sparse(s.t, s.tprime, s.a);
        case Family::Ab: return ab_sparse(s.tprime, s.ell);
        case Family::Aab: return compose_sparse(s.t, ab_sparse(s.tprime, s.ell));
        case Family::Mand: return mand_sparse(s.tprime, s.p);
        case Family::Mad: throw NoClosedForm("mad has no closed-form spectrum; use wht(make(spec))");
        case Family::Composed: return compose_sparse(s.t, to_sparse(wht(*s.inner)));
    }
    throw InvalidSpec("unreachable family");
}

SparseSpectrum spectrum_of(const FamilySpec& s) {
    if (arity(s) <= arity_guard()) return to_sparse(wht(make(s)));
    return closed_form_spectrum(s);
}

SpectralProfile measure(const FamilySpec& s) {
    if (arity(s) <= arity_guard()) return profile(make(s));
    return profile(closed_form_spectrum(s));
}

std::string witness_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::KLine: return "kline";
        case WitnessKind::KPrimeCurve: return "kprime_curve";
        case WitnessKind::KdPrimeCurve: return "kdprime_curve";
        case WitnessKind::KdPrimeLine: return "kdprime_line";
    }
    return "?";
}

WitnessKind parse_witness(const std::string& name) {
    for (auto k : {WitnessKind::KLine, WitnessKind::KPrimeCurve, WitnessKind::KdPrimeCurve, WitnessKind::KdPrimeLine})
        if (witness_name(k) == name) return k;
    throw InvalidSpec("unknown witness kind '" + name + "'");
}

namespace {

// Powers of two (of four when step = 2) bracketing x.
std::vector<long long> bracket(double x, int step = 1) {
    std::vector<long long> out;
    if (!(x > 0)) return out;
    const double e = std::log2(x) / step;
    for (double c : {std::floor(e), std::ceil(e)}) {
        if (c < 0) c = 0;
        if (c * step > 40) throw OutOfRange("parameter too large after rounding");
        long long v = 1LL << (static_cast<int>(c) * step);
        if (out.empty() || out.back() != v) out.push_back(v);
    }
    return out;
}

Range around(double target, double factor) { return {target / factor, target * factor}; }

void precondition(bool ok, const std::string& what) {
    if (!ok) throw OutOfRange("witness precondition violated: " + what);
}

struct Predicted {
    double r, k, aux, delta;
};

// Measures of a candidate from the family formulas (mAD: measured when it
// fits the dense guard, otherwise its leading terms).
Predicted predict(const FamilySpec& s) {
    const double t = s.t, tp = s.tprime;
    switch (s.family) {
        case Family::AdTta:
            return {(t - 1) * ilog2(s.tprime) + ilog2(s.a) + ilog2(s.t), (t - 1) * (tp - 1) * t + t * s.a, t * s.a / 2,
                    1 / tp + 1 / (s.a * t) - 1 / (t * tp)};
        case Family::Aab: {
            const double kab = tp / 2 + s.ell * tp / 2;
            return {t * (ilog2(s.tprime) + ilog2(s.ell)) + ilog2(s.t), 1 + t * t * (kab - 1),
                    t * tp * std::sqrt(double(s.ell)) / 2, 1 / tp};
        }
        case Family::Mad:
            if (arity(s) <= arity_guard()) {
                auto p = measure(s);
                return {double(p.r), double(p.k), p.kdprime.to_double(), p.delta.to_double()};
            }
            return {t * ilog2(s.tprime) + ilog2(s.t), std::ldexp(t * tp, s.p) + t * t * tp, t * tp, 1 / tp};
        default: break;
    }
    throw InvalidSpec("no witness prediction for " + s.label());
}

}  // namespace

WitnessPlan witness(WitnessKind kind, double rho, double kappa, double aux, double factor) {
    precondition(kappa > 2 && rho > 0 && aux > 0, "rho, kappa, kappa_aux must be positive (kappa > 2)");
    const double lk = std::log2(kappa);
    precondition(lk <= rho, "log2(kappa) <= rho");
    precondition(rho <= std::sqrt(kappa), "rho <= sqrt(kappa)");
    // Auxiliary ranges are checked with a factor-2 slack for power-of-two
    // rounding; the rounded parameters must then satisfy the family constraints.
    const double slack = 2.0;

    WitnessPlan plan;
    plan.kind = kind;
    std::vector<FamilySpec> candidates;
    switch (kind) {
        case WitnessKind::KLine:
        case WitnessKind::KdPrimeLine: {
            precondition(aux <= kappa * slack, "kappa_aux <= kappa");
            precondition(aux * slack >= kappa * lk / rho, "kappa_aux >= kappa log2(kappa) / rho");
            for (auto t : bracket(2 * rho / lk))
                for (auto tp : bracket(kappa * lk * lk / (rho * rho)))
                    for (auto a : bracket(2 * aux * lk / rho))
                        if (t >= 2 && tp >= 2 && a >= 2 * tp)
                            candidates.push_back(FamilySpec::ad_tta(int(t), int(tp), int(a)));
            plan.delta = around(rho * rho / (kappa * lk * lk), factor);
            plan.aux_is_kdprime = kind == WitnessKind::KdPrimeLine;
            break;
        }
        case WitnessKind::KPrimeCurve: {
            precondition(aux * slack >= std::sqrt(kappa), "kappa_aux >= sqrt(kappa)");
            precondition(aux <= slack * kappa * lk / rho, "kappa_aux <= kappa log2(kappa) / rho");
            const double ratio = kappa * lk / (aux * rho);
            for (auto t : bracket(2 * rho / lk))
                for (auto tp : bracket(4 * aux * aux / kappa))
                    for (auto ell : bracket(2 * ratio * ratio, 2))
                        if (t >= 2 && tp >= 4 && ell >= 4)
                            candidates.push_back(FamilySpec::aab(int(t), int(tp), int(ell)));
            plan.delta = {0.0, factor * kappa / (aux * aux)};
            break;
        }
        case WitnessKind::KdPrimeCurve: {
            precondition(aux * slack >= std::exp(1.0) * rho, "kappa_aux >= e rho");
            precondition(aux <= slack * kappa * lk / rho, "kappa_aux <= kappa log2(kappa) / rho");
            const double lr = std::log2(aux / rho);
            const double pe = std::log2(4 * kappa / aux);
            for (auto t : bracket(2 * rho / lr))
                for (auto tp : bracket(aux / rho * lr))
                    for (double pc : {std::floor(pe), std::ceil(pe)}) {
                        const long long p = static_cast<long long>(pc);
                        if (t >= 2 && tp >= 2 && p >= 2 && p <= (t - 1) * ilog2(tp))
                            candidates.push_back(FamilySpec::mad(int(t), int(tp), int(p)));
                    }
            plan.delta = around(rho / (aux * lr), factor);
            plan.aux_is_kdprime = true;
            break;
        }
    }
    precondition(!candidates.empty(), "no power-of-two rounding satisfies the family constraints");
    plan.r = around(rho, factor);
    plan.k = around(kappa, factor);
    plan.aux = around(aux, factor);

    // Among the roundings, the one whose measures sit closest to the targets
    // (worst log2 ratio); the upper-bounded weight only counts when exceeded.
    double best = INFINITY;
    for (const auto& c : candidates) {
        try {
            validate(c);
        } catch (const InvalidSpec&) {
            continue;
        }
        const Predicted m = predict(c);
        double score = std::max({std::abs(std::log2(m.r / rho)), std::abs(std::log2(m.k / kappa)),
                                 std::abs(std::log2(m.aux / aux))});
        if (plan.delta.lo > 0) {
            score = std::max(score, std::abs(std::log2(m.delta * factor / plan.delta.hi)));
        } else if (m.delta > plan.delta.hi) {
            score = std::max(score, std::log2(factor * m.delta / plan.delta.hi));
        }
        if (score < best) {
            best = score;
            plan.spec = c;
        }
    }
    precondition(best < INFINITY, "no valid rounded spec");
    return plan;
}

}  // namespace boolspec
