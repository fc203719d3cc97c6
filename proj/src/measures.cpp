#include "boolspec/measures.hpp"

#include <algorithm>
#include <set>

#include "boolspec/gf2.hpp"

namespace boolspec {

namespace {

// Support masks grouped by |fhat|, largest magnitude first.
std::vector<std::pair<Rational, std::vector<Mask>>> magnitude_groups(const SparseSpectrum& s) {
    std::vector<std::pair<Rational, Mask>> items;
    items.reserve(s.terms.size());
    for (const auto& t : s.terms) items.emplace_back(t.value.abs(), t.mask);
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<std::pair<Rational, std::vector<Mask>>> groups;
    for (const auto& [mag, m] : items) {
        if (groups.empty() || groups.back().first != mag) groups.push_back({mag, {}});
        groups.back().second.push_back(m);
    }
    return groups;
}

}  // namespace

SpectralProfile profile(const SparseSpectrum& s) {
    SpectralProfile p;
    p.n = s.n;
    p.delta = (Rational(1) - s.at(0)) / Rational(2);
    p.k = static_cast<std::int64_t>(s.terms.size());

    Gf2Basis span;
    Rational min_mag;
    bool first = true;
    for (const auto& t : s.terms) {
        span.insert(t.mask);
        Rational a = t.value.abs();
        if (first || a < min_mag) min_mag = a;
        first = false;
    }
    p.r = span.dim();
    p.kprime = min_mag.inverse();

    if (p.r == 0) {
        p.kdprime = Rational(0);
    } else {
        Gf2Basis acc;
        for (const auto& [mag, masks] : magnitude_groups(s)) {
            for (Mask m : masks) acc.insert(m);
            if (acc.dim() == p.r) {
                p.kdprime = mag.inverse();
                break;
            }
        }
    }
    // k <= 1 covers constants and +-parities
    p.degenerate = p.k <= 1;
    return p;
}

SpectralProfile profile(const BooleanFunction& f) {
    auto p = profile(to_sparse(wht(f)));
    p.delta = Rational::dyadic(static_cast<std::int64_t>(f.weight()), f.arity());
    p.degf2 = f2_degree(f);
    return p;
}

std::vector<ThresholdStep> threshold_dims(const SparseSpectrum& s) {
    std::vector<ThresholdStep> out;
    Gf2Basis acc;
    for (const auto& [mag, masks] : magnitude_groups(s)) {
        for (Mask m : masks) acc.insert(m);
        out.push_back({mag.inverse(), acc.dim()});
    }
    return out;
}

std::vector<ThresholdStep> threshold_dims(const Spectrum& s) { return threshold_dims(to_sparse(s)); }

std::vector<Mask> kdprime_basis(const SparseSpectrum& s) {
    Gf2Basis span;
    for (const auto& t : s.terms) span.insert(t.mask);
    const int r = span.dim();
    std::vector<Mask> picked;
    Gf2Basis acc;
    for (const auto& [mag, masks] : magnitude_groups(s)) {
        for (Mask m : masks)
            if (acc.insert(m)) picked.push_back(m);
        if (acc.dim() == r) break;
    }
    return picked;
}

std::int64_t nonempty_sparsity(const SparseSpectrum& s) {
    std::int64_t k = 0;
    for (const auto& t : s.terms)
        if (t.mask != 0) ++k;
    return k;
}

std::int64_t coset_count(const SparseSpectrum& s, const std::vector<Mask>& gamma) {
    Gf2Basis span(gamma);
    std::set<Mask> reps;
    for (const auto& t : s.terms) reps.insert(span.reduce(t.mask));
    return static_cast<std::int64_t>(reps.size());
}

Rational l1_norm(const SparseSpectrum& s) {
    Rational sum(0);
    for (const auto& t : s.terms) sum += t.value.abs();
    return sum;
}

Rational level1_l1(const SparseSpectrum& s) {
    Rational sum(0);
    for (const auto& t : s.terms)
        if (popcount(t.mask) == 1) sum += t.value.abs();
    return sum;
}

}  // namespace boolspec
