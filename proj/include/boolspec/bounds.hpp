#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boolspec/core.hpp"
#include "boolspec/measures.hpp"
#include "boolspec/rational.hpp"

namespace boolspec {

struct Verdict {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    bool pass = true;
    bool skipped = false;
};

// sqrt(d) / (t sqrt(log2(t^2/d))). Throws Undefined unless d > 1 and t^2 > d.
double chang_weight_bound(int d, const Rational& t);

// t^2 delta^2 log2(1/delta). Throws Undefined unless 0 < delta < 1.
double chang_dim_bound(const Rational& t, const Rational& delta);

struct ChangBest {
    double value = 0;
    Rational t;
    int dim = 0;
};

// Maximum of chang_weight_bound over the coefficient-magnitude thresholds.
ChangBest best_chang_bound(const SparseSpectrum& s);
ChangBest best_chang_bound(const Spectrum& s);

std::vector<Verdict> verify_inequalities(const BooleanFunction& f);
// Degree-based checks are skipped when degf2 is unknown.
std::vector<Verdict> verify_inequalities(const SparseSpectrum& s, std::optional<int> degf2);

struct BoundReport {
    std::optional<double> chang_best;
    std::optional<Rational> chang_t;
    std::optional<double> kline;          // r^2 / (k log2^2 k)
    std::optional<double> kprime_curve;   // k / k'^2
    std::optional<double> kdprime_curve;  // r / (k'' log2 k)
    std::vector<Verdict> verdicts;
};

BoundReport bound_report(const SparseSpectrum& s, const SpectralProfile& p);
BoundReport bound_report(const BooleanFunction& f);

struct AppendixCheck {
    int thresholds_checked = 0;
    int violations = 0;
    double worst_ratio = 0;  // max over thresholds of dim / chang_dim_bound
};

// Screens dim(S_t) <= C * t^2 delta^2 log2(1/delta) at every threshold with
// dim > 1, for delta < 1/2. Reported, not asserted.
AppendixCheck appendix_check(const SparseSpectrum& s, double C = 64.0);

}  // namespace boolspec
