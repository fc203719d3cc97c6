#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolspec/core.hpp"
#include "boolspec/rational.hpp"

namespace boolspec {

struct SpectralProfile {
    int n = 0;
    Rational delta;
    std::int64_t k = 0;
    int r = 0;
    Rational kprime;
    Rational kdprime;
    std::optional<int> degf2;  // unknown when built from a closed form only
    bool degenerate = false;
};

SpectralProfile profile(const BooleanFunction& f);
SpectralProfile profile(const SparseSpectrum& s);

struct ThresholdStep {
    Rational t;
    int dim;
};

// One step per distinct coefficient magnitude, t ascending.
std::vector<ThresholdStep> threshold_dims(const SparseSpectrum& s);
std::vector<ThresholdStep> threshold_dims(const Spectrum& s);

// Support masks picked while building k'': added by decreasing magnitude
// until the span reaches r. Ties in magnitude are taken in mask order.
std::vector<Mask> kdprime_basis(const SparseSpectrum& s);

// Nonempty sparsity k+.
std::int64_t nonempty_sparsity(const SparseSpectrum& s);

// Number of classes of supp(s) modulo span(gamma).
std::int64_t coset_count(const SparseSpectrum& s, const std::vector<Mask>& gamma);

// sum |fhat(S)| over all S, and over the singletons only.
Rational l1_norm(const SparseSpectrum& s);
Rational level1_l1(const SparseSpectrum& s);

}  // namespace boolspec
