#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolspec/core.hpp"
#include "boolspec/rational.hpp"

namespace boolspec {

enum class NapdtMode { Exact, Greedy };

struct MonochromaticResult {
    int dim;
    RestrictionMap map;  // codim = n - dim constraints cutting out the subspace
};

// Largest affine subspace on which f is constant (first one in enumeration
// order among those of maximum dimension).
MonochromaticResult max_monochromatic(const BooleanFunction& f);

struct GreedyChoice {
    Mask mask;
    int sign;
};

GreedyChoice greedy_step(const BooleanFunction& f);

struct NapdtIteration {
    int q = 0;                // parities added in Step (a)
    std::int64_t ell = 0;     // coset count of supp(f) after Step (a)
    std::optional<std::vector<int>> b_star;  // absent when every restriction is constant
    Rational delta_fmin;
    std::int64_t k_fmin = 0;
    std::int64_t kplus_fmin = 0;
    bool main_lemma_chosen = true;  // delta/k of the chosen restriction <= 4 k delta / ell^2
    bool main_lemma_exists = true;  // some restriction has delta/k+ <= 4 k delta / ell^2
    bool qi_bound = true;           // q/(ell_prev - ell) <= 6 sqrt(delta k)/ell_prev
    bool ell_decreased = true;
};

struct NapdtTrace {
    NapdtMode mode = NapdtMode::Exact;
    int n = 0;
    std::int64_t ell0 = 0;
    std::vector<NapdtIteration> iterations;
    std::vector<Mask> gamma;
    bool all_constant = false;
};

NapdtTrace napdt(const BooleanFunction& f, NapdtMode mode);

}  // namespace boolspec
