#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "boolspec/mask.hpp"

namespace boolspec {

class RestrictionMap;

// Rows in echelon form: every row's highest set bit (its pivot) is unique.
class Gf2Basis {
public:
    Gf2Basis() { pivot_row_.fill(-1); }
    explicit Gf2Basis(const std::vector<Mask>& masks) : Gf2Basis() {
        for (auto m : masks) insert(m);
    }

    // Returns true if m was independent of the current span.
    bool insert(Mask m);
    Mask reduce(Mask m) const;
    bool contains(Mask m) const { return reduce(m) == 0; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Mask>& rows() const { return rows_; }
    int row_for_pivot(int col) const { return pivot_row_[col]; }
    Mask pivot_mask() const { return pivots_; }

private:
    std::vector<Mask> rows_;
    std::array<int, kMaxMaskBits> pivot_row_;
    Mask pivots_ = 0;
};

int rank_of(const std::vector<Mask>& masks);

Mask reduce_mod(const Gf2Basis& span, Mask m);

struct AffineSubspace {
    std::vector<Mask> basis;  // reduced row echelon, pivots descending
    Mask offset = 0;          // supported on non-pivot coordinates
};

// Each d-dimensional linear subspace of GF(2)^n exactly once, as its reduced
// row echelon basis. The visitor returns false to stop early.
void for_each_linear_subspace(int n, int d,
                              const std::function<bool(const std::vector<Mask>& rref, Mask pivots)>& visit);

// Each d-dimensional affine subspace exactly once.
void for_each_affine_subspace(int n, int d, const std::function<bool(const AffineSubspace&)>& visit);
std::vector<AffineSubspace> enumerate_affine_subspaces(int n, int d);

// Constraints {chi_gamma(x) = b_gamma} describing u + span(W).
RestrictionMap dual_constraints(const std::vector<Mask>& W, Mask u, int n);

}  // namespace boolspec
