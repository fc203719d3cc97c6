#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolspec/mask.hpp"
#include "boolspec/rational.hpp"

namespace boolspec {

// f: {-1,1}^n -> {-1,1}. Bit idx of the table is 1 iff f(x) = -1, where
// idx = sum_i b_i 2^(i-1) and b_i = (1 - x_i)/2.
class BooleanFunction {
public:
    BooleanFunction() : BooleanFunction(0) {}
    explicit BooleanFunction(int n);  // constant +1

    template <class Pred>
    static BooleanFunction from_predicate(int n, Pred&& is_minus) {
        BooleanFunction f(n);
        for (std::uint64_t idx = 0; idx < f.size(); ++idx)
            if (is_minus(idx)) f.set(idx, true);
        return f;
    }
    // Characters '+' and '-' in index order.
    static BooleanFunction from_string(int n, const std::string& signs);

    int arity() const { return n_; }
    std::uint64_t size() const { return std::uint64_t(1) << n_; }

    bool minus(std::uint64_t idx) const { return (words_[idx >> 6] >> (idx & 63)) & 1; }
    int value(std::uint64_t idx) const { return minus(idx) ? -1 : 1; }
    void set(std::uint64_t idx, bool is_minus);

    std::uint64_t weight() const;
    bool is_constant() const;
    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Scaled spectrum: coeffs[mask] = c_S = sum_x f(x) chi_S(x) = 2^n fhat(S).
struct Spectrum {
    int n = 0;
    std::vector<std::int64_t> coeffs;

    std::uint64_t size() const { return coeffs.size(); }
    std::int64_t operator[](std::uint64_t mask) const { return coeffs[mask]; }
    Rational fhat(std::uint64_t mask) const { return Rational::dyadic(coeffs[mask], n); }
};

struct SpectrumTerm {
    Mask mask;
    Rational value;  // fhat(S)
};

// Nonzero coefficients only, masks ascending. Used for closed forms whose
// arity is beyond the dense guard.
struct SparseSpectrum {
    int n = 0;
    std::vector<SpectrumTerm> terms;

    std::size_t size() const { return terms.size(); }
    Rational at(Mask m) const;
    void normalize();  // sort by mask, merge duplicates, drop zeros
};

SparseSpectrum to_sparse(const Spectrum& s);
Spectrum to_dense(const SparseSpectrum& s);

// In-place unnormalized Walsh-Hadamard butterflies.
void wht_inplace(std::vector<std::int64_t>& v, bool parallel);

Spectrum wht(const BooleanFunction& f);
Spectrum wht_serial(const BooleanFunction& f);
BooleanFunction inverse_wht(const Spectrum& s);

int f2_degree(const BooleanFunction& f);

// Affine restriction {x : chi_gamma(x) = b_gamma for all gamma}. Pivots are
// chosen lowest-index first; free coordinates are kept in increasing order.
class RestrictionMap {
public:
    RestrictionMap(int n, std::vector<Mask> gamma, std::vector<int> b);

    int n() const { return n_; }
    const std::vector<Mask>& gamma() const { return gamma_; }
    const std::vector<int>& b() const { return b_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<int>& free() const { return free_; }
    Mask free_mask() const { return free_mask_; }
    int free_arity() const { return static_cast<int>(free_.size()); }

    // The point of the affine set whose free coordinates are z.
    Mask solve(std::uint64_t z) const;
    // A mask over the free coordinates, expressed in original coordinates.
    Mask lift(Mask restricted) const { return scatter_bits(static_cast<std::uint64_t>(restricted), free_mask_); }
    bool contains(Mask x) const;

private:
    int n_;
    std::vector<Mask> gamma_;
    std::vector<int> b_;
    std::vector<int> pivots_;
    std::vector<int> free_;
    Mask free_mask_ = 0;
    std::vector<Mask> rows_;  // reduced rows, one per pivot
    std::vector<int> rhs_;    // 1 iff the row's parity must be odd
};

BooleanFunction restrict(const BooleanFunction& f, const RestrictionMap& r);

// All 2^|gamma| restrictions at once. Entry a has b_i = -1 iff bit i of a is set.
std::vector<BooleanFunction> restrict_all(const BooleanFunction& f, const std::vector<Mask>& gamma);

BooleanFunction xor_power(const BooleanFunction& f, int t);

// columns[j] = B e_j. Returns coeffs'[alpha] = coeffs[B alpha].
Spectrum basis_change(const Spectrum& s, const std::vector<Mask>& columns);

}  // namespace boolspec
