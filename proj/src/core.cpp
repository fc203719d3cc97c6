#include "boolspec/core.hpp"

#include <algorithm>
#include <bit>

#include "boolspec/config.hpp"
#include "boolspec/errors.hpp"
#include "boolspec/gf2.hpp"

namespace boolspec {

namespace {

std::size_t word_count(int n) { return n >= 6 ? (std::size_t(1) << (n - 6)) : 1; }

std::uint64_t tail_mask(int n) {
    return n >= 6 ? ~std::uint64_t(0) : ((std::uint64_t(1) << (1u << n)) - 1);
}

constexpr std::int64_t kParallelMin = std::int64_t(1) << 14;

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
    if (n < 0 || n > 40) throw SizeGuard("arity " + std::to_string(n) + " not representable");
    words_.assign(word_count(n), 0);
}

BooleanFunction BooleanFunction::from_string(int n, const std::string& signs) {
    BooleanFunction f(n);
    if (signs.size() != f.size())
        throw ParseError("expected " + std::to_string(f.size()) + " table entries, got " +
                         std::to_string(signs.size()));
    for (std::uint64_t i = 0; i < f.size(); ++i) {
        char c = signs[i];
        if (c == '-') f.set(i, true);
        else if (c != '+') throw ParseError(std::string("bad table character '") + c + "'");
    }
    return f;
}

void BooleanFunction::set(std::uint64_t idx, bool is_minus) {
    std::uint64_t m = std::uint64_t(1) << (idx & 63);
    if (is_minus) words_[idx >> 6] |= m;
    else words_[idx >> 6] &= ~m;
}

std::uint64_t BooleanFunction::weight() const {
    std::uint64_t w = 0;
    for (auto x : words_) w += std::popcount(x);
    return w;
}

bool BooleanFunction::is_constant() const {
    auto w = weight();
    return w == 0 || w == size();
}

std::string BooleanFunction::to_string() const {
    std::string s(size(), '+');
    for (std::uint64_t i = 0; i < size(); ++i)
        if (minus(i)) s[i] = '-';
    return s;
}

Rational SparseSpectrum::at(Mask m) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), m,
                               [](const SpectrumTerm& t, Mask key) { return t.mask < key; });
    if (it != terms.end() && it->mask == m) return it->value;
    return Rational(0);
}

void SparseSpectrum::normalize() {
    std::sort(terms.begin(), terms.end(),
              [](const SpectrumTerm& a, const SpectrumTerm& b) { return a.mask < b.mask; });
    std::vector<SpectrumTerm> out;
    for (const auto& t : terms) {
        if (!out.empty() && out.back().mask == t.mask) out.back().value += t.value;
        else out.push_back(t);
    }
    std::erase_if(out, [](const SpectrumTerm& t) { return t.value.is_zero(); });
    terms = std::move(out);
}

SparseSpectrum to_sparse(const Spectrum& s) {
    SparseSpectrum out;
    out.n = s.n;
    for (std::uint64_t m = 0; m < s.size(); ++m)
        if (s.coeffs[m] != 0) out.terms.push_back({Mask(m), s.fhat(m)});
    return out;
}

Spectrum to_dense(const SparseSpectrum& s) {
    check_arity(s.n, "to_dense");
    Spectrum out;
    out.n = s.n;
    out.coeffs.assign(std::size_t(1) << s.n, 0);
    for (const auto& t : s.terms) {
        Rational c = t.value * pow2(s.n);
        if (!c.is_integer()) throw NotBoolean("coefficient not a multiple of 2^-n");
        out.coeffs[static_cast<std::uint64_t>(t.mask)] = c.num();
    }
    return out;
}

void wht_inplace(std::vector<std::int64_t>& v, bool parallel) {
    const std::int64_t size = static_cast<std::int64_t>(v.size());
    const std::int64_t half = size / 2;
    std::int64_t* p = v.data();
    for (std::int64_t len = 1; len < size; len <<= 1) {
        const std::int64_t lo = len - 1;
#pragma omp parallel for schedule(static) if (parallel && size >= kParallelMin)
        for (std::int64_t k = 0; k < half; ++k) {
            std::int64_t i = ((k & ~lo) << 1) | (k & lo);
            std::int64_t a = p[i], b = p[i + len];
            p[i] = a + b;
            p[i + len] = a - b;
        }
    }
}

namespace {

std::vector<std::int64_t> signed_values(const BooleanFunction& f) {
    std::vector<std::int64_t> v(f.size());
    for (std::uint64_t i = 0; i < f.size(); ++i) v[i] = f.value(i);
    return v;
}

}  // namespace

Spectrum wht(const BooleanFunction& f) {
    Spectrum s;
    s.n = f.arity();
    s.coeffs = signed_values(f);
    wht_inplace(s.coeffs, true);
    return s;
}

Spectrum wht_serial(const BooleanFunction& f) {
    Spectrum s;
    s.n = f.arity();
    s.coeffs = signed_values(f);
    auto& v = s.coeffs;
    for (std::size_t len = 1; len < v.size(); len <<= 1)
        for (std::size_t i = 0; i < v.size(); i += 2 * len)
            for (std::size_t j = i; j < i + len; ++j) {
                std::int64_t a = v[j], b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
    return s;
}

BooleanFunction inverse_wht(const Spectrum& s) {
    if (s.coeffs.size() != (std::size_t(1) << s.n)) throw NotBoolean("spectrum length is not 2^n");
    auto v = s.coeffs;
    wht_inplace(v, true);
    const std::int64_t scale = std::int64_t(1) << s.n;
    BooleanFunction f(s.n);
    for (std::uint64_t i = 0; i < v.size(); ++i) {
        if (v[i] == -scale) f.set(i, true);
        else if (v[i] != scale)
            throw NotBoolean("reconstructed value " + std::to_string(v[i]) + "/" +
                             std::to_string(scale) + " at index " + std::to_string(i));
    }
    return f;
}

int f2_degree(const BooleanFunction& f) {
    // Moebius transform of the 0/1 table over GF(2), bit-packed.
    static const std::uint64_t in_word[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
    auto w = f.words();
    const int n = f.arity();
    for (int s = 0; s < std::min(n, 6); ++s)
        for (auto& x : w) x ^= (x & in_word[s]) << (1u << s);
    for (std::size_t step = 1; step < w.size(); step <<= 1)
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!(j & step)) w[j | step] ^= w[j];
    const std::uint64_t tail = tail_mask(n);
    int deg = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        std::uint64_t x = w[j] & tail;
        int hi = std::popcount(j);
        while (x) {
            int b = std::countr_zero(x);
            deg = std::max(deg, hi + std::popcount(static_cast<unsigned>(b)));
            x &= x - 1;
        }
    }
    return deg;
}

RestrictionMap::RestrictionMap(int n, std::vector<Mask> gamma, std::vector<int> b)
    : n_(n), gamma_(std::move(gamma)), b_(std::move(b)) {
    if (gamma_.size() != b_.size()) throw InvalidSpec("restriction: |gamma| != |b|");
    if (static_cast<int>(gamma_.size()) > n) throw DependentMasks("restriction: |gamma| > n");
    for (std::size_t i = 0; i < gamma_.size(); ++i) {
        if (b_[i] != 1 && b_[i] != -1) throw InvalidSpec("restriction: signs must be +1 or -1");
        if (gamma_[i] & ~low_bits(n)) throw InvalidSpec("restriction: mask outside arity");
    }

    std::vector<Mask> rows = gamma_;
    std::vector<int> rhs(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i) rhs[i] = b_[i] == -1;

    // Row echelon with the lowest available column as pivot, fully reduced.
    std::size_t done = 0;
    for (int col = 0; col < n && done < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = done; i < rows.size(); ++i)
            if (test_bit(rows[i], col)) { sel = i; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[done], rows[sel]);
        std::swap(rhs[done], rhs[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != done && test_bit(rows[i], col)) {
                rows[i] ^= rows[done];
                rhs[i] ^= rhs[done];
            }
        pivots_.push_back(col);
        ++done;
    }
    if (done < rows.size()) throw DependentMasks("restriction: parity masks are linearly dependent");
    rows_ = std::move(rows);
    rhs_ = std::move(rhs);

    Mask piv = 0;
    for (int p : pivots_) piv |= bit(p);
    for (int i = 0; i < n; ++i)
        if (!test_bit(piv, i)) {
            free_.push_back(i);
            free_mask_ |= bit(i);
        }
}

Mask RestrictionMap::solve(std::uint64_t z) const {
    Mask x = scatter_bits(z, free_mask_);
    Mask fixed = x;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rhs_[i] ^ parity(rows_[i] & fixed)) x |= bit(pivots_[i]);
    return x;
}

bool RestrictionMap::contains(Mask x) const {
    for (std::size_t i = 0; i < gamma_.size(); ++i)
        if (parity(gamma_[i] & x) != (b_[i] == -1)) return false;
    return true;
}

BooleanFunction restrict(const BooleanFunction& f, const RestrictionMap& r) {
    if (r.n() != f.arity()) throw InvalidSpec("restriction arity does not match function");
    BooleanFunction g(r.free_arity());
    for (std::uint64_t z = 0; z < g.size(); ++z)
        g.set(z, f.minus(static_cast<std::uint64_t>(r.solve(z))));
    return g;
}

std::vector<BooleanFunction> restrict_all(const BooleanFunction& f, const std::vector<Mask>& gamma) {
    const int n = f.arity();
    RestrictionMap shape(n, gamma, std::vector<int>(gamma.size(), 1));
    const std::size_t count = std::size_t(1) << gamma.size();
    std::vector<BooleanFunction> out(count, BooleanFunction(shape.free_arity()));
    const Mask free = shape.free_mask();
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        std::size_t a = 0;
        for (std::size_t i = 0; i < gamma.size(); ++i)
            a |= std::size_t(parity(gamma[i] & Mask(x))) << i;
        if (f.minus(x)) out[a].set(gather_bits(Mask(x), free), true);
    }
    return out;
}

BooleanFunction xor_power(const BooleanFunction& f, int t) {
    if (t < 1) throw InvalidSpec("xor_power: t must be >= 1");
    const int n = f.arity();
    check_arity(n * t, "xor_power");
    const std::uint64_t block = f.size();
    BooleanFunction F(n * t);
    for (std::uint64_t idx = 0; idx < F.size(); ++idx) {
        bool m = false;
        std::uint64_t rest = idx;
        for (int j = 0; j < t; ++j) {
            m ^= f.minus(rest & (block - 1));
            rest >>= n;
        }
        if (m) F.set(idx, true);
    }
    return F;
}

Spectrum basis_change(const Spectrum& s, const std::vector<Mask>& columns) {
    const int n = s.n;
    if (static_cast<int>(columns.size()) != n) throw SingularMatrix("basis_change: matrix is not n x n");
    for (auto c : columns)
        if (c & ~low_bits(n)) throw SingularMatrix("basis_change: column outside arity");
    if (rank_of(columns) != n) throw SingularMatrix("basis_change: matrix is singular over GF(2)");
    Spectrum out;
    out.n = n;
    out.coeffs.assign(s.size(), 0);
    std::vector<std::uint64_t> image(s.size(), 0);
    for (std::uint64_t a = 1; a < s.size(); ++a)
        image[a] = image[a & (a - 1)] ^ static_cast<std::uint64_t>(columns[std::countr_zero(a)]);
    for (std::uint64_t a = 0; a < s.size(); ++a) out.coeffs[a] = s.coeffs[image[a]];
    return out;
}

}  // namespace boolspec
