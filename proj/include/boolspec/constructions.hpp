#pragma once

#include <memory>
#include <optional>
#include <string>

#include "boolspec/core.hpp"
#include "boolspec/measures.hpp"

namespace boolspec {

enum class Family { And, Parity, BentIp, Addressing, AdTt, AdTta, Ab, Aab, Mand, Mad, Composed };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// Sizes follow the paper: t, tprime, a, ell are powers of two; n is the arity
// of and/parity/bent_ip; p counts the extra AND inputs of mand/mad.
struct FamilySpec {
    Family family = Family::And;
    int n = 0;
    int t = 0;
    int tprime = 0;
    int a = 0;
    int ell = 0;
    int p = 0;
    std::shared_ptr<const BooleanFunction> inner;  // composed only

    static FamilySpec and_n(int n) { FamilySpec s; s.family = Family::And; s.n = n; return s; }
    static FamilySpec parity_n(int n) { FamilySpec s; s.family = Family::Parity; s.n = n; return s; }
    static FamilySpec bent_ip(int n) { FamilySpec s; s.family = Family::BentIp; s.n = n; return s; }
    static FamilySpec addressing(int t) { FamilySpec s; s.family = Family::Addressing; s.t = t; return s; }
    static FamilySpec ad_tt(int t, int tp) { FamilySpec s; s.family = Family::AdTt; s.t = t; s.tprime = tp; return s; }
    static FamilySpec ad_tta(int t, int tp, int a) {
        FamilySpec s; s.family = Family::AdTta; s.t = t; s.tprime = tp; s.a = a; return s;
    }
    static FamilySpec ab(int tp, int ell) { FamilySpec s; s.family = Family::Ab; s.tprime = tp; s.ell = ell; return s; }
    static FamilySpec aab(int t, int tp, int ell) {
        FamilySpec s; s.family = Family::Aab; s.t = t; s.tprime = tp; s.ell = ell; return s;
    }
    static FamilySpec mand(int tp, int p) { FamilySpec s; s.family = Family::Mand; s.tprime = tp; s.p = p; return s; }
    static FamilySpec mad(int t, int tp, int p) {
        FamilySpec s; s.family = Family::Mad; s.t = t; s.tprime = tp; s.p = p; return s;
    }
    static FamilySpec composed(int t, BooleanFunction g) {
        FamilySpec s;
        s.family = Family::Composed;
        s.t = t;
        s.inner = std::make_shared<const BooleanFunction>(std::move(g));
        return s;
    }

    std::string label() const;
};

// Throws InvalidSpec naming the violated constraint.
void validate(const FamilySpec& spec);
int arity(const FamilySpec& spec);

BooleanFunction make(const FamilySpec& spec);

// Exact spectrum from the closed-form expansions. Throws NoClosedForm for mad.
SparseSpectrum closed_form_spectrum(const FamilySpec& spec);

// Profile from the truth table when the arity fits the guard, otherwise from
// the closed form (degf2 then unknown).
SpectralProfile measure(const FamilySpec& spec);
SparseSpectrum spectrum_of(const FamilySpec& spec);

enum class WitnessKind { KLine, KPrimeCurve, KdPrimeCurve, KdPrimeLine };

std::string witness_name(WitnessKind k);
WitnessKind parse_witness(const std::string& name);

struct Range {
    double lo = 0;
    double hi = 0;
    bool contains(double v) const { return v >= lo && v <= hi; }
};

struct WitnessPlan {
    WitnessKind kind;
    FamilySpec spec;
    Range r, k, aux, delta;  // aux is k' or k'' depending on kind
    bool aux_is_kdprime = false;
};

// Instantiates the parameter-setting formulas, rounds every size down or up
// to a power of two (ell to a power of four, p to an integer), keeps the valid
// rounding whose measures are closest to the targets, and attaches the
// expected ranges with the given sandwich factor.
WitnessPlan witness(WitnessKind kind, double rho, double kappa, double kappa_aux, double factor = 8.0);

}  // namespace boolspec
