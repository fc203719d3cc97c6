#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "boolspec/core.hpp"

namespace boolspec {

struct Failure {
    std::string function;
    std::string check;
    std::string lhs;
    std::string rhs;
};

struct SuiteResult {
    std::string name;
    std::int64_t cases = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;
    double seconds = 0;

    bool passed() const { return failures.empty(); }
    void fail(std::string function, std::string check, std::string lhs, std::string rhs) {
        failures.push_back({std::move(function), std::move(check), std::move(lhs), std::move(rhs)});
    }
    // Records a failure unless ok; returns ok.
    bool expect(bool ok, const std::string& function, const std::string& check, const std::string& lhs = "",
                const std::string& rhs = "") {
        if (!ok) fail(function, check, lhs, rhs);
        return ok;
    }
};

struct SuiteOptions {
    int max_n = 4;
    int samples = 100;
    std::uint64_t seed = 1;
};

SuiteResult suite_core(const SuiteOptions& o);
SuiteResult suite_tables(const SuiteOptions& o);
SuiteResult suite_composition(const SuiteOptions& o);
SuiteResult suite_napdt(const SuiteOptions& o);
SuiteResult suite_chlt(const SuiteOptions& o);
SuiteResult suite_beating_chang();
SuiteResult suite_chang(const SuiteOptions& o);
SuiteResult suite_witness(const SuiteOptions& o);

std::vector<std::string> suite_names();
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& o);

// Deterministic: excludes wall time.
nlohmann::json failure_json(const SuiteResult& r);
nlohmann::json summary_json(const SuiteResult& r);

// Helpers shared with tests.
std::string function_id(const BooleanFunction& f);
BooleanFunction random_function(int n, std::mt19937_64& rng);
BooleanFunction function_from_index(int n, std::uint64_t index);
std::vector<Mask> random_independent(int n, int count, std::mt19937_64& rng);

// Exact checks on one restriction family; used by the core suite.
struct RestrictionExpectation {
    Rational mean_delta;
    Rational mean_kplus;
    std::int64_t ell = 0;
    bool any_nonconstant = false;
};
RestrictionExpectation restriction_expectation(const BooleanFunction& f, const std::vector<Mask>& gamma);

struct ScanRow {
    std::uint64_t index = 0;
    std::uint64_t w = 0;
    std::int64_t k = 0;
    int r = 0;
    Rational kprime, kdprime;
    int degf2 = 0;
    double kline = 0, kprime_curve = 0, kdprime_curve = 0, chang_best = 0;
    bool has_curves = false;
    bool has_chang = false;
    int failed_checks = 0;
};

ScanRow scan_row(int n, std::uint64_t index);
// All 2^(2^n) functions (n <= 4), or `samples` seeded random indices when
// samples > 0. Rows sorted by index.
std::vector<ScanRow> scan(int n, int samples, std::uint64_t seed, bool parallel = true);
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

enum class PlotKind { KPrime, KdPrime };
// Columns x, kline, curve, cl_curve on a log-spaced grid of the auxiliary
// measure (k' or k'').
void write_plotdata(std::ostream& out, PlotKind kind, double rho, double kappa, int points = 64);

}  // namespace boolspec
