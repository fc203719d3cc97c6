#pragma once

namespace boolspec {

constexpr int kDefaultArityGuard = 22;
constexpr int kExactSearchGuard = 10;
constexpr int kAssignmentGuard = 20;

// Maximum truth-table arity. BOOLSPEC_MAX_N overrides the default.
int arity_guard();

void check_arity(int n, const char* what);

}  // namespace boolspec
