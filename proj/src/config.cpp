#include "boolspec/config.hpp"

#include <cstdlib>
#include <string>

#include "boolspec/errors.hpp"

namespace boolspec {

int arity_guard() {
    if (const char* env = std::getenv("BOOLSPEC_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= 40) return static_cast<int>(v);
    }
    return kDefaultArityGuard;
}

void check_arity(int n, const char* what) {
    int guard = arity_guard();
    if (n < 0 || n > guard) {
        throw SizeGuard(std::string(what) + ": arity " + std::to_string(n) +
                        " exceeds guard " + std::to_string(guard));
    }
}

}  // namespace boolspec
