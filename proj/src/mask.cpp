#include "boolspec/mask.hpp"

#include "boolspec/errors.hpp"

namespace boolspec {

std::string to_hex(Mask m) {
    static const char* digits = "0123456789abcdef";
    if (m == 0) return "0x0";
    std::string out;
    while (m) {
        out.push_back(digits[static_cast<int>(m & 0xf)]);
        m >>= 4;
    }
    return "0x" + std::string(out.rbegin(), out.rend());
}

Mask parse_hex(const std::string& s) {
    std::size_t i = 0;
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) i = 2;
    if (i == s.size()) throw ParseError("empty hex mask '" + s + "'");
    if (s.size() - i > 32) throw ParseError("hex mask too wide '" + s + "'");
    Mask m = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw ParseError("bad hex digit in '" + s + "'");
        m = (m << 4) | Mask(v);
    }
    return m;
}

}  // namespace boolspec
