#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "boolspec/bounds.hpp"
#include "boolspec/constructions.hpp"
#include "boolspec/core.hpp"
#include "boolspec/measures.hpp"
#include "boolspec/napdt.hpp"

namespace boolspec {

// Truth-table text: decimal n, newline, 2^n characters from {+,-}.
BooleanFunction read_truth_table(std::istream& in);
BooleanFunction read_truth_table_file(const std::string& path);
void write_truth_table(std::ostream& out, const BooleanFunction& f);

// Header mask_hex,c,fhat_num,fhat_den; nonzero rows only, masks ascending.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);

nlohmann::json rational_json(const Rational& r);
nlohmann::json to_json(const SpectralProfile& p);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const NapdtTrace& t);
nlohmann::json to_json(const FamilySpec& s);
FamilySpec family_from_json(const nlohmann::json& j);

}  // namespace boolspec
