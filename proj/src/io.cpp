#include "boolspec/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "boolspec/errors.hpp"

namespace boolspec {

using nlohmann::json;

BooleanFunction read_truth_table(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("truth table: missing arity line");
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(line, &used);
    } catch (const std::exception&) {
        throw ParseError("truth table: bad arity line '" + line + "'");
    }
    while (used < line.size() && std::isspace(static_cast<unsigned char>(line[used]))) ++used;
    if (used != line.size() || n < 0) throw ParseError("truth table: bad arity line '" + line + "'");
    if (n > 40) throw SizeGuard("truth table: arity " + std::to_string(n) + " too large");
    std::string table;
    if (!std::getline(in, table)) throw ParseError("truth table: missing table line");
    while (!table.empty() && std::isspace(static_cast<unsigned char>(table.back()))) table.pop_back();
    return BooleanFunction::from_string(n, table);
}

BooleanFunction read_truth_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_truth_table(in);
}

void write_truth_table(std::ostream& out, const BooleanFunction& f) {
    out << f.arity() << "\n" << f.to_string() << "\n";
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    out << "mask_hex,c,fhat_num,fhat_den\n";
    for (std::uint64_t m = 0; m < s.size(); ++m) {
        if (s.coeffs[m] == 0) continue;
        Rational f = s.fhat(m);
        out << to_hex(Mask(m)) << "," << s.coeffs[m] << "," << f.num() << "," << f.den() << "\n";
    }
}

json rational_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

json to_json(const SpectralProfile& p) {
    json j;
    j["n"] = p.n;
    j["delta"] = rational_json(p.delta);
    j["k"] = p.k;
    j["r"] = p.r;
    j["kprime"] = rational_json(p.kprime);
    j["kdprime"] = rational_json(p.kdprime);
    j["degf2"] = p.degf2 ? json(*p.degf2) : json(nullptr);
    j["degenerate"] = p.degenerate;
    return j;
}

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const BoundReport& b) {
    json j;
    j["chang_best"] = opt(b.chang_best);
    j["chang_t"] = b.chang_t ? rational_json(*b.chang_t) : json(nullptr);
    j["kline"] = opt(b.kline);
    j["kprime_curve"] = opt(b.kprime_curve);
    j["kdprime_curve"] = opt(b.kdprime_curve);
    json v = json::array();
    for (const auto& x : b.verdicts) {
        json e{{"name", x.name}, {"pass", x.pass}, {"skipped", x.skipped}};
        if (!x.skipped) {
            e["lhs"] = x.lhs;
            e["rhs"] = x.rhs;
        }
        v.push_back(e);
    }
    j["verdicts"] = v;
    return j;
}

json to_json(const NapdtTrace& t) {
    json j;
    j["mode"] = t.mode == NapdtMode::Exact ? "exact" : "greedy";
    j["n"] = t.n;
    j["ell_0"] = t.ell0;
    json its = json::array();
    for (const auto& it : t.iterations) {
        json e;
        e["q_i"] = it.q;
        e["ell_i"] = it.ell;
        e["b_star"] = it.b_star ? json(*it.b_star) : json(nullptr);
        e["delta_fmin"] = it.b_star ? rational_json(it.delta_fmin) : json(nullptr);
        e["k_fmin"] = it.b_star ? json(it.k_fmin) : json(nullptr);
        e["kplus_fmin"] = it.b_star ? json(it.kplus_fmin) : json(nullptr);
        e["main_lemma_chosen"] = it.main_lemma_chosen;
        e["main_lemma_exists"] = it.main_lemma_exists;
        if (t.mode == NapdtMode::Exact) e["qi_bound"] = it.qi_bound;
        its.push_back(e);
    }
    j["iterations"] = its;
    json g = json::array();
    for (Mask m : t.gamma) g.push_back(to_hex(m));
    j["gamma"] = g;
    j["all_constant"] = t.all_constant;
    return j;
}

json to_json(const FamilySpec& s) {
    json j;
    j["family"] = family_name(s.family);
    switch (s.family) {
        case Family::And:
        case Family::Parity:
        case Family::BentIp: j["n"] = s.n; break;
        case Family::Addressing: j["t"] = s.t; break;
        case Family::AdTt: j["t"] = s.t; j["tprime"] = s.tprime; break;
        case Family::AdTta: j["t"] = s.t; j["tprime"] = s.tprime; j["a"] = s.a; break;
        case Family::Ab: j["tprime"] = s.tprime; j["ell"] = s.ell; break;
        case Family::Aab: j["t"] = s.t; j["tprime"] = s.tprime; j["ell"] = s.ell; break;
        case Family::Mand: j["tprime"] = s.tprime; j["p"] = s.p; break;
        case Family::Mad: j["t"] = s.t; j["tprime"] = s.tprime; j["p"] = s.p; break;
        case Family::Composed:
            j["t"] = s.t;
            if (s.inner) j["inner"] = json{{"n", s.inner->arity()}, {"table", s.inner->to_string()}};
            break;
    }
    return j;
}

FamilySpec family_from_json(const json& j) {
    FamilySpec s;
    try {
        s.family = parse_family(j.at("family").get<std::string>());
        s.n = j.value("n", 0);
        s.t = j.value("t", 0);
        s.tprime = j.value("tprime", 0);
        s.a = j.value("a", 0);
        s.ell = j.value("ell", 0);
        s.p = j.value("p", 0);
        if (j.contains("inner")) {
            const auto& in = j.at("inner");
            s.inner = std::make_shared<const BooleanFunction>(
                BooleanFunction::from_string(in.at("n").get<int>(), in.at("table").get<std::string>()));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("family spec: ") + e.what());
    }
    validate(s);
    return s;
}

}  // namespace boolspec
