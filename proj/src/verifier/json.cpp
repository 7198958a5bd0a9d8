#include "eksr/verifier/verifier.hpp"

#include "eksr/core/error.hpp"

#include <json.hpp>

namespace eksr {

namespace {

constexpr char hex_digits[] = "0123456789abcdef";

// Most significant nibble first; view v is bit v of the number.
std::string table_to_hex(const std::vector<bool>& table) {
    const std::size_t nibbles = (table.size() + 3) / 4;
    std::string s(nibbles, '0');
    for (std::size_t n = 0; n < nibbles; ++n) {
        unsigned d = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t v = 4 * n + b;
            if (v < table.size() && table[v]) d |= 1U << b;
        }
        s[nibbles - 1 - n] = hex_digits[d];
    }
    return s;
}

std::vector<bool> table_from_hex(const std::string& s, std::size_t size) {
    if (s.size() != (size + 3) / 4)
        throw DomainError("table \"" + s + "\" has the wrong number of hex digits");
    std::vector<bool> table(size, false);
    for (std::size_t n = 0; n < s.size(); ++n) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[s.size() - 1 - n])));
        const char* p = std::char_traits<char>::find(hex_digits, 16, c);
        if (p == nullptr) throw DomainError("table \"" + s + "\" is not hex");
        const unsigned d = static_cast<unsigned>(p - hex_digits);
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t v = 4 * n + b;
            const bool bit = (d >> b) & 1U;
            if (v < size) table[v] = bit;
            else if (bit) throw DomainError("table \"" + s + "\" sets bits past its size");
        }
    }
    return table;
}

}  // namespace

std::string verifier_to_json(const VerifierSpec& v) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : v.atoms)
        atoms.push_back({{"weight", to_string(a.weight)}, {"queries", a.queries}, {"table", table_to_hex(a.table)}});
    nlohmann::json j{{"proof_len", v.proof_len}, {"atoms", std::move(atoms)}};
    return j.dump();
}

VerifierSpec verifier_from_json(std::string_view text) {
    VerifierSpec v;
    try {
        const auto j = nlohmann::json::parse(text);
        v.proof_len = j.at("proof_len").get<int>();
        for (const auto& a : j.at("atoms")) {
            Atom atom;
            atom.weight = parse_rational(a.at("weight").get<std::string>());
            atom.queries = a.at("queries").get<std::vector<int>>();
            if (atom.queries.size() > VerifierSpec::default_q_cap)
                throw DomainError("atom reads more positions than the query cap");
            atom.table = table_from_hex(a.at("table").get<std::string>(), std::size_t{1} << atom.queries.size());
            v.atoms.push_back(std::move(atom));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed verifier JSON: ") + e.what());
    }
    validate(v);
    return v;
}

}  // namespace eksr
