#include "eksr/core/instance.hpp"

#include "eksr/core/error.hpp"

#include <charconv>
#include <sstream>

namespace eksr {

Instance::Instance(Formula formula, Assignment start, Assignment end)
    : formula_(std::move(formula)), start_(std::move(start)), end_(std::move(end)) {
    auto n = static_cast<std::size_t>(formula_.num_vars());
    if (start_.size() != n || end_.size() != n)
        throw DomainError("endpoint length does not match the variable count");
    if (satisfied_count(formula_, start_) != formula_.num_clauses())
        throw DomainError("start assignment does not satisfy every clause");
    if (satisfied_count(formula_, end_) != formula_.num_clauses())
        throw DomainError("end assignment does not satisfy every clause");
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<long long> to_int(std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

struct Parsed {
    Formula formula;
    std::optional<Assignment> start, end;
    int start_line = 0, end_line = 0;
};

Parsed parse(std::string_view text) {
    int lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0, k = 0;
    std::vector<Clause> clauses;
    std::optional<Assignment> s, t;
    int s_line = 0, t_line = 0;

    auto read_bits = [&](std::string_view tok) {
        for (char c : tok)
            if (c != '0' && c != '1')
                throw ParseError(ParseErrorKind::MalformedAssignment, lineno,
                                 "'" + std::string(tok) + "' is not a bitstring");
        if (static_cast<long long>(tok.size()) != n)
            throw ParseError(ParseErrorKind::BitstringLengthMismatch, lineno,
                             "expected " + std::to_string(n) + " bits, got " + std::to_string(tok.size()));
        return Assignment::from_string(tok);
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;

        if (!have_header) {
            if (tok[0] != "p") throw ParseError(ParseErrorKind::MissingHeader, lineno, "expected 'p eksr n m k'");
            if (tok.size() != 5 || tok[1] != "eksr")
                throw ParseError(ParseErrorKind::MalformedHeader, lineno, "expected 'p eksr n m k'");
            auto pn = to_int(tok[2]), pm = to_int(tok[3]), pk = to_int(tok[4]);
            if (!pn || !pm || !pk || *pn < 1 || *pm < 1 || *pk < 1 || *pk > *pn)
                throw ParseError(ParseErrorKind::MalformedHeader, lineno, "need 1 <= k <= n and m >= 1");
            n = *pn, m = *pm, k = *pk;
            have_header = true;
            continue;
        }
        if (tok[0] == "p") throw ParseError(ParseErrorKind::MalformedHeader, lineno, "duplicate header");

        if (tok[0] == "s" || tok[0] == "t") {
            if (static_cast<long long>(clauses.size()) != m)
                throw ParseError(ParseErrorKind::ClauseCountMismatch, lineno,
                                 "header declares " + std::to_string(m) + " clauses, found " +
                                     std::to_string(clauses.size()));
            if (tok.size() != 2)
                throw ParseError(ParseErrorKind::MalformedAssignment, lineno, "expected one bitstring");
            bool is_s = tok[0] == "s";
            if ((is_s && (s || t)) || (!is_s && (t || !s)))
                throw ParseError(ParseErrorKind::UnexpectedLine, lineno, "expected 's' then 't' exactly once");
            (is_s ? s : t) = read_bits(tok[1]);
            (is_s ? s_line : t_line) = lineno;
            continue;
        }

        if (s || t) throw ParseError(ParseErrorKind::UnexpectedLine, lineno, "clause after assignments");
        std::vector<Literal> lits;
        bool terminated = false;
        for (std::size_t i = 0; i < tok.size(); ++i) {
            auto v = to_int(tok[i]);
            if (!v) throw ParseError(ParseErrorKind::UnexpectedLine, lineno, "'" + std::string(tok[i]) + "'");
            if (*v == 0) {
                if (i + 1 != tok.size())
                    throw ParseError(ParseErrorKind::UnexpectedLine, lineno, "tokens after terminating 0");
                terminated = true;
                break;
            }
            long long var = *v < 0 ? -*v : *v;
            if (var > n)
                throw ParseError(ParseErrorKind::VariableOutOfRange, lineno,
                                 "variable " + std::to_string(var) + " > " + std::to_string(n));
            lits.push_back(Literal::from_dimacs(static_cast<int>(*v)));
        }
        if (!terminated) throw ParseError(ParseErrorKind::UnexpectedLine, lineno, "clause not terminated by 0");
        if (static_cast<long long>(lits.size()) != k)
            throw ParseError(ParseErrorKind::WrongLiteralCount, lineno,
                             "expected " + std::to_string(k) + " literals, got " + std::to_string(lits.size()));
        Clause c(std::move(lits));
        if (!c.has_distinct_vars()) throw ParseError(ParseErrorKind::DuplicateVariable, lineno, "");
        if (static_cast<long long>(clauses.size()) == m)
            throw ParseError(ParseErrorKind::ClauseCountMismatch, lineno,
                             "more than " + std::to_string(m) + " clauses");
        clauses.push_back(std::move(c));
    }

    if (!have_header) throw ParseError(ParseErrorKind::MissingHeader, lineno, "no 'p eksr' line");
    if (static_cast<long long>(clauses.size()) != m)
        throw ParseError(ParseErrorKind::ClauseCountMismatch, lineno,
                         "header declares " + std::to_string(m) + " clauses, found " +
                             std::to_string(clauses.size()));
    Parsed out{Formula(static_cast<int>(n), static_cast<int>(k), std::move(clauses)), std::move(s),
               std::move(t), s_line, t_line};
    return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    Parsed p = parse(text);
    if (!p.start) throw ParseError(ParseErrorKind::MissingAssignment, 0, "no 's' line");
    if (!p.end) throw ParseError(ParseErrorKind::MissingAssignment, 0, "no 't' line");
    auto m = p.formula.num_clauses();
    if (satisfied_count(p.formula, *p.start) != m)
        throw ParseError(ParseErrorKind::EndpointNotSatisfying, p.start_line, "start");
    if (satisfied_count(p.formula, *p.end) != m)
        throw ParseError(ParseErrorKind::EndpointNotSatisfying, p.end_line, "end");
    return Instance(std::move(p.formula), std::move(*p.start), std::move(*p.end));
}

Formula parse_formula(std::string_view text) { return parse(text).formula; }

std::string serialize_formula(const Formula& f) {
    if (!f.width()) throw DomainError("cannot serialize a mixed-width formula");
    std::ostringstream out;
    out << "p eksr " << f.num_vars() << ' ' << f.num_clauses() << ' ' << *f.width() << '\n';
    for (const auto& c : f.clauses()) {
        for (const auto& l : c.literals()) out << l.to_dimacs() << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string serialize_instance(const Instance& inst) {
    return serialize_formula(inst.formula()) + "s " + inst.start().to_string() + "\nt " +
           inst.end().to_string() + "\n";
}

SequenceCheck check_sequence(const Instance& inst, const ReconfSequence& s) {
    SequenceCheck r;
    auto n = static_cast<std::size_t>(inst.num_vars());
    if (s.empty()) {
        r.reason = "empty sequence";
        return r;
    }
    for (std::size_t i = 0; i < s.length(); ++i)
        if (s.steps()[i].size() != n) {
            r.reason = "step " + std::to_string(i + 1) + " has " + std::to_string(s.steps()[i].size()) +
                       " bits, expected " + std::to_string(n);
            return r;
        }
    if (s.front() != inst.start()) {
        r.reason = "sequence does not start at the start assignment";
        return r;
    }
    if (s.back() != inst.end()) {
        r.reason = "sequence does not end at the end assignment";
        return r;
    }
    if (auto bad = s.adjacency_violation()) {
        r.reason = "steps " + std::to_string(*bad) + " and " + std::to_string(*bad + 1) +
                   " differ in more than one variable";
        return r;
    }
    r.valid = true;
    r.value = seq_value(inst.formula(), s);
    return r;
}

}  // namespace eksr
