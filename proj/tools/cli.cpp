#include "cli.hpp"

#include "eksr/approx/bounds.hpp"
#include "eksr/approx/rounding.hpp"
#include "eksr/core/error.hpp"
#include "eksr/core/instance.hpp"
#include "eksr/exact/hypercube.hpp"
#include "eksr/io/generator.hpp"
#include "eksr/reduce/reductions.hpp"
#include "eksr/verifier/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace eksr::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw DomainError("cannot write " + path);
}

Rational rational_arg(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const DomainError&) {
        throw UsageError(name + " expects a fraction p/q, got \"" + text + "\"");
    }
}

Assignment bits_arg(const std::string& name, const std::string& text) {
    try {
        return Assignment::from_string(text);
    } catch (const DomainError&) {
        throw UsageError(name + " expects a bitstring, got \"" + text + "\"");
    }
}

json rat(const Rational& r) { return to_string(r); }

json report(json value, const ReconfSequence* seq, json meta) {
    json steps = json::array(), flips = json::array();
    if (seq != nullptr) {
        for (const auto& a : seq->steps()) steps.push_back(a.to_string());
        for (int v : seq->flips()) flips.push_back(v);
    }
    return {{"value", std::move(value)}, {"sequence", std::move(steps)}, {"flips", std::move(flips)},
            {"meta", std::move(meta)}};
}

json instance_meta(const Formula& f) {
    json j{{"n", f.num_vars()}, {"m", f.num_clauses()}};
    if (auto k = f.width()) j["k"] = *k;
    return j;
}

// A sequence file is either a JSON report carrying "sequence" or
// whitespace-separated bitstrings.
ReconfSequence read_sequence(const std::string& text) {
    std::vector<Assignment> steps;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            const json doc = json::parse(text);
            for (const auto& s : doc.at("sequence")) steps.push_back(Assignment::from_string(s.get<std::string>()));
        } catch (const json::exception& e) {
            throw DomainError(std::string("malformed sequence JSON: ") + e.what());
        }
    } else {
        std::istringstream in(text);
        for (std::string tok; in >> tok;) steps.push_back(Assignment::from_string(tok));
    }
    return ReconfSequence(std::move(steps));
}

json params_json(const ReductionParams& p) {
    json j = json::object();
    if (p.K) j["K"] = *p.K;
    if (p.Gamma) j["Gamma"] = *p.Gamma;
    if (p.lambda) j["lambda"] = *p.lambda;
    if (p.delta) j["delta"] = rat(*p.delta);
    if (p.m1) j["m1"] = *p.m1;
    if (p.m2) j["m2"] = *p.m2;
    if (p.m3) j["m3"] = *p.m3;
    if (p.tuples_total) j["tuples_total"] = *p.tuples_total;
    if (p.tuples_disjoint) j["tuples_disjoint"] = *p.tuples_disjoint;
    if (p.discarded_fraction) j["discarded_fraction"] = rat(*p.discarded_fraction);
    return j;
}

struct Globals {
    std::uint64_t seed = 0;
    int cap = default_n_cap;
    int samples = 1;
};

struct Approx {
    std::string file;
    bool randomized = false;

    json run(const Globals& g) const {
        const Instance inst = parse_instance(read_file(file));
        const int k = *inst.formula().width();
        json meta = instance_meta(inst.formula());
        meta["bound"] = rat(approximation_factor(k));
        meta["bound_decimal"] = to_decimal(approximation_factor(k), 3);
        if (!randomized) {
            auto trace = derandomize_trace(inst);
            meta["mode"] = "derandomized";
            meta["rho"] = trace.plan.rho.to_string();
            meta["expected"] = rat(trace.initial_expectation);
            meta["surviving_fraction"] = rat(trace.surviving_fraction);
            const Rational v = seq_value(inst.formula(), trace.sequence);
            meta["value_decimal"] = to_decimal(v, 6);
            return report(rat(v), &trace.sequence, meta);
        }
        if (g.samples < 1) throw UsageError("--samples must be positive");
        Rational total = 0, best = -1;
        ReconfSequence best_seq;
        std::uint64_t best_seed = g.seed;
        for (int i = 0; i < g.samples; ++i) {
            const std::uint64_t s = g.seed + static_cast<std::uint64_t>(i);
            auto seq = randomized_round(inst, s);
            const Rational v = seq_value(inst.formula(), seq);
            total += v;
            if (v > best) best = v, best_seq = std::move(seq), best_seed = s;
        }
        meta["mode"] = "randomized";
        meta["seed"] = g.seed;
        meta["samples"] = g.samples;
        meta["best_seed"] = best_seed;
        meta["mean"] = rat(total / g.samples);
        meta["expected"] =
            rat(expected_sequence_value(inst, PartialAssignment(static_cast<std::size_t>(inst.num_vars()))));
        meta["value_decimal"] = to_decimal(best, 6);
        return report(rat(best), &best_seq, meta);
    }
};

struct Exact {
    std::string file;

    json run(const Globals& g) const {
        const Instance inst = parse_instance(read_file(file));
        auto r = opt_exact(inst, g.cap);
        json meta = instance_meta(inst.formula());
        meta["max_sat"] = rat(max_sat_value(inst.formula(), g.cap));
        meta["value_decimal"] = to_decimal(r.opt, 6);
        return report(rat(r.opt), &r.witness, meta);
    }
};

struct Value {
    std::string file, bits;

    json run(const Globals&) const {
        const Formula f = parse_formula(read_file(file));
        const Assignment a = bits_arg("assignment", bits);
        const Rational v = value(f, a);
        json meta = instance_meta(f);
        meta["satisfied"] = satisfied_count(f, a);
        ReconfSequence seq(a);
        return report(rat(v), &seq, meta);
    }
};

struct CheckSeq {
    std::string file, seq_file;

    json run(const Globals&, std::ostream& err, int& code) const {
        const Instance inst = parse_instance(read_file(file));
        const ReconfSequence seq = read_sequence(read_file(seq_file));
        const auto chk = check_sequence(inst, seq);
        json meta = instance_meta(inst.formula());
        meta["valid"] = chk.valid;
        meta["length"] = seq.length();
        if (!chk.valid) {
            meta["reason"] = chk.reason;
            err << "error: invalid sequence: " << chk.reason << '\n';
            code = 1;
            return report(nullptr, &seq, meta);
        }
        return report(rat(*chk.value), &seq, meta);
    }
};

struct Reduce {
    std::string kind, file, out, delta;
    int k = 0;
    int lambda = 2;

    json run(const Globals& g) const {
        const std::string text = read_file(file);
        std::optional<Instance> source;
        ReductionOutput r = [&] {
            if (kind == "np3" || kind == "np4" || kind == "npk") {
                if (delta.empty()) throw UsageError("reduce " + kind + " needs --delta");
                const Rational d = rational_arg("--delta", delta);
                const int target = kind == "np3" ? 3 : kind == "np4" ? 4 : k;
                if (kind == "npk" && k == 0) throw UsageError("reduce npk needs --k");
                // An instance file supplies a satisfying assignment for the
                // witness; a formula-only file does not.
                try {
                    source = parse_instance(text);
                } catch (const ParseError&) {
                }
                return reduce_np_gadget(parse_formula(text), target, d);
            }
            source = parse_instance(text);
            if (kind == "horn") return reduce_horn_emulation(*source, lambda);
            if (k == 0) throw UsageError("reduce " + kind + " needs --k");
            return kind == "pad" ? reduce_pad(*source, k) : reduce_width(*source, k);
        }();

        json meta = instance_meta(r.instance.formula());
        meta["kind"] = to_string(r.kind);
        meta["params"] = params_json(r.params);

        std::optional<ReconfSequence> witness;
        if (r.kind == ReductionKind::Np3 || r.kind == ReductionKind::Np4 || r.kind == ReductionKind::Npk) {
            if (source) witness = build_witness(r, source->start());
            else meta["witness_note"] = "formula-only source; no satisfying assignment given";
        } else if (source->num_vars() > g.cap) {
            meta["witness_note"] = "source exceeds --cap; witness not searched";
        } else {
            auto ex = opt_exact(*source, g.cap);
            if (ex.opt == 1) witness = build_witness(r, ex.witness);
            else meta["witness_note"] = "source optimum is " + to_string(ex.opt) + "; no value-1 path to lift";
        }

        const std::string serialized = serialize_instance(r.instance);
        if (!out.empty()) {
            write_file(out, serialized);
            meta["out"] = out;
        } else {
            meta["instance"] = serialized;
        }
        if (!witness) return report(nullptr, nullptr, meta);
        const auto chk = check_sequence(r.instance, *witness);
        if (!chk.valid) throw std::logic_error("lifted witness is invalid: " + chk.reason);
        return report(rat(*chk.value), &*witness, meta);
    }
};

struct Table {
    int k_min = 3, k_max = 10;

    json run(const Globals&) const {
        if (k_min < 3 || k_max < k_min || k_max > 256) throw UsageError("need 3 <= --k-min <= --k-max <= 256");
        json rows = json::array();
        Rational lowest = 1;
        for (int k = k_min; k <= k_max; ++k) {
            const Rational f = approximation_factor(k);
            if (f < lowest) lowest = f;
            rows.push_back({{"k", k},
                            {"neq", rat(closed_form_bound(k, BoundCase::Neq))},
                            {"eq", rat(closed_form_bound(k, BoundCase::Eq))},
                            {"factor", rat(f)},
                            {"decimal", to_decimal(f, 3)},
                            {"simple_bound", rat(simple_factor_bound(k))}});
        }
        return report(rat(lowest), nullptr, {{"rows", rows}});
    }
};

struct Gen {
    int n = 0, m = 0, k = 0;
    std::string start, end, out;

    json run(const Globals& g) const {
        PlantedGenerator gen;
        gen.n = n;
        gen.m = m;
        gen.k = k;
        gen.seed = g.seed;
        if (!start.empty()) gen.start = bits_arg("--start", start);
        if (!end.empty()) gen.end = bits_arg("--end", end);
        const Instance inst = gen_random_instance(gen);
        json meta = instance_meta(inst.formula());
        meta["seed"] = g.seed;
        const std::string text = serialize_instance(inst);
        if (!out.empty()) {
            write_file(out, text);
            meta["out"] = out;
        } else {
            meta["instance"] = text;
        }
        return report(rat(value(inst.formula(), inst.start())), nullptr, meta);
    }
};

struct Verify {
    int lambda = 5, points = 20, q = 3;
    std::string file, spec_file, proof, g = "1/2", epsilon = "1/2";
    bool disjoint = false, cnf = false;

    json curve() const {
        if (points < 1) throw UsageError("--points must be positive");
        std::vector<Rational> grid;
        for (int i = 0; i <= points; ++i) grid.push_back(make_rational(i, points));
        json pts = json::array();
        Rational best = -1, arg = 0;
        for (const auto& [e, y] : horn_rejection_curve(lambda, grid)) {
            pts.push_back({{"epsilon", rat(e)}, {"reject", rat(y)}, {"decimal", to_decimal(y, 6)}});
            if (y > best) best = y, arg = e;
        }
        return report(rat(best), nullptr, {{"lambda", lambda}, {"argmax", rat(arg)}, {"points", pts}});
    }

    json accept() const {
        const VerifierSpec v = verifier_from_json(read_file(spec_file));
        const Rational p = acceptance_probability(v, bits_arg("proof", proof));
        return report(rat(p), nullptr, {{"proof_len", v.proof_len}, {"atoms", v.atoms.size()}});
    }

    json with_proof(const VerifierSpec& v, json meta) const {
        meta["verifier"] = json::parse(verifier_to_json(v));
        if (proof.empty()) return report(nullptr, nullptr, meta);
        return report(rat(acceptance_probability(v, bits_arg("--proof", proof))), nullptr, meta);
    }

    json clause() const {
        const Formula f = parse_formula(read_file(file));
        return with_proof(make_clause_verifier(f), instance_meta(f));
    }

    json overview() const {
        const Formula f = parse_formula(read_file(file));
        const auto h = make_overview_horn(f, lambda, disjoint ? TupleMode::Disjoint : TupleMode::WithReplacement);
        json meta = instance_meta(f);
        meta["lambda"] = lambda;
        meta["mode"] = disjoint ? "disjoint" : "with-replacement";
        if (cnf) {
            const auto x = make_or_emulator(h);
            const auto width = static_cast<int>(x.max_queries());
            auto [phi, d] = cnf_from_or_verifier(x, width);
            meta["cnf"] = serialize_formula(phi);
            meta["denominator"] = d.get_str();
            if (!proof.empty())
                meta["or_acceptance"] = rat(acceptance_probability(x, bits_arg("--proof", proof)));
        }
        return with_proof(h, meta);
    }

    json lambda0() const {
        const long l = lambda_zero(q, rational_arg("--g", g), rational_arg("--epsilon", epsilon));
        return report(rat(make_rational(l)), nullptr, {{"q", q}, {"g", g}, {"epsilon", epsilon}, {"lambda0", l}});
    }
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maxmin Ek-SAT reconfiguration toolkit", "eksr"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
    app.add_option("--cap", g.cap, "Largest variable count for exhaustive search")->capture_default_str();
    app.add_option("--samples", g.samples, "Number of randomized samples")->capture_default_str();
    app.add_flag("--json", "JSON output (the only mode)");

    std::function<json()> action;
    int code = 0;

    Approx approx;
    auto* c_approx = app.add_subcommand("approx", "Approximate the maxmin value of an instance");
    c_approx->add_option("file", approx.file)->required()->check(CLI::ExistingFile);
    c_approx->add_flag("--randomized", approx.randomized, "Sample --samples random walks from --seed");
    c_approx->callback([&] { action = [&] { return approx.run(g); }; });

    Exact exact;
    auto* c_exact = app.add_subcommand("exact", "Exact maxmin value by hypercube search");
    c_exact->add_option("file", exact.file)->required()->check(CLI::ExistingFile);
    c_exact->callback([&] { action = [&] { return exact.run(g); }; });

    Value val;
    auto* c_value = app.add_subcommand("value", "Fraction of clauses an assignment satisfies");
    c_value->add_option("file", val.file)->required()->check(CLI::ExistingFile);
    c_value->add_option("assignment", val.bits)->required();
    c_value->callback([&] { action = [&] { return val.run(g); }; });

    CheckSeq check;
    auto* c_check = app.add_subcommand("check-seq", "Validate a reconfiguration sequence and report its value");
    c_check->add_option("file", check.file)->required()->check(CLI::ExistingFile);
    c_check->add_option("sequence", check.seq_file)->required()->check(CLI::ExistingFile);
    c_check->callback([&] { action = [&] { return check.run(g, err, code); }; });

    Reduce reduce;
    auto* c_reduce = app.add_subcommand("reduce", "Compile a gap-preserving reduction");
    c_reduce->add_option("kind", reduce.kind)
        ->required()
        ->check(CLI::IsMember({"pad", "horn", "width", "np3", "np4", "npk"}));
    c_reduce->add_option("file", reduce.file)->required()->check(CLI::ExistingFile);
    c_reduce->add_option("--k", reduce.k, "Target width");
    c_reduce->add_option("--lambda", reduce.lambda, "Horn tuple length")->capture_default_str();
    c_reduce->add_option("--delta", reduce.delta, "Gadget parameter p/q");
    c_reduce->add_option("--out", reduce.out, "Write the instance file here");
    c_reduce->callback([&] { action = [&] { return reduce.run(g); }; });

    Table table;
    auto* c_table = app.add_subcommand("table", "Approximation factors by clause width");
    c_table->add_option("--k-min", table.k_min)->capture_default_str();
    c_table->add_option("--k-max", table.k_max)->capture_default_str();
    c_table->callback([&] { action = [&] { return table.run(g); }; });

    Gen gen;
    auto* c_gen = app.add_subcommand("gen", "Generate a planted random instance");
    c_gen->add_option("--n", gen.n)->required();
    c_gen->add_option("--m", gen.m)->required();
    c_gen->add_option("--k", gen.k)->required();
    c_gen->add_option("--start", gen.start, "Planted start (default 0^n)");
    c_gen->add_option("--end", gen.end, "Planted end (default 1^n)");
    c_gen->add_option("--out", gen.out, "Write the instance file here");
    c_gen->callback([&] { action = [&] { return gen.run(g); }; });

    Verify ver;
    auto* c_verify = app.add_subcommand("verify", "Verifier constructions");
    c_verify->require_subcommand(1);
    auto* v_curve = c_verify->add_subcommand("curve", "Horn rejection curve eps (1-eps)^(lambda-1)");
    v_curve->add_option("--lambda", ver.lambda)->capture_default_str();
    v_curve->add_option("--points", ver.points, "Grid resolution")->capture_default_str();
    v_curve->callback([&] { action = [&] { return ver.curve(); }; });
    auto* v_accept = c_verify->add_subcommand("accept", "Acceptance probability of a verifier spec");
    v_accept->add_option("spec", ver.spec_file)->required()->check(CLI::ExistingFile);
    v_accept->add_option("proof", ver.proof)->required();
    v_accept->callback([&] { action = [&] { return ver.accept(); }; });
    auto* v_clause = c_verify->add_subcommand("clause", "Clause-checking verifier of a formula");
    v_clause->add_option("file", ver.file)->required()->check(CLI::ExistingFile);
    v_clause->add_option("--proof", ver.proof);
    v_clause->callback([&] { action = [&] { return ver.clause(); }; });
    auto* v_overview = c_verify->add_subcommand("overview", "Clause-based Horn verifier of a formula");
    v_overview->add_option("file", ver.file)->required()->check(CLI::ExistingFile);
    v_overview->add_option("--lambda", ver.lambda)->capture_default_str();
    v_overview->add_flag("--disjoint", ver.disjoint, "Accept tuples whose clauses share a variable");
    v_overview->add_flag("--cnf", ver.cnf, "Also emit the OR-emulator CNF");
    v_overview->add_option("--proof", ver.proof);
    v_overview->callback([&] { action = [&] { return ver.overview(); }; });
    auto* v_l0 = c_verify->add_subcommand("lambda0", "Smallest admissible lambda");
    v_l0->add_option("--q", ver.q)->capture_default_str();
    v_l0->add_option("--g", ver.g)->capture_default_str();
    v_l0->add_option("--epsilon", ver.epsilon)->capture_default_str();
    v_l0->callback([&] { action = [&] { return ver.lambda0(); }; });

    std::vector<std::string> argv_store{"eksr"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        out << action().dump() << '\n';
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace eksr::cli
