/*
 *  Copyright (C) 2026  The hexinline authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

// Command-line front end: eval, inline, equiv, persist-inc, derive-family, bench.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hexinline/bench.hpp"
#include "hexinline/equivalence.hpp"
#include "hexinline/error.hpp"
#include "hexinline/inconsistency.hpp"
#include "hexinline/inliner.hpp"
#include "hexinline/oracles.hpp"
#include "hexinline/parser.hpp"
#include "hexinline/semantics.hpp"

using namespace hexinline;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Common {
    std::string program;
    std::string families;
    std::string hb;
    std::string universe;
    std::string mode = "traditional";
    bool first = false;
    bool all = false;
    std::uint64_t seed = 0;
    std::string out = "text";
    bool allow_reserved = false;
};

AtomSet extra_universe(const Common& c) { return c.universe.empty() ? AtomSet{} : parse_atom_list(c.universe); }

Program load_program(const std::string& path, bool allow_reserved = false) {
    if (path.empty())
        throw Error(ErrorKind::Precondition, "no program given");
    return parse_program(read_file(path), ParseOptions{allow_reserved});
}

HBContext load_hb(const std::string& path, const Program& p, const Program& q) {
    if (!path.empty())
        return parse_hb(read_file(path));
    AtomSet all = set_union(ordinary_atoms(p), ordinary_atoms(q));
    return HBContext{all, all};
}

std::optional<FamilyMap> load_families(const Common& c, const Program& p, const AtomSet& u) {
    if (c.families.empty())
        return std::nullopt;
    return attach_families(p, u, parse_family_file(read_file(c.families)));
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f)
        throw Error(ErrorKind::Precondition, "cannot write " + path);
    f << text;
}

int cmd_eval(const Common& c, const OracleRegistry& reg) {
    Program p = load_program(c.program, c.allow_reserved);
    AtomSet u = set_union(ordinary_atoms(p), extra_universe(c));
    auto fams = load_families(c, p, u);
    Mode mode = parse_mode(c.mode);
    auto res = evaluate(p, u, reg, fams ? &*fams : nullptr, mode, c.first);
    if (c.out == "csv") {
        std::cout << "answer_set\n";
        for (const auto& as : res.answer_sets)
            std::cout << '"' << format_atom_set(as) << "\"\n";
    } else {
        for (const auto& as : res.answer_sets)
            std::cout << format_atom_set(as) << '\n';
        std::cout << "% " << res.answer_sets.size() << " answer set(s), mode " << mode_name(mode) << ", oracle calls "
                  << res.stats.oracle_calls << ", candidates " << res.stats.candidates_checked << '\n';
    }
    return kExitOk;
}

int cmd_inline(const Common& c, const OracleRegistry& reg) {
    Program p = load_program(c.program);
    AtomSet u = set_union(ordinary_atoms(p), extra_universe(c));
    auto fams = load_families(c, p, u);
    FamilyMap map = fams ? *fams : derive_families(p, u, reg);
    auto res = inline_all(p, map, u, &reg);
    std::cout << "% inlined from " << c.program << '\n';
    for (const auto& s : res.steps) {
        const auto& fam = map.at(s.occurrence);
        std::cout << "% " << s.xe.str() << " / " << s.nxe.str() << " : " << s.occurrence.str() << ", "
                  << sigma_char(fam.sigma) << " family of " << fam.sets.size() << " set(s)";
        if (fams && !reg.contains(s.occurrence.atom.name))
            std::cout << ", completeness taken on faith (no oracle)";
        std::cout << '\n';
        for (const auto& [a, bar] : s.bars)
            std::cout << "%   " << bar.str() << " : complement of " << a.str() << '\n';
    }
    std::cout << print_program(res.program);
    return kExitOk;
}

int cmd_equiv(const Common& c, const std::string& pq, const std::string& qq, const std::string& emit,
              const OracleRegistry& reg) {
    Program p = load_program(pq);
    Program q = load_program(qq);
    HBContext ctx = load_hb(c.hb, p, q);
    AtomSet u = extra_universe(c);
    auto sep = find_separation(p, q, ctx, u, reg);
    if (!sep) {
        std::cout << "equivalent\n";
        return kExitOk;
    }
    std::cout << "not equivalent\n";
    std::cout << "% witness (" << format_atom_set(sep->witness.x) << ", " << format_atom_set(sep->witness.y) << ") for "
              << (sep->p_side ? "P not in Q" : "Q not in P") << '\n';
    std::cout << print_program(sep->r);
    if (!emit.empty())
        write_file(emit, print_program(sep->r));
    return kExitNegative;
}

void print_report(const std::string& method, const IncReport& rep) {
    std::cout << method << ": " << (rep.inconsistent ? "persistently inconsistent" : "not persistently inconsistent") << '\n';
    for (const auto& ev : rep.evidence)
        std::cout << "%   Y = " << format_atom_set(ev.y) << " ruled out by " << format_atom_set(ev.witness) << '\n';
    if (rep.refuting_model)
        std::cout << "%   model " << format_atom_set(*rep.refuting_model) << " survives\n";
    if (!rep.note.empty())
        std::cout << "%   " << rep.note << '\n';
}

int cmd_persist(const Common& c, const std::string& method, const OracleRegistry& reg) {
    Program p = load_program(c.program);
    HBContext ctx = load_hb(c.hb, p, {});
    AtomSet u = extra_universe(c);
    std::optional<bool> verdict;
    if (method == "reduct" || method == "both") {
        auto rep = persistently_inconsistent(p, ctx, u, reg);
        print_report("reduct", rep);
        verdict = rep.inconsistent;
    }
    if (method == "ufs" || method == "both") {
        auto rep = persistently_inconsistent_ufs(p, ctx, u, reg);
        print_report("ufs", rep);
        if (verdict && *verdict != rep.inconsistent)
            throw Error(ErrorKind::Precondition, "reduct and unfounded-set verdicts disagree");
        verdict = rep.inconsistent;
    }
    return *verdict ? kExitOk : kExitNegative;
}

int cmd_derive(const Common& c, const std::string& external, const std::string& domain, const std::string& sigma,
               bool raw, const OracleRegistry& reg) {
    Sigma s = sigma == "F" ? Sigma::F : Sigma::T;
    if (sigma != "T" && sigma != "F")
        throw Error(ErrorKind::Precondition, "sigma must be T or F");
    std::vector<std::pair<ExternalAtom, AtomSet>> targets;
    if (!external.empty()) {
        targets.emplace_back(parse_external_atom(external), parse_atom_list(domain));
    } else {
        Program p = load_program(c.program);
        AtomSet u = set_union(ordinary_atoms(p), extra_universe(c));
        for (const auto& e : external_atoms(p))
            targets.emplace_back(e, input_atoms(e, p, u));
    }
    for (const auto& [e, dom] : targets) {
        SupportFamily fam = derive_family(reg, e, dom, s);
        if (!raw)
            fam = minimize_family(fam);
        std::cout << print_family(fam);
    }
    return kExitOk;
}

int cmd_bench(const Common& c, const std::string& problem, int size, int limit, double density,
              const std::vector<std::string>& modes) {
    BenchSpec spec;
    spec.problem = parse_problem(problem);
    spec.size = size;
    spec.seed = c.seed;
    spec.limit = limit;
    spec.density = density;
    std::vector<Mode> ms;
    for (const auto& m : modes)
        ms.push_back(parse_mode(m));
    auto rows = run_bench(spec, ms, c.first);
    std::cout << (c.out == "csv" ? rows_to_csv(rows) : rows_to_text(rows));
    return kExitOk;
}

void add_common(CLI::App* sub, Common& c, bool program, bool families, bool hb, bool mode) {
    if (program)
        sub->add_option("--program,program", c.program, "program file (.hex)");
    if (families)
        sub->add_option("--families", c.families, "support-set family file (.ssf)");
    if (hb)
        sub->add_option("--hb", c.hb, "context file with H: and B: lines");
    if (mode)
        sub->add_option("--mode", c.mode, "brute | traditional | supsets | inlining");
    auto* first = sub->add_flag("--first", c.first, "stop after the first answer set");
    sub->add_flag("--all", c.all, "compute all answer sets (default)")->excludes(first);
    sub->add_option("--universe", c.universe, "extra atoms, comma separated");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--out", c.out, "csv | text")->check(CLI::IsMember({"csv", "text"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"HEX-program evaluation by external-atom inlining"};
    app.require_subcommand(1);
    Common c;
    OracleRegistry reg = OracleRegistry::builtin();

    auto* eval = app.add_subcommand("eval", "compute answer sets");
    add_common(eval, c, true, true, false, true);
    eval->add_flag("--allow-reserved", c.allow_reserved, "accept aux__ predicates (inliner output)");

    auto* inl = app.add_subcommand("inline", "rewrite external atoms away");
    add_common(inl, c, true, true, false, false);

    std::string p_file, q_file, emit;
    auto* equiv = app.add_subcommand("equiv", "<H,B>-equivalence of two programs");
    equiv->add_option("p", p_file, "first program")->required();
    equiv->add_option("q", q_file, "second program")->required();
    equiv->add_option("--emit-counterexample", emit, "write a separating R here");
    add_common(equiv, c, false, false, true, false);

    std::string method = "both";
    auto* persist = app.add_subcommand("persist-inc", "persistent inconsistency wrt <H,B>");
    add_common(persist, c, true, false, true, false);
    persist->add_option("--method", method, "reduct | ufs | both")->check(CLI::IsMember({"reduct", "ufs", "both"}));

    std::string external, domain, sigma = "T";
    bool raw = false;
    auto* derive = app.add_subcommand("derive-family", "derive a complete support-set family");
    add_common(derive, c, true, false, false, false);
    derive->add_option("--external", external, "external atom, e.g. &aOrNotB[a,b]");
    derive->add_option("--domain", domain, "input atoms, comma separated");
    derive->add_option("--sigma", sigma, "T or F");
    derive->add_flag("--raw", raw, "skip minimization");

    std::string problem = "non3col";
    int size = 4, limit = 1;
    double density = 0.6;
    std::vector<std::string> modes = {"traditional", "supsets", "inlining"};
    auto* bench = app.add_subcommand("bench", "compare evaluation modes on generated instances");
    add_common(bench, c, false, false, false, false);
    bench->add_option("--problem", problem, "non3col | vertexcover")->check(CLI::IsMember({"non3col", "vertexcover"}));
    bench->add_option("--size", size, "number of nodes");
    bench->add_option("--limit", limit, "vertex-cover bound L");
    bench->add_option("--density", density, "edge probability");
    bench->add_option("--mode", modes, "modes to run (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval)
            return cmd_eval(c, reg);
        if (*inl)
            return cmd_inline(c, reg);
        if (*equiv)
            return cmd_equiv(c, p_file, q_file, emit, reg);
        if (*persist)
            return cmd_persist(c, method, reg);
        if (*derive)
            return cmd_derive(c, external, domain, sigma, raw, reg);
        if (*bench)
            return cmd_bench(c, problem, size, limit, density, modes);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::CapExceeded ? kExitCap : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
