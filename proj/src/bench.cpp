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

#include "hexinline/bench.hpp"

#include <bit>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "hexinline/error.hpp"

namespace hexinline {

namespace {

const std::vector<std::string> kColors = {"r", "g", "b"};

Atom col(int v, const std::string& c) { return Atom("col", {std::to_string(v), c}); }
Atom node_atom(const char* pred, int v) { return Atom(pred, {std::to_string(v)}); }

BodyLiteral pos(const Atom& a) { return BodyLiteral(a); }
BodyLiteral neg(const Atom& a) { return BodyLiteral(a, true); }

void validate(const BenchSpec& spec, const Graph& g) {
    if (spec.size < 1 || spec.size > kMaxBenchNodes)
        throw Error(ErrorKind::Precondition, "bench size must be between 1 and " + std::to_string(kMaxBenchNodes));
    if (g.nodes != spec.size)
        throw Error(ErrorKind::Precondition, "graph has " + std::to_string(g.nodes) + " nodes, spec asks for " +
                                                 std::to_string(spec.size));
    if (spec.problem == Problem::VertexCover && (spec.limit < 1 || spec.limit >= spec.size))
        throw Error(ErrorKind::Precondition, "vertexcover requires 1 <= L < n");
}

SupportFamily family_of(const ExternalAtom& e, const AtomSet& domain, const std::vector<AtomSet>& sets) {
    SupportFamily fam{e, Sigma::T, {}, domain};
    for (const auto& s : sets)
        if (is_subset(s, domain))
            fam.sets.insert(SupportSet{s, {}});
    return fam;
}

Oracle coloring_oracle(const Graph& g) {
    Oracle o;
    o.name = "checkCol";
    o.eval = [g](const AtomSet& y, const ExternalAtom&) {
        for (auto [u, v] : g.edges)
            for (const auto& c : kColors)
                if (y.count(col(u, c)) && y.count(col(v, c)))
                    return true;
        return false;
    };
    o.family = [g](const ExternalAtom& e, const AtomSet& domain, Sigma sigma) -> std::optional<SupportFamily> {
        if (sigma != Sigma::T)
            return std::nullopt;
        std::vector<AtomSet> sets;
        for (auto [u, v] : g.edges)
            for (const auto& c : kColors)
                sets.push_back({col(u, c), col(v, c)});
        return family_of(e, domain, sets);
    };
    return o;
}

int cover_limit(const ExternalAtom& e) {
    auto cs = e.input_constants();
    if (cs.size() != 1)
        throw Error(ErrorKind::Precondition, "&checkVC expects one constant input");
    return std::stoi(cs.front());
}

Oracle cover_oracle(const Graph& g) {
    Oracle o;
    o.name = "checkVC";
    o.eval = [g](const AtomSet& y, const ExternalAtom& e) {
        int in = 0;
        for (int v = 1; v <= g.nodes; ++v)
            in += static_cast<int>(y.count(node_atom("in", v)));
        if (in > cover_limit(e))
            return true;
        for (auto [u, v] : g.edges)
            if (y.count(node_atom("out", u)) && y.count(node_atom("out", v)))
                return true;
        return false;
    };
    o.family = [g](const ExternalAtom& e, const AtomSet& domain, Sigma sigma) -> std::optional<SupportFamily> {
        if (sigma != Sigma::T)
            return std::nullopt;
        std::vector<AtomSet> sets;
        int k = cover_limit(e) + 1;
        // every (L+1)-subset of the in-atoms
        for (unsigned m = 0; m < (1u << g.nodes); ++m) {
            if (std::popcount(m) != k)
                continue;
            AtomSet s;
            for (int v = 1; v <= g.nodes; ++v)
                if (m & (1u << (v - 1)))
                    s.insert(node_atom("in", v));
            sets.push_back(s);
        }
        for (auto [u, v] : g.edges)
            sets.push_back({node_atom("out", u), node_atom("out", v)});
        return family_of(e, domain, sets);
    };
    return o;
}

Program non3col_program(const Graph& g) {
    Program p;
    Atom inval("inval");
    ExternalAtom check{"checkCol", {InputTerm::predicate("col")}, {}};
    for (int v = 1; v <= g.nodes; ++v) {
        p.insert(Rule({col(v, "r"), col(v, "g"), col(v, "b")}, {}));
        for (const auto& c : kColors)
            p.insert(Rule({col(v, c)}, {pos(inval)}));
    }
    p.insert(Rule({inval}, {BodyLiteral(check)}));
    p.insert(Rule({}, {neg(inval)}));
    return p;
}

Program cover_program(const Graph& g, int limit) {
    Program p;
    Atom inval("inval");
    ExternalAtom check{"checkVC",
                       {InputTerm::predicate("in"), InputTerm::predicate("out"), InputTerm::constant(std::to_string(limit))},
                       {}};
    for (int v = 1; v <= g.nodes; ++v) {
        p.insert(Rule({node_atom("in", v), node_atom("out", v)}, {}));
        p.insert(Rule({node_atom("in", v)}, {pos(inval)}));
        p.insert(Rule({node_atom("out", v)}, {pos(inval)}));
    }
    p.insert(Rule({inval}, {BodyLiteral(check)}));
    p.insert(Rule({}, {neg(inval)}));
    return p;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    return out;
}

} // namespace

std::string problem_name(Problem p) { return p == Problem::Non3Col ? "non3col" : "vertexcover"; }

Problem parse_problem(const std::string& s) {
    if (s == "non3col")
        return Problem::Non3Col;
    if (s == "vertexcover")
        return Problem::VertexCover;
    throw Error(ErrorKind::Precondition, "unknown problem " + s);
}

Graph Graph::complete(int n) {
    Graph g;
    g.nodes = n;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.edges.emplace_back(u, v);
    return g;
}

Graph Graph::random(int n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    Graph g;
    g.nodes = n;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng))
                g.edges.emplace_back(u, v);
    return g;
}

Instance generate_instance(const BenchSpec& spec) {
    if (spec.size < 1 || spec.size > kMaxBenchNodes)
        throw Error(ErrorKind::Precondition, "bench size must be between 1 and " + std::to_string(kMaxBenchNodes));
    return generate_instance(spec, Graph::random(spec.size, spec.density, spec.seed));
}

Instance generate_instance(const BenchSpec& spec, const Graph& graph) {
    validate(spec, graph);
    Instance inst;
    inst.graph = graph;
    if (spec.problem == Problem::Non3Col) {
        inst.program = non3col_program(graph);
        inst.registry.add(coloring_oracle(graph));
    } else {
        inst.program = cover_program(graph, spec.limit);
        inst.registry.add(cover_oracle(graph));
    }
    inst.universe = ordinary_atoms(inst.program);
    return inst;
}

BenchOutcome run_bench(const Instance& inst, const std::vector<Mode>& modes, bool first_only) {
    BenchOutcome out;
    for (Mode m : modes) {
        auto start = std::chrono::steady_clock::now();
        auto res = evaluate(inst.program, inst.universe, inst.registry, nullptr, m, first_only);
        auto stop = std::chrono::steady_clock::now();
        BenchRow row;
        row.mode = mode_name(m);
        row.answer_set_count = res.answer_sets.size();
        row.oracle_calls = res.stats.oracle_calls;
        row.candidates_checked = res.stats.candidates_checked;
        row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        out.rows.push_back(row);
        out.answer_sets.push_back(std::move(res.answer_sets));
    }
    return out;
}

std::vector<BenchRow> run_bench(const BenchSpec& spec, const std::vector<Mode>& modes, bool first_only) {
    if (modes.empty())
        return {};
    return run_bench(generate_instance(spec), modes, first_only).rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "mode,answer_set_count,oracle_calls,candidates_checked,wall_ms\n";
    for (const auto& r : rows)
        os << r.mode << ',' << r.answer_set_count << ',' << r.oracle_calls << ',' << r.candidates_checked << ','
           << std::fixed << std::setprecision(3) << r.wall_ms << '\n';
    return os.str();
}

std::vector<BenchRow> rows_from_csv(const std::string& text) {
    std::vector<BenchRow> rows;
    std::stringstream ss(text);
    std::string line;
    bool header = true;
    while (std::getline(ss, line)) {
        if (line.empty())
            continue;
        if (header) {
            header = false;
            continue;
        }
        auto cells = split_csv_line(line);
        if (cells.size() != 5)
            throw Error(ErrorKind::Syntax, "bad bench row: " + line);
        BenchRow r;
        r.mode = cells[0];
        r.answer_set_count = std::stoul(cells[1]);
        r.oracle_calls = std::stoul(cells[2]);
        r.candidates_checked = std::stoul(cells[3]);
        r.wall_ms = std::stod(cells[4]);
        rows.push_back(r);
    }
    return rows;
}

std::string rows_to_text(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(12) << "mode" << std::right << std::setw(8) << "AS" << std::setw(14) << "oracle_calls"
       << std::setw(12) << "candidates" << std::setw(12) << "wall_ms" << '\n';
    for (const auto& r : rows)
        os << std::left << std::setw(12) << r.mode << std::right << std::setw(8) << r.answer_set_count << std::setw(14)
           << r.oracle_calls << std::setw(12) << r.candidates_checked << std::setw(12) << std::fixed << std::setprecision(2)
           << r.wall_ms << '\n';
    return os.str();
}

} // namespace hexinline
