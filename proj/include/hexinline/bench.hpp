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

#ifndef HEXINLINE_BENCH_HPP
#define HEXINLINE_BENCH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hexinline/oracles.hpp"
#include "hexinline/semantics.hpp"
#include "hexinline/syntax.hpp"

namespace hexinline {

enum class Problem { Non3Col, VertexCover };

std::string problem_name(Problem p);
Problem parse_problem(const std::string& s);

inline constexpr int kMaxBenchNodes = 8;

struct BenchSpec {
    Problem problem = Problem::Non3Col;
    int size = 4;
    std::uint64_t seed = 0;
    int limit = 1;         // vertex-cover bound L
    double density = 0.6;  // edge probability of the random graph
};

struct Graph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, nodes numbered from 1

    static Graph complete(int n);
    static Graph random(int n, double density, std::uint64_t seed);
};

struct Instance {
    Program program;
    OracleRegistry registry;
    AtomSet universe;
    Graph graph;
};

// The graph is part of the registered oracle, not of the program.
Instance generate_instance(const BenchSpec& spec);
Instance generate_instance(const BenchSpec& spec, const Graph& graph);

struct BenchRow {
    std::string mode;
    std::size_t answer_set_count = 0;
    std::size_t oracle_calls = 0;
    std::size_t candidates_checked = 0;
    double wall_ms = 0.0;

    bool same_counts(const BenchRow& o) const {
        return mode == o.mode && answer_set_count == o.answer_set_count && oracle_calls == o.oracle_calls &&
               candidates_checked == o.candidates_checked;
    }
};

struct BenchOutcome {
    std::vector<BenchRow> rows;
    std::vector<std::set<AtomSet>> answer_sets;  // parallel to rows
};

BenchOutcome run_bench(const Instance& inst, const std::vector<Mode>& modes, bool first_only = false);
std::vector<BenchRow> run_bench(const BenchSpec& spec, const std::vector<Mode>& modes, bool first_only = false);

std::string rows_to_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> rows_from_csv(const std::string& text);
std::string rows_to_text(const std::vector<BenchRow>& rows);

} // namespace hexinline

#endif
