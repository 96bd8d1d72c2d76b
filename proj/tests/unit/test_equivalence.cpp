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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hexinline/equivalence.hpp"
#include "hexinline/error.hpp"
#include "hexinline/parser.hpp"
#include "hexinline/semantics.hpp"
#include "naive.hpp"
#include "random_programs.hpp"

using namespace hexinline;
using naive::atoms;
using naive::prog;

namespace {

const OracleRegistry reg = OracleRegistry::builtin();

HBContext ctx(const std::string& h, const std::string& b) { return HBContext{atoms(h), atoms(b)}; }

std::set<HBModel> models(std::initializer_list<std::pair<const char*, const char*>> items) {
    std::set<HBModel> out;
    for (auto [x, y] : items)
        out.insert({atoms(x), atoms(y)});
    return out;
}

const Program kP = prog("a :- &neg[b](). b :- &neg[a](). a :- b.");
const Program kQ = prog("a v b. a :- b.");

bool separates(const Program& p, const Program& q, const Program& r, const AtomSet& u) {
    return answer_sets_brute(naive::join(p, r), u, reg) != answer_sets_brute(naive::join(q, r), u, reg);
}

// Every positive rule with head in H and body in B, constraints included.
std::vector<Rule> positive_rules(const HBContext& c) {
    std::vector<Rule> out;
    for (const auto& head : naive::subsets(c.h))
        for (const auto& body : naive::subsets(c.b)) {
            if (!set_intersection(head, body).empty())
                continue;
            std::vector<BodyLiteral> lits;
            for (const auto& a : body)
                lits.emplace_back(a);
            out.emplace_back(std::vector<Atom>(head.begin(), head.end()), lits);
        }
    return out;
}

} // namespace

TEST_CASE("the <H,B> order") {
    CHECK(leq_bh({}, atoms("a"), ctx("a, b", "b")));
    CHECK_FALSE(leq_bh({}, atoms("a"), ctx("a, b", "a, b")));
    CHECK(leq_bh(atoms("a, b"), atoms("a, b"), ctx("a, b", "a")));
    CHECK_FALSE(lt_bh(atoms("a"), atoms("a"), ctx("a, b", "b")));
    CHECK(lt_bh({}, atoms("a"), ctx("a, b", "b")));
    CHECK_FALSE(lt_bh(atoms("c"), atoms("c, d"), ctx("a", "b")));
}

TEST_CASE("sigma models of the worked examples") {
    auto p1 = prog("a :- &aOrNotB[a,b]().");
    auto q1 = prog("a :- a. a :- not b.");
    auto expected1 = models({{"", "b"}, {"a", "a"}, {"b", "b"}, {"a", "a, b"}, {"b", "a, b"}, {"a, b", "a, b"}});
    CHECK(sigma_models(p1, ctx("a, b", "a, b"), {}, reg) == expected1);
    // fQ^{a,b} = {a <- a} has the model {}, so (∅,{a,b}) is a model of Q as well
    auto expected1q = expected1;
    expected1q.insert({{}, atoms("a, b")});
    CHECK(sigma_models(q1, ctx("a, b", "a, b"), {}, reg) == expected1q);
    CHECK_FALSE(equivalent(p1, q1, ctx("a, b", "a, b"), {}, reg));
    auto r = prog("a :- b. b :- a.");
    CHECK(answer_sets_brute(naive::join(p1, r), atoms("a, b"), reg) == naive::sets({"a, b"}));
    CHECK(answer_sets_brute(naive::join(q1, r), atoms("a, b"), reg).empty());

    auto expected2 = models({{"a", "a"}, {"a", "a, b"}, {"a, b", "a, b"}});
    CHECK(sigma_models(kP, ctx("a, b", "b"), {}, reg) == expected2);
    CHECK(sigma_models(kQ, ctx("a, b", "b"), {}, reg) == expected2);
    CHECK(equivalent(kP, kQ, ctx("a, b", "b"), {}, reg));

    auto expected3 = models({{"a", "a"}, {"", "a, b"}, {"a", "a, b"}, {"a, b", "a, b"}});
    CHECK(sigma_models(kP, ctx("a, b", "a, b"), {}, reg) == expected3);
    CHECK(sigma_models(kQ, ctx("a, b", "a, b"), {}, reg) == expected2);
    CHECK_FALSE(equivalent(kP, kQ, ctx("a, b", "a, b"), {}, reg));
}

TEST_CASE("strong and uniform equivalence") {
    auto p = prog("a.");
    auto q = prog("a :- not b.");
    CHECK_FALSE(strong_equivalent(p, q, reg));
    CHECK_FALSE(uniform_equivalent(p, q, reg));
    CHECK(strong_equivalent(p, p, reg));
    CHECK(uniform_equivalent(q, q, reg));
    CHECK_FALSE(strong_equivalent(kP, kQ, reg));
    // uniformly but not strongly equivalent
    auto r = prog("a v b.");
    auto s = prog("a :- not b. b :- not a.");
    CHECK(uniform_equivalent(r, s, reg));
    CHECK_FALSE(strong_equivalent(r, s, reg));
    auto t = prog("a :- b. b :- a. a v b.");
    auto w = prog("a. b.");
    CHECK(strong_equivalent(t, w, reg));
}

TEST_CASE("witnesses") {
    auto w = find_witness(kQ, kP, ctx("a, b", "a, b"), {}, reg);
    REQUIRE(w);
    CHECK(*w == Witness{{}, atoms("a, b")});
    CHECK(is_witness(*w, kQ, kP, ctx("a, b", "a, b"), reg));
    CHECK_FALSE(find_witness(kP, kQ, ctx("a, b", "a, b"), {}, reg));
    CHECK_FALSE(find_witness(kP, kP, ctx("a, b", "a, b"), {}, reg));
    auto w2 = find_witness(prog("a."), Program{}, HBContext{}, {}, reg);
    REQUIRE(w2);
    CHECK(w2->y == atoms("a"));
}

TEST_CASE("counterexamples from witnesses") {
    HBContext c = ctx("a, b", "a, b");
    Witness w{{}, atoms("a, b")};
    Program r = witness_to_counterexample(w, kQ, kP, c, reg);
    CHECK(r.count(Rule({Atom("b")}, {BodyLiteral(Atom("a"))})));
    CHECK(r == prog("a :- a. a :- b. b :- a. b :- b."));
    auto u = atoms("a, b");
    CHECK(naive::is_answer_set(naive::join(kQ, r), u, reg));
    CHECK_FALSE(naive::is_answer_set(naive::join(kP, r), u, reg));
    CHECK(separates(kP, kQ, prog("b :- a."), u));

    // Y does not satisfy Q: facts for Y|H
    Program r2 = witness_to_counterexample(Witness{{}, atoms("a")}, prog("a."), prog(":- a."), ctx("a", ""), reg);
    CHECK(r2 == prog("a."));
    CHECK_THROWS_AS(witness_to_counterexample(Witness{atoms("a"), atoms("a")}, kP, kP, c, reg), Error);

    auto sep = find_separation(kP, kQ, c, {}, reg);
    REQUIRE(sep);
    CHECK_FALSE(sep->p_side);
    CHECK(separates(kP, kQ, sep->r, u));
    CHECK_FALSE(find_separation(kP, kQ, ctx("a, b", "b"), {}, reg));
}

TEST_CASE("positive counterexamples") {
    CHECK(positive_counterexample(prog("a :- not b."), atoms("a")) == prog("a."));
    CHECK(positive_counterexample(prog("a :- b."), atoms("a")) == prog("a :- b."));
    CHECK_THROWS_AS(positive_counterexample(prog("a :- &id[b]()."), {}), Error);
    Program r = witness_to_counterexample(Witness{{}, atoms("a, b")}, kQ, kP, ctx("a, b", "a, b"), reg);
    Program rp = positive_counterexample(r, atoms("a, b"));
    CHECK(naive::is_answer_set(naive::join(kQ, rp), atoms("a, b"), reg));
    CHECK_FALSE(naive::is_answer_set(naive::join(kP, rp), atoms("a, b"), reg));
}

TEST_CASE("witness search agrees with enumeration of positive extensions") {
    std::mt19937_64 rng(61);
    randprog::Options opt{3, 0, 1, 0.3};
    const AtomSet alphabet = atoms("a, b, c");
    int checked = 0, separated = 0;
    for (int i = 0; i < 120; ++i) {
        Program p = randprog::random_program(rng, opt);
        Program q = randprog::random_program(rng, opt);
        auto pick = [&] {
            AtomSet s;
            for (const auto& a : alphabet)
                if (rng() % 2)
                    s.insert(a);
            return s;
        };
        HBContext c{pick(), pick()};
        auto rules = positive_rules(c);
        if (rules.size() > 10)
            continue;
        AtomSet u = set_union(set_union(ordinary_atoms(p), ordinary_atoms(q)), set_union(c.h, c.b));
        if (u.size() > 8)
            continue;
        bool found = false;
        for (std::uint32_t m = 0; m < (1u << rules.size()) && !found; ++m) {
            Program r;
            for (std::size_t k = 0; k < rules.size(); ++k)
                if (m & (1u << k))
                    r.insert(rules[k]);
            auto as_p = answer_sets_brute(naive::join(p, r), u, reg);
            auto as_q = answer_sets_brute(naive::join(q, r), u, reg);
            found = !std::includes(as_q.begin(), as_q.end(), as_p.begin(), as_p.end());
        }
        INFO(print_program(p) << "vs\n" << print_program(q) << print_hb(c));
        auto w = find_witness(p, q, c, {}, reg);
        CHECK(w.has_value() == found);
        ++checked;
        separated += found;
        if (w) {
            Program r = witness_to_counterexample(*w, p, q, c, reg);
            CHECK(naive::is_answer_set(naive::join(p, r), w->y, reg));
            CHECK_FALSE(naive::is_answer_set(naive::join(q, r), w->y, reg));
        }
    }
    CHECK(checked >= 40);
    CHECK(separated > 0);
    CHECK(separated < checked);
}

TEST_CASE("fresh atoms in the context do not change the verdict") {
    std::mt19937_64 rng(67);
    randprog::Options opt{3, 0, 1, 0.3};
    for (int i = 0; i < 100; ++i) {
        Program p = randprog::random_program(rng, opt);
        Program q = randprog::random_program(rng, opt);
        HBContext c = ctx("a, b", "b");
        HBContext wider = ctx("a, b, z1", "b, z2");
        CHECK(equivalent(p, q, c, {}, reg) == equivalent(p, q, wider, {}, reg));
    }
}

TEST_CASE("equivalence is sound for added HEX rules") {
    std::mt19937_64 rng(71);
    randprog::Options opt{3, 0, 1, 0.3};
    HBContext c = ctx("a, b", "a, b");
    int checked = 0;
    for (int i = 0; i < 400 && checked < 40; ++i) {
        Program p = randprog::random_program(rng, opt);
        Program q = randprog::random_program(rng, opt);
        if (!equivalent(p, q, c, {}, reg))
            continue;
        ++checked;
        AtomSet u = set_union(set_union(ordinary_atoms(p), ordinary_atoms(q)), atoms("a, b"));
        for (const char* r : {"a :- &neg[b]().", "b :- &id[a](). a :- not &id[b]().", "a v b :- &aOrNotB[a,b]().",
                              "b :- &true[a](), not a.", "a :- &even[a,b]()."}) {
            Program rr = prog(r);
            CHECK(answer_sets_brute(naive::join(p, rr), u, reg) == answer_sets_brute(naive::join(q, rr), u, reg));
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("answer sets with no H-preserving smaller model appear as (Y,Y)") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 100; ++i) {
        Program p = randprog::random_program(rng);
        HBContext c = ctx("a, b", "b, c");
        auto sigma = sigma_models(p, c, {}, reg);
        for (const auto& y : answer_sets_brute(p, set_union(ordinary_atoms(p), atoms("a, b, c")), reg))
            CHECK(sigma.count(HBModel{y, y}));
    }
}
