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

// Acceptance harness: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hexinline/bench.hpp"
#include "hexinline/equivalence.hpp"
#include "hexinline/inconsistency.hpp"
#include "hexinline/inliner.hpp"
#include "hexinline/oracles.hpp"
#include "hexinline/parser.hpp"
#include "hexinline/semantics.hpp"
#include "naive.hpp"
#include "oracle_cases.hpp"
#include "random_programs.hpp"

using namespace hexinline;
using naive::atoms;
using naive::prog;
using naive::sets;

namespace {

constexpr double kGoldenBudgetMs = 1000.0;
constexpr double kInliningBudgetMs = 60000.0;
constexpr double kEquivalenceBudgetMs = 300000.0;
constexpr double kBenchBudgetMs = 300000.0;
constexpr int kRandomInliningPrograms = 500;
constexpr int kMaxFamilyDomain = 6;
constexpr int kCorpusMaxRules = 3;
constexpr std::size_t kSampledPairsPerContext = 20000;

const OracleRegistry reg = OracleRegistry::builtin();

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Collects failed checks of one criterion.
struct Report {
    int checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 20)
            failures.push_back(what);
        else if (!ok)
            failures.emplace_back();
    }
    bool ok() const { return failures.empty(); }
};

std::string show(const std::set<AtomSet>& s) {
    std::string out = "{";
    for (const auto& y : s)
        out += (out.size() > 1 ? ", " : "") + format_atom_set(y);
    return out + "}";
}

// ---------------------------------------------------------------------------
// Test-local evaluator over a two-atom alphabet. Interpretations and atom sets
// are bitmasks; a program is summarized by which interpretations are models
// and, per Y, which X satisfy its FLP reduct wrt Y.

struct Profile {
    std::uint8_t models = 0xF;
    std::array<std::uint8_t, 4> reduct{0xF, 0xF, 0xF, 0xF};

    Profile operator&(const Profile& o) const {
        Profile r;
        r.models = models & o.models;
        for (int y = 0; y < 4; ++y)
            r.reduct[y] = reduct[y] & o.reduct[y];
        return r;
    }
};

class Pair {
public:
    Pair(Atom first, Atom second) : atoms_{std::move(first), std::move(second)} {}

    AtomSet set(int mask) const {
        AtomSet s;
        for (int i = 0; i < 2; ++i)
            if (mask & (1 << i))
                s.insert(atoms_[i]);
        return s;
    }
    int mask(const AtomSet& s) const {
        int m = 0;
        for (int i = 0; i < 2; ++i)
            if (s.count(atoms_[i]))
                m |= 1 << i;
        return m;
    }
    bool covers(const AtomSet& s) const { return set(mask(s)) == s; }

    bool body_true(const Rule& r, int y) const {
        AtomSet ys = set(y);
        for (const auto& l : r.body()) {
            bool v = l.is_external() ? eval_external(reg, l.external(), ys) : ys.count(l.atom()) != 0;
            if (v == l.negated)
                return false;
        }
        return true;
    }
    bool holds(const Rule& r, int y) const { return !body_true(r, y) || (mask(AtomSet(r.head().begin(), r.head().end())) & y); }

    Profile profile(const Rule& r) const {
        Profile p;
        p.models = 0;
        for (int y = 0; y < 4; ++y) {
            p.models |= static_cast<std::uint8_t>(holds(r, y) << y);
            if (!body_true(r, y))
                continue;
            p.reduct[y] = 0;
            for (int x = 0; x < 4; ++x)
                p.reduct[y] |= static_cast<std::uint8_t>(holds(r, x) << x);
        }
        return p;
    }
    Profile profile(const Program& prg) const {
        Profile p;
        for (const auto& r : prg)
            p = p & profile(r);
        return p;
    }

private:
    std::array<Atom, 2> atoms_;
};

// Answer sets of a profile as a 4-bit mask over interpretations.
int answer_sets(const Profile& p) {
    int out = 0;
    for (int y = 0; y < 4; ++y) {
        if (!(p.models & (1 << y)))
            continue;
        bool minimal = true;
        for (int x = 0; x < 4; ++x)
            if ((x & y) == x && x != y && (p.reduct[y] & (1 << x)))
                minimal = false;
        if (minimal)
            out |= 1 << y;
    }
    return out;
}

Rule make_rule(const Pair& pr, int head, int pos, int neg) {
    std::vector<Atom> h;
    for (const auto& a : pr.set(head))
        h.push_back(a);
    std::vector<BodyLiteral> b;
    for (const auto& a : pr.set(pos))
        b.emplace_back(a);
    for (const auto& a : pr.set(neg))
        b.emplace_back(a, true);
    return Rule(h, b);
}

// Profiles of a family of added programs R with heads in H and bodies in B:
// every set of positive rules (this class alone decides containment), plus
// every program of at most two rules with default negation.
struct ExtensionClass {
    std::vector<Profile> profiles;
    std::vector<Program> programs;
};

ExtensionClass extension_class(const Pair& pr, int h, int b) {
    std::vector<Rule> positive, general;
    for (int head = 0; head < 4; ++head) {
        if ((head & h) != head)
            continue;
        for (int pos = 0; pos < 4; ++pos) {
            if ((pos & b) != pos)
                continue;
            for (int neg = 0; neg < 4; ++neg) {
                if ((neg & b) != neg || (pos & neg))
                    continue;
                general.push_back(make_rule(pr, head, pos, neg));
                if (neg == 0 && !(head & pos))
                    positive.push_back(make_rule(pr, head, pos, 0));
            }
        }
    }
    ExtensionClass out;
    std::set<Program> seen;
    auto add = [&](Program r) {
        if (seen.insert(r).second) {
            out.profiles.push_back(pr.profile(r));
            out.programs.push_back(std::move(r));
        }
    };
    for (std::uint32_t m = 0; m < (1u << positive.size()); ++m) {
        Program r;
        for (std::size_t k = 0; k < positive.size(); ++k)
            if (m & (1u << k))
                r.insert(positive[k]);
        add(r);
    }
    for (std::size_t i = 0; i < general.size(); ++i) {
        add(Program{general[i]});
        for (std::size_t j = i + 1; j < general.size(); ++j)
            add(Program{general[i], general[j]});
    }
    return out;
}

// Answer-set masks of P u R for every R of the class.
std::string behaviour(const Profile& p, const ExtensionClass& ext) {
    std::string out(ext.profiles.size(), '\0');
    for (std::size_t i = 0; i < ext.profiles.size(); ++i)
        out[i] = static_cast<char>(answer_sets(p & ext.profiles[i]));
    return out;
}

bool contained(const std::string& p, const std::string& q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] & ~q[i])
            return false;
    return true;
}

// Corpus of programs over {a,b} with up to three rules: every
// non-tautological ordinary rule plus a few rules with external atoms.
std::vector<Program> corpus(const Pair& pr) {
    std::vector<Rule> pool;
    for (int head = 0; head < 4; ++head)
        for (int pos = 0; pos < 4; ++pos)
            for (int neg = 0; neg < 4; ++neg)
                if (!(head & pos) && !(pos & neg))
                    pool.push_back(make_rule(pr, head, pos, neg));
    for (const auto& r : prog("a :- &aOrNotB[a,b](). b :- &neg[a](). a :- &id[b](). b :- not &neg[b]()."))
        pool.push_back(r);
    std::vector<Program> out{Program{}};
    for (std::size_t i = 0; i < pool.size(); ++i) {
        out.push_back({pool[i]});
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            out.push_back({pool[i], pool[j]});
            if (kCorpusMaxRules >= 3)
                for (std::size_t k = j + 1; k < pool.size(); ++k)
                    out.push_back({pool[i], pool[j], pool[k]});
        }
    }
    std::sort(out.begin(), out.end(), [](const Program& l, const Program& r) { return l.size() < r.size(); });
    return out;
}

bool is_extension(const Program& r, const Pair& pr, int h, int b) {
    for (const auto& rule : r) {
        if (rule.has_external())
            return false;
        if ((pr.mask(AtomSet(rule.head().begin(), rule.head().end())) & ~h) ||
            !pr.covers(AtomSet(rule.head().begin(), rule.head().end())))
            return false;
        AtomSet body = set_union(rule.positive_body_atoms(), rule.negative_body_atoms());
        if (!pr.covers(body) || (pr.mask(body) & ~b))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Report criterion1() {
    Report rep;
    Timer t;
    const std::vector<Mode> modes = {Mode::Brute, Mode::Traditional, Mode::SupportSets, Mode::Inlining};
    auto all_modes = [&](const Program& p, const AtomSet& u, const std::set<AtomSet>& expected, const std::string& name) {
        for (Mode m : modes) {
            auto got = evaluate(p, u, reg, nullptr, m).answer_sets;
            rep.check(got == expected, name + " in mode " + mode_name(m) + " gave " + show(got));
        }
    };
    all_modes(prog("p :- &id[p]()."), {}, sets({""}), "p <- &id[p]");
    all_modes(prog("p(a) v p(b) :- &atMostOne[p]()."), {}, sets({"p(a)", "p(b)"}), "atMostOne");
    all_modes(prog("a :- &true[a]()."), {}, sets({"a"}), "a <- &true[a]");
    all_modes(prog("a :- &id[a]()."), {}, sets({""}), "a <- &id[a]");
    all_modes(prog("p :- not &neg[p]()."), {}, sets({""}), "p <- not &neg[p]");

    // guessing candidates of the atMostOne program
    auto amo = prog("p(a) v p(b) :- &atMostOne[p]().");
    auto [guess, gm] = guessing_program(amo);
    auto candidates = ordinary_answer_sets(guess, {});
    auto compatible = compatible_sets(amo, {}, reg);
    rep.check(candidates == sets({"p(a), aux__e_atMostOne_1", "p(b), aux__e_atMostOne_1", "aux__ne_atMostOne_1"}),
              "atMostOne candidates " + show(candidates));
    rep.check(compatible == sets({"p(a), aux__e_atMostOne_1", "p(b), aux__e_atMostOne_1"}),
              "atMostOne compatible sets " + show(compatible));

    // inlining keeps the answer set of the always-true atom and the negated occurrence
    for (const auto& [text, expected] : std::vector<std::pair<std::string, std::set<AtomSet>>>{
             {"a :- &true[a]().", sets({"a"})}, {"p :- not &neg[p]().", sets({""})}, {"a :- &id[a]().", sets({""})}}) {
        auto p = prog(text);
        auto res = inline_all(p, derive_families(p, {}, reg), {}, &reg);
        std::set<AtomSet> projected;
        std::size_t n = 0;
        for (const auto& y : ordinary_answer_sets(res.program, {})) {
            projected.insert(project(y, res));
            ++n;
        }
        rep.check(projected == expected && n == expected.size(), "inlined " + text + " gave " + show(projected));
    }

    auto aornotb = prog("a :- &aOrNotB[a,b]().");
    AtomSet u = atoms("a, b");
    auto res = inline_all(aornotb, derive_families(aornotb, u, reg), u, &reg);
    auto as = ordinary_answer_sets(res.program, {});
    rep.check(as == std::set<AtomSet>{atoms("a, aux__xe_1, aux__bar_1__a, aux__bar_1__b")}, "aOrNotB inlined " + show(as));

    double ms = t.ms();
    rep.check(ms < kGoldenBudgetMs, "took " + std::to_string(ms) + " ms");
    rep.notes.push_back(std::to_string(static_cast<int>(ms)) + " ms");
    return rep;
}

std::string one_line(const Program& p) {
    std::string s = print_program(p);
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

std::set<HBModel> hb_models(std::initializer_list<std::pair<const char*, const char*>> items) {
    std::set<HBModel> out;
    for (auto [x, y] : items)
        out.insert({atoms(x), atoms(y)});
    return out;
}

Report criterion2() {
    Report rep;
    HBContext both{atoms("a, b"), atoms("a, b")};
    HBContext hb{atoms("a, b"), atoms("b")};
    AtomSet u = atoms("a, b");

    auto p1 = prog("a :- &aOrNotB[a,b]().");
    auto q1 = prog("a :- a. a :- not b.");
    auto expected1 = hb_models({{"", "b"}, {"a", "a"}, {"b", "b"}, {"a", "a, b"}, {"b", "a, b"}, {"a, b", "a, b"}});
    rep.check(sigma_models(p1, both, {}, reg) == expected1, "first example: sigma of the external program");
    auto sq1 = sigma_models(q1, both, {}, reg);
    rep.check(sq1 == expected1, "first example: sigma of {a <- a; a <- not b} is expected to equal the list above, but "
                                "(∅,{a,b}) is also a model since ∅ satisfies its reduct {a <- a}");
    bool v1 = equivalent(p1, q1, both, {}, reg);
    rep.check(v1, "first example: verdict expected true, computed false");
    if (!v1) {
        auto sep = find_separation(p1, q1, both, {}, reg);
        bool verified = sep && answer_sets_brute(naive::join(p1, sep->r), u, reg) !=
                                   answer_sets_brute(naive::join(q1, sep->r), u, reg);
        rep.notes.push_back(std::string("first example separated by brute force: ") + (verified ? "yes" : "no") +
                            (sep ? " with R = " + one_line(sep->r) : ""));
    }

    auto p = prog("a :- &neg[b](). b :- &neg[a](). a :- b.");
    auto q = prog("a v b. a :- b.");
    auto expected2 = hb_models({{"a", "a"}, {"a", "a, b"}, {"a, b", "a, b"}});
    rep.check(sigma_models(p, hb, {}, reg) == expected2, "second example: sigma of P");
    rep.check(sigma_models(q, hb, {}, reg) == expected2, "second example: sigma of Q");
    rep.check(equivalent(p, q, hb, {}, reg), "second example: verdict expected true");

    auto expected3 = hb_models({{"a", "a"}, {"", "a, b"}, {"a", "a, b"}, {"a, b", "a, b"}});
    rep.check(sigma_models(p, both, {}, reg) == expected3, "third example: sigma of P");
    rep.check(sigma_models(q, both, {}, reg) == expected2, "third example: sigma of Q");
    rep.check(!equivalent(p, q, both, {}, reg), "third example: verdict expected false");
    auto sep = find_separation(p, q, both, {}, reg);
    rep.check(sep.has_value(), "third example: no counterexample");
    if (sep) {
        rep.check(sep->r.count(Rule({Atom("b")}, {BodyLiteral(Atom("a"))})) == 1, "counterexample lacks b <- a");
        rep.check(answer_sets_brute(naive::join(p, sep->r), u, reg) != answer_sets_brute(naive::join(q, sep->r), u, reg),
                  "counterexample does not separate");
        rep.check(naive::is_answer_set(naive::join(sep->p_side ? p : q, sep->r), u, reg) &&
                      !naive::is_answer_set(naive::join(sep->p_side ? q : p, sep->r), u, reg),
                  "witness Y is not separated by the counterexample");
    }
    return rep;
}

Report criterion3() {
    Report rep;
    Timer t;
    std::mt19937_64 rng(20261018);
    int negated = 0;
    for (int i = 0; i < kRandomInliningPrograms; ++i) {
        Program p = randprog::random_program(rng, {8, 1, 2, 0.3});
        AtomSet u = ordinary_atoms(p);
        for (const auto& occ : external_occurrences(p))
            negated += occ.negated;
        auto res = inline_all(p, derive_families(p, u, reg), u, &reg);
        std::map<AtomSet, int> ext;
        for (const auto& y : ordinary_answer_sets(res.program, {}))
            ++ext[project(y, res)];
        auto expected = answer_sets_brute(p, u, reg);
        bool ok = ext.size() == expected.size();
        for (const auto& y : expected)
            ok = ok && ext.count(y) && ext[y] == 1;
        rep.check(ok, "program " + std::to_string(i) + ": " + one_line(p));
    }
    double ms = t.ms();
    rep.check(ms < kInliningBudgetMs, "took " + std::to_string(ms) + " ms");
    rep.notes.push_back(std::to_string(kRandomInliningPrograms) + " programs, " + std::to_string(negated) +
                        " negated occurrences, " + std::to_string(static_cast<int>(ms)) + " ms");
    return rep;
}

Report criterion4() {
    Report rep;
    int families = 0;
    for (const auto& e : oracle_cases::builtin_atoms())
        for (const auto& d : oracle_cases::domains(kMaxFamilyDomain))
            for (Sigma s : {Sigma::T, Sigma::F}) {
                std::string what = e.str() + " over " + format_atom_set(d) + " " + sigma_char(s);
                std::set<AtomSet> truth;
                for (const auto& y : naive::subsets(d))
                    if (eval_external(reg, e, y) == (s == Sigma::T))
                        truth.insert(y);
                auto f = derive_family(reg, e, d, s);
                rep.check(verify_family(reg, f), what + ": derived family fails verification");
                rep.check(matched_assignments(f) == truth, what + ": derived family matches the wrong assignments");
                auto c = convert_polarity(f);
                rep.check(verify_family(reg, c), what + ": converted family fails verification");
                auto m = minimize_family(f);
                rep.check(matched_assignments(m) == truth, what + ": minimization changed the matched assignments");
                rep.check(matched_assignments(convert_polarity(convert_polarity(m))) == truth,
                          what + ": double conversion changed the matched assignments");
                ++families;
            }
    rep.notes.push_back(std::to_string(families) + " families");
    return rep;
}

struct CorpusRun {
    Report equivalence;
    Report inconsistency;
};

CorpusRun criteria5and6() {
    CorpusRun run;
    Report& eq = run.equivalence;
    Report& inc = run.inconsistency;
    Timer t;
    Pair pr(Atom("a"), Atom("b"));
    AtomSet u = atoms("a, b");
    auto programs = corpus(pr);
    std::vector<Profile> profiles;
    for (const auto& p : programs)
        profiles.push_back(pr.profile(p));
    std::size_t small = 0;
    while (small < programs.size() && programs[small].size() <= 2)
        ++small;

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, programs.size() - 1);
    std::size_t witness_checks = 0, witnesses = 0, equivalent_calls = 0, inc_true = 0;
    for (int h = 0; h < 4; ++h)
        for (int b = 0; b < 4; ++b) {
            HBContext ctx{pr.set(h), pr.set(b)};
            std::string cname = print_hb(ctx);
            auto ext = extension_class(pr, h, b);
            std::vector<std::string> beh(programs.size());
            std::map<std::set<HBModel>, std::size_t> by_sigma;
            std::map<std::string, std::size_t> by_behaviour;
            std::vector<std::size_t> sigma_rep(programs.size()), beh_rep(programs.size());
            for (std::size_t i = 0; i < programs.size(); ++i) {
                beh[i] = behaviour(profiles[i], ext);
                sigma_rep[i] = by_sigma.emplace(sigma_models(programs[i], ctx, u, reg), i).first->second;
                beh_rep[i] = by_behaviour.emplace(beh[i], i).first->second;
            }
            // Two programs are equivalent iff they share the representative
            // of their class, so equal partitions settle every pair.
            std::size_t mismatches = 0;
            for (std::size_t i = 0; i < programs.size(); ++i) {
                bool agree = (sigma_rep[i] == i) == (beh_rep[i] == i) && beh_rep[sigma_rep[i]] == beh_rep[i] &&
                             sigma_rep[beh_rep[i]] == sigma_rep[i];
                if (!agree && mismatches++ < 3)
                    eq.check(false, cname + ": " + one_line(programs[i]) + " classified differently");
            }
            eq.check(mismatches == 0, cname + ": " + std::to_string(mismatches) + " programs classified differently");

            auto check_equivalent = [&](std::size_t i, std::size_t j) {
                ++equivalent_calls;
                eq.check(equivalent(programs[i], programs[j], ctx, u, reg) == (beh[i] == beh[j]),
                         cname + ": equivalent() on " + one_line(programs[i]) + " | " + one_line(programs[j]));
            };
            auto check_witness = [&](std::size_t i, std::size_t j) {
                ++witness_checks;
                auto w = find_witness(programs[i], programs[j], ctx, u, reg);
                bool holds = contained(beh[i], beh[j]);
                eq.check(w.has_value() != holds,
                         cname + ": find_witness on " + one_line(programs[i]) + " | " + one_line(programs[j]));
                if (!w)
                    return;
                ++witnesses;
                Program r = witness_to_counterexample(*w, programs[i], programs[j], ctx, reg);
                int y = pr.mask(w->y);
                Profile rp = pr.profile(r);
                bool separates = is_extension(r, pr, h, b) && (answer_sets(profiles[i] & rp) & (1 << y)) &&
                                 !(answer_sets(profiles[j] & rp) & (1 << y));
                eq.check(separates, cname + ": counterexample " + one_line(r) + " for " + one_line(programs[i]) +
                                        " | " + one_line(programs[j]));
            };
            for (std::size_t i = 0; i < small; ++i)
                for (std::size_t j = 0; j < small; ++j)
                    check_witness(i, j);
            for (std::size_t k = 0; k < kSampledPairsPerContext; ++k) {
                std::size_t i = pick(rng), j = pick(rng);
                check_witness(i, j);
                check_equivalent(i, j);
            }
            for (std::size_t i = 0; i < programs.size(); ++i)
                check_equivalent(i, sigma_rep[i]);

            for (std::size_t i = 0; i < programs.size(); ++i) {
                auto r1 = persistently_inconsistent(programs[i], ctx, u, reg);
                auto r2 = persistently_inconsistent_ufs(programs[i], ctx, u, reg);
                bool none = std::all_of(beh[i].begin(), beh[i].end(), [](char c) { return c == 0; });
                inc.check(r1.inconsistent == r2.inconsistent, cname + ": criteria disagree on " + one_line(programs[i]));
                inc.check(r1.inconsistent == none, cname + ": extension search disagrees on " + one_line(programs[i]));
                inc_true += r1.inconsistent;
            }
        }

    // the two blocked-atom programs over their own alphabets
    auto named = [&](const std::string& text, const Pair& alphabet, const Atom& blocked) {
        Program p = prog(text);
        AtomSet full = set_union(alphabet.set(3), ordinary_atoms(p));
        Profile prof = alphabet.profile(p);
        for (int h = 0; h < 4; ++h)
            for (int b = 0; b < 4; ++b) {
                HBContext ctx{alphabet.set(h), alphabet.set(b)};
                bool expected = !ctx.h.count(blocked);
                auto r1 = persistently_inconsistent(p, ctx, full, reg);
                auto r2 = persistently_inconsistent_ufs(p, ctx, full, reg);
                auto beh = behaviour(prof, extension_class(alphabet, h, b));
                bool none = std::all_of(beh.begin(), beh.end(), [](char c) { return c == 0; });
                std::string what = text + " " + print_hb(ctx);
                inc.check(r1.inconsistent == expected, what + ": reduct verdict");
                inc.check(r2.inconsistent == expected, what + ": unfounded-set verdict");
                inc.check(none == expected, what + ": extension search");
            }
    };
    named("p :- &neg[p]().", Pair(Atom("p"), Atom("q")), Atom("p"));
    named("a :- &aOrNotB[a,b](). :- a.", pr, Atom("b"));

    double ms = t.ms();
    eq.check(ms < kEquivalenceBudgetMs, "took " + std::to_string(ms) + " ms");
    eq.notes.push_back(std::to_string(programs.size()) + " programs x 16 contexts, " + std::to_string(witness_checks) +
                       " witness searches, " + std::to_string(witnesses) + " counterexamples, " +
                       std::to_string(equivalent_calls) + " equivalent() calls, " + std::to_string(static_cast<int>(ms)) +
                       " ms");
    inc.notes.push_back(std::to_string(programs.size() * 16) + " program/context pairs, " + std::to_string(inc_true) +
                        " persistently inconsistent");
    return run;
}

Report criterion7() {
    Report rep;
    Timer t;
    const std::vector<Mode> modes = {Mode::Traditional, Mode::SupportSets, Mode::Inlining};
    auto run = [&](const BenchSpec& spec, const Graph& g) {
        auto out = run_bench(generate_instance(spec, g), modes);
        std::string what = problem_name(spec.problem) + " n=" + std::to_string(spec.size) + " edges=" +
                           std::to_string(g.edges.size());
        rep.check(out.answer_sets[0] == out.answer_sets[1] && out.answer_sets[1] == out.answer_sets[2],
                  what + ": modes disagree");
        rep.check(out.rows[2].oracle_calls == 0, what + ": inlining called the oracle");
        rep.check(out.rows[0].candidates_checked > 0 && out.rows[0].oracle_calls >= out.rows[0].candidates_checked,
                  what + ": traditional made fewer oracle calls than candidates");
        std::ostringstream line;
        line << what << " AS=" << out.rows[0].answer_set_count << " calls(trad/sup/inl)=" << out.rows[0].oracle_calls << "/"
             << out.rows[1].oracle_calls << "/" << out.rows[2].oracle_calls;
        rep.notes.push_back(line.str());
    };
    for (int n = 3; n <= 6; ++n) {
        BenchSpec spec{Problem::Non3Col, n, static_cast<std::uint64_t>(n)};
        run(spec, Graph::complete(n));
        run(spec, Graph::random(n, 0.6, spec.seed));
    }
    for (int n = 4; n <= 7; ++n) {
        BenchSpec spec{Problem::VertexCover, n, static_cast<std::uint64_t>(n), n / 2};
        run(spec, Graph::complete(n));
        run(spec, Graph::random(n, 0.5, spec.seed));
    }
    double ms = t.ms();
    rep.check(ms < kBenchBudgetMs, "took " + std::to_string(ms) + " ms");
    rep.notes.push_back(std::to_string(static_cast<int>(ms)) + " ms");
    return rep;
}

bool print(int id, const std::string& title, const Report& rep) {
    std::cout << (rep.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << rep.checks << " checks";
    if (!rep.ok())
        std::cout << ", " << rep.failures.size() << " failed";
    std::cout << ")\n";
    for (const auto& n : rep.notes)
        std::cout << "    " << n << "\n";
    for (const auto& f : rep.failures)
        if (!f.empty())
            std::cout << "    failed: " << f << "\n";
    std::cout.flush();
    return rep.ok();
}

} // namespace

int main() {
    bool ok = true;
    ok &= print(1, "golden answer sets of the worked examples", criterion1());
    ok &= print(2, "sigma models, verdicts and counterexample of the worked examples", criterion2());
    ok &= print(3, "inlining preserves answer sets on random programs", criterion3());
    ok &= print(4, "support family algebra on every built-in oracle", criterion4());
    auto corpus_run = criteria5and6();
    ok &= print(5, "equivalence agrees with extension enumeration on the {a,b} corpus", corpus_run.equivalence);
    ok &= print(6, "persistent inconsistency criteria agree with each other and with extension search", corpus_run.inconsistency);
    ok &= print(7, "benchmark modes agree and inlining needs no oracle calls", criterion7());
    return ok ? 0 : 1;
}
