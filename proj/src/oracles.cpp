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

#include "hexinline/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "hexinline/error.hpp"

namespace hexinline {

namespace {

using Mask = std::uint64_t;

struct Packed {
    Mask pos = 0;
    Mask neg = 0;
    bool operator==(const Packed&) const = default;
};

struct PackedHash {
    std::size_t operator()(const Packed& p) const { return std::hash<Mask>()(p.pos * 0x9e3779b97f4a7c15ULL ^ p.neg); }
};

bool subsumes(const Packed& k, const Packed& t) { return (k.pos & ~t.pos) == 0 && (k.neg & ~t.neg) == 0; }

class Domain {
public:
    explicit Domain(const AtomSet& atoms) : atoms_(atoms.begin(), atoms.end()) {
        if (atoms_.size() > 64)
            throw Error(ErrorKind::CapExceeded, "family domain exceeds 64 atoms");
    }

    std::size_t size() const { return atoms_.size(); }

    Mask mask(const AtomSet& s) const {
        Mask m = 0;
        for (const auto& a : s) {
            auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
            if (it == atoms_.end() || *it != a)
                throw Error(ErrorKind::InvalidFamily, "support set atom " + a.str() + " is outside the family domain");
            m |= Mask{1} << (it - atoms_.begin());
        }
        return m;
    }

    AtomSet set(Mask m) const {
        AtomSet out;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (m >> i & 1)
                out.insert(atoms_[i]);
        return out;
    }

    Packed pack(const SupportSet& s) const { return {mask(s.pos), mask(s.neg)}; }
    SupportSet unpack(const Packed& p) const { return {set(p.pos), set(p.neg)}; }

private:
    std::vector<Atom> atoms_;
};

std::vector<Packed> pack_all(const Domain& d, const SupportFamily& fam) {
    std::vector<Packed> out;
    for (const auto& s : fam.sets)
        out.push_back(d.pack(s));
    return out;
}

SupportFamily with_sets(const SupportFamily& fam, Sigma sigma, const Domain& d, const std::vector<Packed>& sets) {
    SupportFamily out{fam.external, sigma, {}, fam.domain};
    for (const auto& p : sets)
        out.sets.insert(d.unpack(p));
    return out;
}

std::vector<Packed> absorb(std::vector<Packed> sets) {
    std::sort(sets.begin(), sets.end(), [](const Packed& a, const Packed& b) {
        int ca = std::popcount(a.pos | a.neg), cb = std::popcount(b.pos | b.neg);
        if (ca != cb)
            return ca < cb;
        return a.pos != b.pos ? a.pos < b.pos : a.neg < b.neg;
    });
    std::vector<Packed> kept;
    for (const auto& t : sets) {
        bool covered = std::any_of(kept.begin(), kept.end(), [&](const Packed& k) { return subsumes(k, t); });
        if (!covered)
            kept.push_back(t);
    }
    return kept;
}

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw Error(ErrorKind::CapExceeded, "family derivation cap exceeded (" + std::to_string(n) + " atoms, cap " +
                                                std::to_string(cap) + ")");
}

std::size_t count_over(const AtomSet& y, const std::string& pred) {
    return static_cast<std::size_t>(std::count_if(y.begin(), y.end(), [&](const Atom& a) { return a.predicate == pred; }));
}

std::size_t count_inputs(const AtomSet& y, const ExternalAtom& e) {
    std::size_t n = 0;
    for (const auto& p : e.input_predicates())
        n += count_over(y, p);
    return n;
}

const std::string& nth_predicate(const ExternalAtom& e, std::size_t i) {
    static const std::string none;
    auto preds = e.input_predicates();
    if (preds.size() <= i)
        throw Error(ErrorKind::Precondition, "&" + e.name + " expects at least " + std::to_string(i + 1) + " predicate inputs");
    for (const auto& t : e.inputs)
        if (t.is_predicate() && i-- == 0)
            return t.name;
    return none;
}

} // namespace

bool SupportSet::matches(const AtomSet& y) const {
    for (const auto& a : pos)
        if (!y.count(a))
            return false;
    for (const auto& a : neg)
        if (y.count(a))
            return false;
    return true;
}

std::string SupportSet::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& a : pos) {
        out += (first ? "" : ", ") + a.str();
        first = false;
    }
    for (const auto& a : neg) {
        out += (first ? "-" : ", -") + a.str();
        first = false;
    }
    return out + "}";
}

bool SupportFamily::matches(const AtomSet& y) const {
    return std::any_of(sets.begin(), sets.end(), [&](const SupportSet& s) { return s.matches(y); });
}

OracleRegistry OracleRegistry::builtin() {
    OracleRegistry reg;
    reg.add({"id", [](const AtomSet& y, const ExternalAtom&) { return !y.empty(); }, {}});
    reg.add({"neg", [](const AtomSet& y, const ExternalAtom&) { return y.empty(); }, {}});
    reg.add({"true", [](const AtomSet&, const ExternalAtom&) { return true; }, {}});
    reg.add({"aOrNotB",
             [](const AtomSet& y, const ExternalAtom& e) {
                 return count_over(y, nth_predicate(e, 0)) > 0 || count_over(y, nth_predicate(e, 1)) == 0;
             },
             {}});
    reg.add({"atMostOne", [](const AtomSet& y, const ExternalAtom& e) { return count_inputs(y, e) <= 1; }, {}});
    reg.add({"diff",
             [](const AtomSet& y, const ExternalAtom& e) {
                 return y.count(Atom(nth_predicate(e, 0), e.outputs)) && !y.count(Atom(nth_predicate(e, 1), e.outputs));
             },
             {}});
    reg.add({"even", [](const AtomSet& y, const ExternalAtom& e) { return count_inputs(y, e) % 2 == 0; }, {}});
    reg.add({"countGeq",
             [](const AtomSet& y, const ExternalAtom& e) {
                 auto consts = e.input_constants();
                 if (consts.size() != 1)
                     throw Error(ErrorKind::Precondition, "&countGeq expects one constant input (the bound)");
                 long k = 0;
                 try {
                     k = std::stol(consts[0]);
                 } catch (const std::exception&) {
                     throw Error(ErrorKind::Precondition, "&countGeq bound is not an integer: " + consts[0]);
                 }
                 return static_cast<long>(count_inputs(y, e)) >= k;
             },
             {}});
    return reg;
}

void OracleRegistry::add(Oracle oracle) {
    auto name = oracle.name;
    oracles_[name] = std::move(oracle);
}

const Oracle& OracleRegistry::get(const std::string& name) const {
    auto it = oracles_.find(name);
    if (it == oracles_.end())
        throw Error(ErrorKind::UnknownOracle, "unknown oracle &" + name);
    return it->second;
}

std::vector<std::string> OracleRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, o] : oracles_)
        out.push_back(name);
    return out;
}

bool eval_external(const OracleRegistry& reg, const ExternalAtom& e, const AtomSet& y) {
    const Oracle& o = reg.get(e.name);
    auto preds = e.input_predicates();
    AtomSet restricted;
    for (const auto& a : y)
        if (std::find(preds.begin(), preds.end(), a.predicate) != preds.end())
            restricted.insert(a);
    return o.eval(restricted, e);
}

SupportFamily derive_family(const OracleRegistry& reg, const ExternalAtom& e, const AtomSet& domain, Sigma sigma,
                            std::size_t cap) {
    check_cap(domain.size(), cap);
    reg.get(e.name);
    Domain d(domain);
    Mask all = d.size() == 64 ? ~Mask{0} : (Mask{1} << d.size()) - 1;
    std::vector<Packed> sets;
    for (Mask y = 0;; ++y) {
        if (eval_external(reg, e, d.set(y)) == (sigma == Sigma::T))
            sets.push_back({y, all & ~y});
        if (y == all)
            break;
    }
    return with_sets(SupportFamily{e, sigma, {}, domain}, sigma, d, sets);
}

std::optional<AtomSet> family_violation(const OracleRegistry& reg, const SupportFamily& fam, std::size_t cap) {
    check_cap(fam.domain.size(), cap);
    Domain d(fam.domain);
    auto sets = pack_all(d, fam);
    Mask all = (Mask{1} << d.size()) - 1;
    for (Mask y = 0;; ++y) {
        bool matched = std::any_of(sets.begin(), sets.end(), [y](const Packed& s) {
            return (y & s.pos) == s.pos && (y & s.neg) == 0;
        });
        AtomSet ys = d.set(y);
        if (matched != (eval_external(reg, fam.external, ys) == (fam.sigma == Sigma::T)))
            return ys;
        if (y == all)
            break;
    }
    return std::nullopt;
}

bool verify_family(const OracleRegistry& reg, const SupportFamily& fam, std::size_t cap) {
    try {
        return !family_violation(reg, fam, cap).has_value();
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::InvalidFamily)
            return false;
        throw;
    }
}

SupportFamily convert_polarity(const SupportFamily& fam, bool absorb_supersets) {
    Domain d(fam.domain);
    std::vector<Packed> current{Packed{}};
    for (const auto& s : pack_all(d, fam)) {
        std::unordered_set<Packed, PackedHash> next;
        for (const auto& t : current) {
            for (Mask m = s.pos; m; m &= m - 1) {
                Mask bit = m & -m;
                if (!(t.pos & bit))
                    next.insert({t.pos, t.neg | bit});
            }
            for (Mask m = s.neg; m; m &= m - 1) {
                Mask bit = m & -m;
                if (!(t.neg & bit))
                    next.insert({t.pos | bit, t.neg});
            }
        }
        current.assign(next.begin(), next.end());
        if (absorb_supersets)
            current = absorb(std::move(current));
    }
    return with_sets(fam, flip(fam.sigma), d, current);
}

SupportFamily minimize_family(const SupportFamily& fam) {
    Domain d(fam.domain);
    auto packed = pack_all(d, fam);
    std::unordered_set<Packed, PackedHash> current(packed.begin(), packed.end());
    for (;;) {
        std::unordered_set<Packed, PackedHash> next, used;
        for (const auto& a : current) {
            for (Mask m = a.pos | a.neg; m; m &= m - 1) {
                Mask bit = m & -m;
                Packed partner{a.pos ^ bit, a.neg ^ bit};
                if (current.count(partner)) {
                    next.insert({a.pos & ~bit, a.neg & ~bit});
                    used.insert(a);
                }
            }
        }
        if (next.empty())
            break;
        for (const auto& a : current)
            if (!used.count(a))
                next.insert(a);
        current = std::move(next);
    }
    return with_sets(fam, fam.sigma, d, absorb({current.begin(), current.end()}));
}

SupportFamily restrict_family(const SupportFamily& fam, const AtomSet& domain) {
    SupportFamily out{fam.external, fam.sigma, {}, domain};
    for (const auto& s : fam.sets) {
        if (!is_subset(s.pos, domain))
            continue;
        out.sets.insert({s.pos, set_intersection(s.neg, domain)});
    }
    return out;
}

std::set<AtomSet> matched_assignments(const SupportFamily& fam, std::size_t cap) {
    check_cap(fam.domain.size(), cap);
    Domain d(fam.domain);
    auto sets = pack_all(d, fam);
    Mask all = (Mask{1} << d.size()) - 1;
    std::set<AtomSet> out;
    for (Mask y = 0;; ++y) {
        if (std::any_of(sets.begin(), sets.end(), [y](const Packed& s) { return (y & s.pos) == s.pos && (y & s.neg) == 0; }))
            out.insert(d.set(y));
        if (y == all)
            break;
    }
    return out;
}

SupportFamily family_for(const OracleRegistry& reg, const ExternalAtom& e, const AtomSet& domain, Sigma sigma) {
    const Oracle& o = reg.get(e.name);
    if (o.family) {
        if (auto fam = o.family(e, domain, sigma))
            return *fam;
    }
    return minimize_family(derive_family(reg, e, domain, sigma));
}

FamilyMap derive_families(const Program& p, const AtomSet& universe, const OracleRegistry& reg) {
    FamilyMap out;
    for (const auto& occ : external_occurrences(p))
        out[occ] = family_for(reg, occ.atom, input_atoms(occ.atom, p, universe), occurrence_sigma(occ));
    return out;
}

FamilyMap attach_families(const Program& p, const AtomSet& universe, const std::vector<SupportFamily>& loaded) {
    FamilyMap out;
    for (const auto& occ : external_occurrences(p)) {
        for (const auto& fam : loaded) {
            if (fam.external == occ.atom && fam.sigma == occurrence_sigma(occ)) {
                out[occ] = restrict_family(fam, input_atoms(occ.atom, p, universe));
                break;
            }
        }
    }
    return out;
}

} // namespace hexinline
