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

#ifndef HEXINLINE_ORACLES_HPP
#define HEXINLINE_ORACLES_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hexinline/syntax.hpp"

namespace hexinline {

enum class Sigma { T, F };

inline Sigma flip(Sigma s) { return s == Sigma::T ? Sigma::F : Sigma::T; }
inline char sigma_char(Sigma s) { return s == Sigma::T ? 'T' : 'F'; }

// S = S+ u {-a | a in S-}; matches Y iff S+ is contained in Y and S- is disjoint from Y.
struct SupportSet {
    AtomSet pos;
    AtomSet neg;

    bool consistent() const { return set_intersection(pos, neg).empty(); }
    bool matches(const AtomSet& y) const;
    std::string str() const;
    friend auto operator<=>(const SupportSet&, const SupportSet&) = default;
};

struct SupportFamily {
    ExternalAtom external;
    Sigma sigma = Sigma::T;
    std::set<SupportSet> sets;
    AtomSet domain;

    bool matches(const AtomSet& y) const;
};

struct Oracle {
    std::string name;
    // Receives only the true atoms over the input predicates of the atom.
    std::function<bool(const AtomSet& true_inputs, const ExternalAtom& e)> eval;
    // Optional hand-written complete family; empty optional means "derive it".
    std::function<std::optional<SupportFamily>(const ExternalAtom& e, const AtomSet& domain, Sigma sigma)> family;
};

class OracleRegistry {
public:
    static OracleRegistry builtin();

    void add(Oracle oracle);
    bool contains(const std::string& name) const { return oracles_.count(name) != 0; }
    const Oracle& get(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, Oracle> oracles_;
};

inline constexpr std::size_t kFamilyCap = 20;

bool eval_external(const OracleRegistry& reg, const ExternalAtom& e, const AtomSet& y);

SupportFamily derive_family(const OracleRegistry& reg, const ExternalAtom& e, const AtomSet& domain, Sigma sigma,
                            std::size_t cap = kFamilyCap);

// First assignment over the domain on which the family disagrees with the oracle.
std::optional<AtomSet> family_violation(const OracleRegistry& reg, const SupportFamily& fam, std::size_t cap = kFamilyCap);
bool verify_family(const OracleRegistry& reg, const SupportFamily& fam, std::size_t cap = kFamilyCap);

// With absorb=false the literal consistent product is returned (can be huge).
SupportFamily convert_polarity(const SupportFamily& fam, bool absorb = true);
SupportFamily minimize_family(const SupportFamily& fam);

// Members with a positive atom outside the domain can never match and are
// dropped; negative atoms outside the domain are always satisfied and removed.
SupportFamily restrict_family(const SupportFamily& fam, const AtomSet& domain);

// All assignments over the domain matched by some member.
std::set<AtomSet> matched_assignments(const SupportFamily& fam, std::size_t cap = kFamilyCap);

// Provider family when the oracle has one, otherwise derive and minimize.
SupportFamily family_for(const OracleRegistry& reg, const ExternalAtom& e, const AtomSet& domain, Sigma sigma);

// Families keyed by occurrence: positive occurrences use sigma T, negated ones sigma F.
using FamilyMap = std::map<Occurrence, SupportFamily>;

inline Sigma occurrence_sigma(const Occurrence& occ) { return occ.negated ? Sigma::F : Sigma::T; }

FamilyMap derive_families(const Program& p, const AtomSet& universe, const OracleRegistry& reg);

// Attach loaded families to the occurrences of p, restricting each to I(e,P).
// Occurrences without a loaded family are absent from the result.
FamilyMap attach_families(const Program& p, const AtomSet& universe, const std::vector<SupportFamily>& loaded);

} // namespace hexinline

#endif
