#include "gaps/residue_sets.hpp"

#include <algorithm>
#include <set>

#include "gaps/arith.hpp"

namespace gaps::residue_sets {

bool ResidueSet::contains(std::uint64_t r) const {
    return std::binary_search(residues.begin(), residues.end(), r);
}

bool ResidueSet::subset_of(const ResidueSet& other) const {
    return std::includes(other.residues.begin(), other.residues.end(),
                         residues.begin(), residues.end());
}

SetFamily parse_family(const std::string& name) {
    if (name == "S") return SetFamily::S;
    if (name == "T") return SetFamily::T;
    if (name == "U") return SetFamily::U;
    if (name == "V") return SetFamily::V;
    if (name == "W") return SetFamily::W;
    if (name == "R") return SetFamily::R;
    throw std::invalid_argument("unknown set family: " + name);
}

std::string family_name(SetFamily f) {
    switch (f) {
        case SetFamily::S: return "S";
        case SetFamily::T: return "T";
        case SetFamily::U: return "U";
        case SetFamily::V: return "V";
        case SetFamily::W: return "W";
        case SetFamily::R: return "R";
    }
    throw std::logic_error("bad family");
}

unsigned min_level(SetFamily f) {
    switch (f) {
        case SetFamily::S: return 2;
        case SetFamily::T: return 4;
        case SetFamily::U: return 3;
        case SetFamily::V: return 2;
        case SetFamily::W: return 5;
        case SetFamily::R: return 2;
    }
    throw std::logic_error("bad family");
}

std::uint64_t project(unsigned level, const Int& x) {
    if (level < 1) throw std::invalid_argument("project: level must be >= 1");
    Int m = Int(1) << level;
    return static_cast<std::uint64_t>(mod_one_based(x, m));
}

bool in_s_by_definition(unsigned level, std::uint64_t residue) {
    if (residue < 1 || residue > (std::uint64_t(1) << level)) return false;
    unsigned a = 0;
    std::uint64_t b = residue;
    while (b % 2 == 0) {
        b >>= 1;
        ++a;
    }
    return a + 2 <= level && b % 4 == 3;
}

namespace {

ResidueSet from_values(unsigned level, std::set<std::uint64_t> values) {
    ResidueSet out;
    out.level = level;
    out.residues.assign(values.begin(), values.end());
    return out;
}

ResidueSet build_s(unsigned level) {
    std::set<std::uint64_t> vals;
    for (std::uint64_t n = 1; n <= (std::uint64_t(1) << level); ++n)
        if (in_s_by_definition(level, n)) vals.insert(n);
    return from_values(level, std::move(vals));
}

ResidueSet build_u(unsigned level) {
    ResidueSet cur;
    cur.level = 3;
    cur.residues = {3};
    for (unsigned l = 4; l <= level; ++l) {
        std::set<std::uint64_t> vals(cur.residues.begin(), cur.residues.end());
        std::uint64_t half = std::uint64_t(1) << (l - 1);
        for (std::uint64_t u : cur.residues) vals.insert(u + half);
        vals.insert(3 * (std::uint64_t(1) << (l - 2)));
        cur = from_values(l, std::move(vals));
    }
    return cur;
}

ResidueSet build_w(unsigned level) {
    ResidueSet cur;
    cur.level = 5;
    cur.residues = {24};
    for (unsigned l = 6; l <= level; ++l) {
        std::set<std::uint64_t> vals(cur.residues.begin(), cur.residues.end());
        std::uint64_t half = std::uint64_t(1) << (l - 1);
        for (std::uint64_t u : cur.residues) vals.insert(u + half);
        vals.insert(3 * (std::uint64_t(1) << (l - 2)));
        cur = from_values(l, std::move(vals));
    }
    return cur;
}

// V_l and R_l by direct membership filtering over S_l; deliberately a
// separate code path from the U/W recursions so the two can be
// cross-checked.
ResidueSet build_v_or_r(unsigned level, bool require_nine) {
    ResidueSet s = build_s(level);
    ResidueSet t = build_set(SetFamily::T, level + 2);
    std::set<std::uint64_t> vals;
    for (std::uint64_t x : s.residues) {
        Int tx = tau(Int(x));
        if (!t.contains(project(level + 2, 5 * tx))) continue;
        if (require_nine && !t.contains(project(level + 2, 9 * tx))) continue;
        vals.insert(x);
    }
    return from_values(level, std::move(vals));
}

} // namespace

ResidueSet project_tau(const ResidueSet& set, unsigned target_level) {
    std::set<std::uint64_t> vals;
    for (std::uint64_t x : set.residues)
        vals.insert(project(target_level, tau(Int(x))));
    return from_values(target_level, std::move(vals));
}

ResidueSet build_set(SetFamily family, unsigned level) {
    if (level < min_level(family))
        throw std::invalid_argument("build_set: level " + std::to_string(level) +
                                    " below minimum for family " + family_name(family));
    switch (family) {
        case SetFamily::S: return build_s(level);
        case SetFamily::T: return project_tau(build_s(level - 2), level);
        case SetFamily::U: return build_u(level);
        case SetFamily::V: return build_v_or_r(level, false);
        case SetFamily::W: return build_w(level);
        case SetFamily::R: return build_v_or_r(level, true);
    }
    throw std::logic_error("bad family");
}

AbcSets abc_sets(unsigned level) {
    if (level < 5) throw std::invalid_argument("abc_sets: level must be >= 5");
    AbcSets out;
    out.A = build_set(SetFamily::T, level + 2);
    out.B = project_tau(build_set(SetFamily::U, level), level + 2);
    out.C = project_tau(build_set(SetFamily::W, level), level + 2);
    return out;
}

bool LemmaReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const LemmaCheck& c) { return c.passed; });
}

LemmaReport verify_lemmas(unsigned level) {
    if (level < 5) throw std::invalid_argument("verify_lemmas: level must be >= 5");
    LemmaReport report;
    report.level = level;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    const ResidueSet s = build_set(SetFamily::S, level);
    const ResidueSet t = build_set(SetFamily::T, level);
    const ResidueSet u = build_set(SetFamily::U, level);
    const ResidueSet v = build_set(SetFamily::V, level);
    const ResidueSet w = build_set(SetFamily::W, level);
    const ResidueSet r = build_set(SetFamily::R, level);

    auto card = [](unsigned shift) { return (std::uint64_t(1) << shift) - 1; };
    add("card_S", s.residues.size() == card(level - 1),
        "#S=" + std::to_string(s.residues.size()));
    add("card_U", u.residues.size() == card(level - 2),
        "#U=" + std::to_string(u.residues.size()));
    add("card_W", w.residues.size() == card(level - 4),
        "#W=" + std::to_string(w.residues.size()));

    add("W_subset_U", w.subset_of(u));
    add("U_subset_S", u.subset_of(s));
    add("R_subset_V", r.subset_of(v));
    add("V_subset_S", v.subset_of(s));
    add("U_subset_V", u.subset_of(v));
    add("W_subset_R", w.subset_of(r));
    add("S_subset_S_next", s.subset_of(build_set(SetFamily::S, level + 1)));
    add("T_subset_T_next", t.subset_of(build_set(SetFamily::T, level + 1)));

    // Lemma 2.2: shift by 2^{l-1} stays in S, except at 3*2^{l-2}
    {
        bool ok = true;
        std::uint64_t exceptional = 3 * (std::uint64_t(1) << (level - 2));
        for (std::uint64_t x : s.residues) {
            if (x == exceptional) continue;
            if (!s.contains(project(level, Int(x) + (Int(1) << (level - 1))))) {
                ok = false;
                break;
            }
        }
        add("shift_closure", ok);
    }

    // Lemma 2.4: 3*2^l - 1 not in T_{l+1}
    {
        ResidueSet t_next = build_set(SetFamily::T, level + 1);
        add("exclusion_3x2l_minus_1",
            !t_next.contains(3 * (std::uint64_t(1) << level) - 1));
    }

    // Lemma 2.1 semantics: S-classes contain no sums of two squares
    {
        std::uint64_t limit = std::uint64_t(1) << (level + 4);
        arith::TwoSquaresSieve sieve(limit);
        bool ok = true;
        std::uint64_t bad = 0;
        for (std::uint64_t n = 1; n <= limit; ++n) {
            if (s.contains(project(level, Int(n))) && sieve.representable(n)) {
                ok = false;
                bad = n;
                break;
            }
        }
        add("s_class_not_representable", ok,
            ok ? "" : "counterexample n=" + std::to_string(bad));
    }

    // Closing remark: C and pi(13C) are disjoint
    {
        AbcSets abc = abc_sets(level);
        bool ok = true;
        for (std::uint64_t c : abc.C.residues)
            if (abc.C.contains(project(level + 2, 13 * Int(c)))) {
                ok = false;
                break;
            }
        add("C_13C_disjoint", ok);
    }

    return report;
}

} // namespace gaps::residue_sets
