#include "multiclone/projection.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "multiclone/classifiers.hpp"

namespace multiclone {

const char* theorem2_verdict_name(Theorem2Verdict v) {
    switch (v) {
        case Theorem2Verdict::i_and_ii: return "i_and_ii";
        case Theorem2Verdict::neither: return "neither";
        case Theorem2Verdict::falsifier: return "falsifier";
        case Theorem2Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* condition_status_name(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::holds: return "holds";
        case ConditionStatus::fails: return "fails";
        case ConditionStatus::not_witnessed: return "not_witnessed";
    }
    return "?";
}

Theorem2Hypotheses certify_hypotheses(const CloneFragment& frag1, const CloneFragment& frag2) {
    if (!frag1.saturated || !frag2.saturated)
        throw UnsaturatedError("certify_hypotheses: fragments must be saturated");
    if (frag1.arity != 1 || frag2.arity != 2)
        throw std::invalid_argument("certify_hypotheses: need the arity-1 and arity-2 fragments");
    Theorem2Hypotheses hyp;
    hyp.all_constants = true;
    for (Element a = 0; a < frag1.universe.size; ++a)
        if (!frag1.contains(make_constant(frag1.universe, 1, a))) {
            hyp.all_constants = false;
            break;
        }
    hyp.binary_idempotents_are_projections = true;
    for (const MultiOp& f : frag2.members)
        if (is_idempotent(f) && !is_projection(f)) {
            hyp.binary_idempotents_are_projections = false;
            break;
        }
    return hyp;
}

bool eq8_projection_test(const Theorem2Hypotheses& ctx, const MultiOp& g) {
    if (!ctx.certified())
        throw std::invalid_argument("eq8_projection_test: hypotheses are not certified");
    if (kind(g) != OpKind::operation)
        throw std::invalid_argument("eq8_projection_test: g must be an operation");
    const int n = g.arity();
    if (n < 2) throw std::invalid_argument("eq8_projection_test: arity must be at least 2");
    const int k = g.universe().size;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Element> tuple(static_cast<std::size_t>(n));
    do {
        const MultiOp f = isomer(g, perm);
        bool ok = true;
        for (std::size_t idx = 0; idx < f.table().size() && ok; ++idx) {
            index_to_tuple(k, n, idx, tuple);
            if (tuple[0] == tuple[1] && f.at(idx) != singleton(tuple[0])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

std::vector<CloneFragment> close_all(const GeneratorSet& gens, int cap, std::size_t limit) {
    std::vector<CloneFragment> fragments;
    fragments.reserve(static_cast<std::size_t>(cap));
    for (int n = 1; n <= cap; ++n) {
        fragments.push_back(close_fixed_arity(gens, n, limit));
        if (!fragments.back().saturated)
            throw UnsaturatedError("closure hit the member limit at arity " + std::to_string(n));
    }
    return fragments;
}

void fill_condition_i(ProjectionPropertyReport& report, const std::vector<CloneFragment>& fragments,
                      int cap) {
    const Theorem2Hypotheses hyp = certify_hypotheses(fragments[0], fragments[1]);
    report.has_all_constants = hyp.all_constants;
    report.binary_idempotents_are_projections = hyp.binary_idempotents_are_projections;
    for (int n = 3; n <= cap && !report.idempotent_nonprojection; ++n)
        for (const MultiOp& f : fragments[static_cast<std::size_t>(n - 1)].members)
            if (kind(f) == OpKind::operation && is_idempotent(f) && !is_projection(f)) {
                report.idempotent_nonprojection = std::make_pair(n, f);
                break;
            }
    if (!hyp.all_constants || !hyp.binary_idempotents_are_projections)
        report.condition_i = ConditionStatus::fails;
    else if (report.idempotent_nonprojection)
        report.condition_i = ConditionStatus::holds;
    else
        report.condition_i = ConditionStatus::not_witnessed;
}

std::optional<BooleanGroup> match_group(const std::vector<CloneFragment>& fragments) {
    const Universe u = fragments[0].universe;
    for (const BooleanGroup& group : enumerate_boolean_groups(u)) {
        bool matches = true;
        for (const CloneFragment& frag : fragments) {
            const std::size_t expected =
                static_cast<std::size_t>(u.size) << static_cast<std::size_t>(frag.arity);
            if (frag.members.size() != expected) {
                matches = false;
                break;
            }
            for (const MultiOp& f : frag.members)
                if (kind(f) != OpKind::operation || !fg_membership(group, f)) {
                    matches = false;
                    break;
                }
            if (!matches) break;
        }
        if (matches) return group;
    }
    return std::nullopt;
}

}  // namespace

ProjectionPropertyReport check_condition_i(const GeneratorSet& gens, int cap, std::size_t limit) {
    if (cap < 3) throw std::invalid_argument("check_condition_i: cap must be at least 3");
    ProjectionPropertyReport report;
    fill_condition_i(report, close_all(gens, cap, limit), cap);
    return report;
}

std::vector<BooleanGroup> enumerate_boolean_groups(Universe u) {
    const int k = u.size;
    if (k != 2 && k != 4 && k != 8) return {};
    std::vector<Element> label(static_cast<std::size_t>(k));
    std::iota(label.begin(), label.end(), Element{0});
    std::set<std::vector<Element>> seen;
    std::vector<BooleanGroup> groups;
    do {
        // label maps each element to a bit-vector in GF(2)^d; pull the xor back.
        std::vector<Element> inverse(static_cast<std::size_t>(k));
        for (Element a = 0; a < k; ++a) inverse[label[a]] = a;
        std::vector<Element> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
        for (Element a = 0; a < k; ++a)
            for (Element b = 0; b < k; ++b)
                table[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + b] =
                    inverse[label[a] ^ label[b]];
        if (seen.insert(table).second) {
            BooleanGroup group{u, inverse[0], std::move(table)};
            group.validate();
            groups.push_back(std::move(group));
        }
    } while (std::next_permutation(label.begin(), label.end()));
    std::sort(groups.begin(), groups.end(), [](const BooleanGroup& lhs, const BooleanGroup& rhs) {
        return lhs.add_table < rhs.add_table;
    });
    return groups;
}

std::optional<BooleanGroup> check_condition_ii(const GeneratorSet& gens, int cap,
                                               std::size_t limit) {
    if (cap < 2) throw std::invalid_argument("check_condition_ii: cap must be at least 2");
    return match_group(close_all(gens, cap, limit));
}

ProjectionPropertyReport theorem2_equivalence(const GeneratorSet& gens, int cap,
                                              std::size_t limit) {
    if (cap < 3) throw std::invalid_argument("theorem2_equivalence: cap must be at least 3");
    for (const MultiOp& g : gens.gens)
        if (kind(g) != OpKind::operation)
            throw std::invalid_argument(
                "theorem2_equivalence: generators must be operations (Theorem 2 concerns clones)");
    ProjectionPropertyReport report;
    std::vector<CloneFragment> fragments;
    try {
        fragments = close_all(gens, cap, limit);
    } catch (const UnsaturatedError&) {
        report.verdict = Theorem2Verdict::inconclusive;
        return report;
    }
    fill_condition_i(report, fragments, cap);
    report.matched_group = match_group(fragments);
    const bool i_holds = report.condition_i == ConditionStatus::holds;
    const bool ii_holds = report.matched_group.has_value();
    if (i_holds && ii_holds) report.verdict = Theorem2Verdict::i_and_ii;
    else if (!i_holds && !ii_holds) report.verdict = Theorem2Verdict::neither;
    else report.verdict = Theorem2Verdict::falsifier;
    return report;
}

}  // namespace multiclone
