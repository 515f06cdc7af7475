#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "multiclone/closure.hpp"

namespace multiclone {

// Certified hypotheses of the projection-test lemma: the clone contains all
// constants and its only binary idempotent members are the two projections.
struct Theorem2Hypotheses {
    bool all_constants = false;
    bool binary_idempotents_are_projections = false;

    bool certified() const { return all_constants && binary_idempotents_are_projections; }
};

Theorem2Hypotheses certify_hypotheses(const CloneFragment& frag1, const CloneFragment& frag2);

// True iff some isomer f of g satisfies f(y, y, x_3, ..., x_n) = {y} on all tuples;
// under the certified hypotheses this is equivalent to g being a projection.
bool eq8_projection_test(const Theorem2Hypotheses& ctx, const MultiOp& g);

enum class Theorem2Verdict { i_and_ii, neither, falsifier, inconclusive };
enum class ConditionStatus { holds, fails, not_witnessed };

const char* theorem2_verdict_name(Theorem2Verdict v);
const char* condition_status_name(ConditionStatus s);

struct ProjectionPropertyReport {
    bool has_all_constants = false;
    bool binary_idempotents_are_projections = false;
    std::optional<std::pair<int, MultiOp>> idempotent_nonprojection;  // (arity, witness)
    ConditionStatus condition_i = ConditionStatus::fails;
    std::optional<BooleanGroup> matched_group;
    Theorem2Verdict verdict = Theorem2Verdict::inconclusive;
};

// Condition (i) of the equivalence; the witness search is truncated at the cap,
// which is reported as not_witnessed rather than fails.
ProjectionPropertyReport check_condition_i(const GeneratorSet& gens, int cap,
                                           std::size_t limit = kDefaultMemberLimit);

// All Boolean group tables on {0,...,k-1}; empty unless k is a power of two.
std::vector<BooleanGroup> enumerate_boolean_groups(Universe u);

// The first enumerated G whose F_G slices match the closure fragments at every
// arity up to the cap.
std::optional<BooleanGroup> check_condition_ii(const GeneratorSet& gens, int cap,
                                               std::size_t limit = kDefaultMemberLimit);

ProjectionPropertyReport theorem2_equivalence(const GeneratorSet& gens, int cap = kDefaultArityCap,
                                              std::size_t limit = kDefaultMemberLimit);

}  // namespace multiclone
