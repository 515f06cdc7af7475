#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiclone/classifiers.hpp"
#include "multiclone/closure.hpp"

namespace multiclone {

// A witnessed failure of a claim the theory guarantees: either an implementation
// bug or a genuine counterexample. Never downgraded to a warning.
struct TheoremFalsified : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FiveType {
    t1_unary,
    t2_binary_idempotent,
    t3_majority,
    t4_semiprojection,
    t5_boolean_group,
    trivial,
    inconclusive,
};

const char* five_type_name(FiveType t);

struct ProvenanceStep {
    std::string note;
    std::optional<MultiOp> op;
};

struct TypeWitness {
    FiveType tag;
    std::optional<MultiOp> witness;
    std::optional<BooleanGroup> group;
    std::vector<ProvenanceStep> provenance;
    std::vector<CloneFragment> fragments;  // the per-arity fragments that were computed
};

struct ViolationScan {
    std::optional<int> arity;          // least arity with a non-projection member
    std::optional<MultiOp> witness;    // first such member in canonical order
    std::vector<CloneFragment> fragments;
    bool inconclusive = false;         // a projection-only fragment hit its limit
};

ViolationScan minimal_violation(const GeneratorSet& gens, int cap,
                                std::size_t limit = kDefaultMemberLimit);

// chi in {121, 222} -> the isomer h with chi = 211.
MultiOp claim1_to_pixley(const MultiOp& f);

// chi = 211 -> the majority m(x1,x2,x3) = h(x1, h(x1,x2,x3), x3).
MultiOp claim2_to_majority(const MultiOp& h);

// The three cancellation identities between two ternary minorities.
bool verify_claim3_identities(const MultiOp& f1, const MultiOp& f2);

// f(a,b,c) = {a} iff b = c, for a minority f.
bool verify_claim4(const MultiOp& f);

struct MinorityAnalysis {
    MultiOp minority;                               // the unique non-projection of frag3
    std::optional<MultiOp> quaternary_semiprojection;  // a non-projection semiprojection in frag4
};

// Requires both fragments saturated and every frag3 non-projection a minority.
// Asserts uniqueness, total symmetry and operation kind; failures are falsifiers.
MinorityAnalysis analyze_minority_clone(const CloneFragment& frag3, const CloneFragment& frag4);

// Builds <A; +, zero> with a+b = g(a,b,zero) from a totally symmetric minority
// operation g, validating the group axioms, g = x+y+z, the quaternary identity
// ((xyz)(x(yzt)t)t) = t, and that h(x1,x2,x3,x4) = ((x1x2x3)(x1(x2x3x4)x4)x4)
// is the fourth projection.
BooleanGroup extract_boolean_group(const MultiOp& g, Element zero);

TypeWitness classify_five_type(const GeneratorSet& gens, int cap = kDefaultArityCap,
                               std::size_t limit = kDefaultMemberLimit, Element zero = 0);

}  // namespace multiclone
