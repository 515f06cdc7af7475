#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "multiclone/algebra.hpp"

namespace multiclone {

// Raised where a computation needs a saturated fragment but the closure hit its limit.
struct UnsaturatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneratorSet {
    Universe universe;
    std::vector<MultiOp> gens;

    explicit GeneratorSet(Universe u) : universe(u) {}
    void add(MultiOp f);
};

// The arity-n slice of a generated multiclone.
struct CloneFragment {
    Universe universe;
    int arity;
    std::vector<MultiOp> members;  // canonical (table-lexicographic) order, duplicate-free
    bool saturated;

    bool contains(const MultiOp& f) const;
};

// pi_ij composition with union semantics: the entry at tuple a is the union of
// f(u_1,...,u_i) over all choices u_t in inner[t](a); empty if any inner value is empty.
MultiOp compose(const MultiOp& f, std::span<const MultiOp> inner);

// Worklist fixpoint of the projections under generator-outer composition.
// A hit limit is not an error; it is reported via the saturated flag.
CloneFragment close_fixed_arity(const GeneratorSet& gens, int arity,
                                std::size_t limit = kDefaultMemberLimit);

// True iff the saturated fragment is exactly the n projections.
bool fragment_equals_projections(const CloneFragment& frag);

// A 2-elementary group <A; +, 0>.
struct BooleanGroup {
    Universe universe;
    Element zero;
    std::vector<Element> add_table;  // k*k entries, row-major

    Element add(Element a, Element b) const {
        return add_table[static_cast<std::size_t>(a) * static_cast<std::size_t>(universe.size) + b];
    }
    MultiOp add_op() const;
    void validate() const;  // throws std::invalid_argument naming the failed axiom
    bool operator==(const BooleanGroup&) const = default;
};

// Generators of F_G: the binary group addition plus all unary constants.
GeneratorSet fg_generators(const BooleanGroup& g);

struct FgForm {
    Element constant;        // a
    std::uint32_t coords;    // bit (i-1) set iff i is in I
};

// Decides whether f(x_1,...,x_n) = a + sum_{i in I} x_i on all tuples.
std::optional<FgForm> fg_membership(const BooleanGroup& g, const MultiOp& f);

}  // namespace multiclone
