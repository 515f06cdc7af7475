#pragma once

#include <optional>
#include <vector>

#include "multiclone/algebra.hpp"

namespace multiclone {

// Which projections the three ternary identification minors equal:
// f(x,x,y) = x_a, f(x,y,x) = x_b, f(x,y,y) = x_c, each of a,b,c in {1,2}.
struct ChiTriple {
    int a, b, c;

    int code() const { return a * 100 + b * 10 + c; }
    bool operator==(const ChiTriple&) const = default;
};

enum class TernaryCase { semiprojection, majority, minority, pixley, case121, case222 };

const char* ternary_case_name(TernaryCase c);

std::optional<int> is_projection(const MultiOp& f);
bool is_idempotent(const MultiOp& f);

bool is_majority(const MultiOp& f);
bool is_minority(const MultiOp& f);
bool is_maltsev(const MultiOp& f);
bool is_pixley(const MultiOp& f);

// The least coordinate i such that every tuple with a repeated entry maps to {a_i};
// ties cannot occur for n >= 3, k >= 2 (asserted).
std::optional<int> is_semiprojection(const MultiOp& f);

// Absent when some identification minor is not a projection.
std::optional<ChiTriple> chi_triple(const MultiOp& f);

TernaryCase classify_chi(ChiTriple t);

struct SwierczkowskiResult {
    std::optional<int> coordinate;             // the semiprojection coordinate
    std::vector<Element> counterexample;       // nonempty iff no coordinate works
};

// For arity >= 4 with all identification minors projections (checked): either the
// semiprojection coordinate, or a repeated-entry tuple witnessing failure.
SwierczkowskiResult swierczkowski_check(const MultiOp& f);

bool is_totally_symmetric(const MultiOp& f);

}  // namespace multiclone
