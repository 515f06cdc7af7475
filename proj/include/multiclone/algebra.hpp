#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace multiclone {

// Elements of the carrier set are 0..k-1; a subset of the carrier is a k-bit mask.
using Element = std::uint8_t;
using SubsetMask = std::uint8_t;

constexpr int kMinUniverse = 2;
constexpr int kMaxUniverse = 8;
constexpr int kHardArityCap = 6;
constexpr int kDefaultArityCap = 4;
constexpr std::size_t kDefaultMemberLimit = 1'000'000;

struct Universe {
    int size;

    explicit Universe(int k);
    SubsetMask full_mask() const { return static_cast<SubsetMask>((1u << size) - 1u); }
    bool operator==(const Universe&) const = default;
};

inline bool is_singleton(SubsetMask m) { return m != 0 && (m & (m - 1u)) == 0; }
inline int mask_size(SubsetMask m) { return std::popcount(m); }
inline Element single_element(SubsetMask m) { return static_cast<Element>(std::countr_zero(m)); }
inline SubsetMask singleton(Element a) { return static_cast<SubsetMask>(1u << a); }

// k^n, the table length of an n-ary multioperation.
std::size_t table_length(int k, int arity);

// Row-major tuple index with the first coordinate most significant.
std::size_t tuple_index(int k, std::span<const Element> tuple);
void index_to_tuple(int k, int arity, std::size_t index, std::span<Element> out);

enum class OpKind { operation, partial, hyper, multi };

const char* op_kind_name(OpKind kind);

// An n-ary multioperation A^n -> P(A) as a dense table of subset masks.
class MultiOp {
public:
    MultiOp(Universe u, int arity, std::vector<SubsetMask> table);

    Universe universe() const { return universe_; }
    int arity() const { return arity_; }
    const std::vector<SubsetMask>& table() const { return table_; }
    SubsetMask at(std::size_t index) const { return table_[index]; }

    SubsetMask eval(std::span<const Element> tuple) const;

    bool operator==(const MultiOp&) const = default;

private:
    Universe universe_;
    int arity_;
    std::vector<SubsetMask> table_;
};

struct MultiOpHash {
    std::size_t operator()(const MultiOp& f) const;
};

// Canonical order: arity, then table bytes lexicographically.
bool table_less(const MultiOp& lhs, const MultiOp& rhs);

MultiOp make_projection(Universe u, int arity, int coord);
MultiOp make_constant(Universe u, int arity, Element a);
MultiOp make_empty(Universe u, int arity);

// g(x_1,...,x_n) = f(x_{perm[0]},...,x_{perm[n-1]}) with 1-based entries in perm.
MultiOp isomer(const MultiOp& f, std::span<const int> perm);

// The identification minor: variable j is replaced by variable i (1 <= i < j <= n),
// variables above j shift down; result has arity n-1.
MultiOp identify(const MultiOp& f, int i, int j);

OpKind kind(const MultiOp& f);

}  // namespace multiclone
