#include "multiclone/algebra.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace multiclone {

Universe::Universe(int k) : size(k) {
    if (k < kMinUniverse || k > kMaxUniverse)
        throw std::invalid_argument("universe size must be in [2, 8], got " + std::to_string(k));
}

std::size_t table_length(int k, int arity) {
    std::size_t len = 1;
    for (int t = 0; t < arity; ++t) len *= static_cast<std::size_t>(k);
    return len;
}

std::size_t tuple_index(int k, std::span<const Element> tuple) {
    std::size_t index = 0;
    for (Element a : tuple) index = index * static_cast<std::size_t>(k) + a;
    return index;
}

void index_to_tuple(int k, int arity, std::size_t index, std::span<Element> out) {
    for (int t = arity - 1; t >= 0; --t) {
        out[static_cast<std::size_t>(t)] = static_cast<Element>(index % static_cast<std::size_t>(k));
        index /= static_cast<std::size_t>(k);
    }
}

const char* op_kind_name(OpKind kind) {
    switch (kind) {
        case OpKind::operation: return "operation";
        case OpKind::partial: return "partial";
        case OpKind::hyper: return "hyper";
        case OpKind::multi: return "multi";
    }
    return "?";
}

MultiOp::MultiOp(Universe u, int arity, std::vector<SubsetMask> table)
    : universe_(u), arity_(arity), table_(std::move(table)) {
    if (arity_ < 1 || arity_ > kHardArityCap)
        throw std::invalid_argument("arity must be in [1, 6], got " + std::to_string(arity_));
    if (table_.size() != table_length(u.size, arity_))
        throw std::invalid_argument("table length " + std::to_string(table_.size()) +
                                    " does not match k^n = " +
                                    std::to_string(table_length(u.size, arity_)));
    const SubsetMask full = u.full_mask();
    for (SubsetMask m : table_)
        if ((m & ~full) != 0)
            throw std::invalid_argument("table entry has a bit outside the universe");
}

SubsetMask MultiOp::eval(std::span<const Element> tuple) const {
    if (static_cast<int>(tuple.size()) != arity_)
        throw std::invalid_argument("eval: tuple length does not match arity");
    for (Element a : tuple)
        if (a >= universe_.size) throw std::invalid_argument("eval: element out of range");
    return table_[tuple_index(universe_.size, tuple)];
}

std::size_t MultiOpHash::operator()(const MultiOp& f) const {
    // FNV-1a over arity and table bytes.
    std::size_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint8_t byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint8_t>(f.arity()));
    for (SubsetMask m : f.table()) mix(m);
    return h;
}

bool table_less(const MultiOp& lhs, const MultiOp& rhs) {
    if (lhs.arity() != rhs.arity()) return lhs.arity() < rhs.arity();
    return lhs.table() < rhs.table();
}

MultiOp make_projection(Universe u, int arity, int coord) {
    if (arity < 1 || arity > kHardArityCap) throw std::invalid_argument("make_projection: bad arity");
    if (coord < 1 || coord > arity) throw std::invalid_argument("make_projection: coordinate out of range");
    const int k = u.size;
    std::vector<SubsetMask> table(table_length(k, arity));
    std::vector<Element> tuple(static_cast<std::size_t>(arity));
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        index_to_tuple(k, arity, idx, tuple);
        table[idx] = singleton(tuple[static_cast<std::size_t>(coord - 1)]);
    }
    return MultiOp(u, arity, std::move(table));
}

MultiOp make_constant(Universe u, int arity, Element a) {
    if (a >= u.size) throw std::invalid_argument("make_constant: element out of range");
    std::vector<SubsetMask> table(table_length(u.size, arity), singleton(a));
    return MultiOp(u, arity, std::move(table));
}

MultiOp make_empty(Universe u, int arity) {
    std::vector<SubsetMask> table(table_length(u.size, arity), SubsetMask{0});
    return MultiOp(u, arity, std::move(table));
}

MultiOp isomer(const MultiOp& f, std::span<const int> perm) {
    const int n = f.arity();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("isomer: permutation length does not match arity");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)])
            throw std::invalid_argument("isomer: not a permutation of {1,...,n}");
        seen[static_cast<std::size_t>(p - 1)] = true;
    }
    const int k = f.universe().size;
    std::vector<SubsetMask> table(f.table().size());
    std::vector<Element> tuple(static_cast<std::size_t>(n)), permuted(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        index_to_tuple(k, n, idx, tuple);
        for (int t = 0; t < n; ++t)
            permuted[static_cast<std::size_t>(t)] = tuple[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)] - 1)];
        table[idx] = f.at(tuple_index(k, permuted));
    }
    return MultiOp(f.universe(), n, std::move(table));
}

MultiOp identify(const MultiOp& f, int i, int j) {
    const int n = f.arity();
    if (n < 2) throw std::invalid_argument("identify: arity must be at least 2");
    if (i < 1 || i >= j || j > n) throw std::invalid_argument("identify: need 1 <= i < j <= n");
    const int k = f.universe().size;
    const int m = n - 1;
    std::vector<SubsetMask> table(table_length(k, m));
    std::vector<Element> tuple(static_cast<std::size_t>(m)), arg(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        index_to_tuple(k, m, idx, tuple);
        for (int t = 1; t <= n; ++t) {
            Element v;
            if (t < j) v = tuple[static_cast<std::size_t>(t - 1)];
            else if (t == j) v = tuple[static_cast<std::size_t>(i - 1)];
            else v = tuple[static_cast<std::size_t>(t - 2)];
            arg[static_cast<std::size_t>(t - 1)] = v;
        }
        table[idx] = f.at(tuple_index(k, arg));
    }
    return MultiOp(f.universe(), m, std::move(table));
}

OpKind kind(const MultiOp& f) {
    bool has_empty = false, has_large = false;
    for (SubsetMask m : f.table()) {
        if (m == 0) has_empty = true;
        else if (!is_singleton(m)) has_large = true;
    }
    if (!has_empty && !has_large) return OpKind::operation;
    if (has_empty && !has_large) return OpKind::partial;
    if (!has_empty) return OpKind::hyper;
    return OpKind::multi;
}

}  // namespace multiclone
