#include "multiclone/closure.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace multiclone {

void GeneratorSet::add(MultiOp f) {
    if (!(f.universe() == universe))
        throw std::invalid_argument("generator universe does not match the set");
    gens.push_back(std::move(f));
}

bool CloneFragment::contains(const MultiOp& f) const {
    return std::any_of(members.begin(), members.end(), [&](const MultiOp& m) { return m == f; });
}

MultiOp compose(const MultiOp& f, std::span<const MultiOp> inner) {
    const int outer_arity = f.arity();
    if (static_cast<int>(inner.size()) != outer_arity)
        throw std::invalid_argument("compose: inner count does not match outer arity");
    const Universe u = f.universe();
    const int result_arity = inner[0].arity();
    for (const MultiOp& g : inner) {
        if (!(g.universe() == u)) throw std::invalid_argument("compose: universe mismatch");
        if (g.arity() != result_arity) throw std::invalid_argument("compose: inner arity mismatch");
    }
    const int k = u.size;
    const std::size_t len = table_length(k, result_arity);
    std::vector<SubsetMask> table(len, SubsetMask{0});
    std::vector<SubsetMask> masks(static_cast<std::size_t>(outer_arity));
    std::vector<Element> choice(static_cast<std::size_t>(outer_arity));
    for (std::size_t idx = 0; idx < len; ++idx) {
        bool empty = false;
        bool all_single = true;
        for (int t = 0; t < outer_arity; ++t) {
            SubsetMask m = inner[static_cast<std::size_t>(t)].at(idx);
            if (m == 0) { empty = true; break; }
            if (!is_singleton(m)) all_single = false;
            masks[static_cast<std::size_t>(t)] = m;
        }
        if (empty) continue;
        if (all_single) {
            std::size_t fidx = 0;
            for (int t = 0; t < outer_arity; ++t)
                fidx = fidx * static_cast<std::size_t>(k) + single_element(masks[static_cast<std::size_t>(t)]);
            table[idx] = f.at(fidx);
            continue;
        }
        // Union over all choice vectors through the inner value sets.
        for (int t = 0; t < outer_arity; ++t)
            choice[static_cast<std::size_t>(t)] = single_element(
                static_cast<SubsetMask>(masks[static_cast<std::size_t>(t)] & -masks[static_cast<std::size_t>(t)]));
        SubsetMask acc = 0;
        for (;;) {
            std::size_t fidx = 0;
            for (int t = 0; t < outer_arity; ++t)
                fidx = fidx * static_cast<std::size_t>(k) + choice[static_cast<std::size_t>(t)];
            acc |= f.at(fidx);
            int t = outer_arity - 1;
            for (; t >= 0; --t) {
                SubsetMask m = masks[static_cast<std::size_t>(t)];
                SubsetMask above = static_cast<SubsetMask>(
                    m & ~((2u << choice[static_cast<std::size_t>(t)]) - 1u));
                if (above != 0) {
                    choice[static_cast<std::size_t>(t)] =
                        single_element(static_cast<SubsetMask>(above & -above));
                    break;
                }
                choice[static_cast<std::size_t>(t)] = single_element(static_cast<SubsetMask>(m & -m));
            }
            if (t < 0) break;
        }
        table[idx] = acc;
    }
    return MultiOp(u, result_arity, std::move(table));
}

namespace {

std::string table_key(const MultiOp& f) {
    return std::string(reinterpret_cast<const char*>(f.table().data()), f.table().size());
}

}  // namespace

CloneFragment close_fixed_arity(const GeneratorSet& gens, int arity, std::size_t limit) {
    if (arity < 1 || arity > kHardArityCap)
        throw std::invalid_argument("close_fixed_arity: bad arity");
    if (limit < static_cast<std::size_t>(arity))
        throw std::invalid_argument("close_fixed_arity: limit must be at least the arity");
    CloneFragment frag{gens.universe, arity, {}, true};
    std::unordered_set<std::string> seen;
    for (int i = 1; i <= arity; ++i) {
        frag.members.push_back(make_projection(gens.universe, arity, i));
        seen.insert(table_key(frag.members.back()));
    }

    std::size_t prev_size = 0;
    bool truncated = false;
    while (!truncated) {
        const std::size_t cur_size = frag.members.size();
        if (cur_size == prev_size) break;  // no frontier: fixpoint
        for (const MultiOp& gen : gens.gens) {
            const int m = gen.arity();
            // Odometer over m-tuples of member indices, requiring at least one
            // index in the frontier [prev_size, cur_size).
            std::vector<std::size_t> tuple(static_cast<std::size_t>(m), 0);
            std::vector<const MultiOp*> args(static_cast<std::size_t>(m));
            for (;;) {
                bool has_new = false;
                for (std::size_t t = 0; t < tuple.size(); ++t) {
                    args[t] = &frag.members[tuple[t]];
                    if (tuple[t] >= prev_size) has_new = true;
                }
                if (has_new) {
                    std::vector<MultiOp> inner;
                    inner.reserve(args.size());
                    for (const MultiOp* p : args) inner.push_back(*p);
                    MultiOp candidate = compose(gen, inner);
                    if (seen.insert(table_key(candidate)).second) {
                        if (frag.members.size() + 1 > limit) {
                            truncated = true;
                            break;
                        }
                        frag.members.push_back(std::move(candidate));
                    }
                }
                int t = m - 1;
                for (; t >= 0; --t) {
                    if (++tuple[static_cast<std::size_t>(t)] < cur_size) break;
                    tuple[static_cast<std::size_t>(t)] = 0;
                }
                if (t < 0) break;
            }
            if (truncated) break;
        }
        prev_size = cur_size;
    }
    frag.saturated = !truncated;
    std::sort(frag.members.begin(), frag.members.end(), table_less);
    return frag;
}

bool fragment_equals_projections(const CloneFragment& frag) {
    if (!frag.saturated)
        throw UnsaturatedError("fragment_equals_projections: fragment is not saturated");
    return frag.members.size() == static_cast<std::size_t>(frag.arity);
}

MultiOp BooleanGroup::add_op() const {
    const int k = universe.size;
    std::vector<SubsetMask> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (Element a = 0; a < k; ++a)
        for (Element b = 0; b < k; ++b)
            table[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + b] = singleton(add(a, b));
    return MultiOp(universe, 2, std::move(table));
}

void BooleanGroup::validate() const {
    const int k = universe.size;
    if (zero >= k) throw std::invalid_argument("BooleanGroup: zero out of range");
    if (add_table.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k))
        throw std::invalid_argument("BooleanGroup: addition table has wrong size");
    for (Element v : add_table)
        if (v >= k) throw std::invalid_argument("BooleanGroup: table entry out of range");
    for (Element a = 0; a < k; ++a) {
        if (add(a, zero) != a) throw std::invalid_argument("BooleanGroup: zero is not neutral");
        if (add(a, a) != zero) throw std::invalid_argument("BooleanGroup: a+a=0 fails");
        for (Element b = 0; b < k; ++b) {
            if (add(a, b) != add(b, a)) throw std::invalid_argument("BooleanGroup: commutativity fails");
            for (Element c = 0; c < k; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    throw std::invalid_argument("BooleanGroup: associativity fails");
        }
    }
}

GeneratorSet fg_generators(const BooleanGroup& g) {
    GeneratorSet gens(g.universe);
    gens.add(g.add_op());
    for (Element a = 0; a < g.universe.size; ++a) gens.add(make_constant(g.universe, 1, a));
    return gens;
}

std::optional<FgForm> fg_membership(const BooleanGroup& g, const MultiOp& f) {
    if (!(f.universe() == g.universe))
        throw std::invalid_argument("fg_membership: universe mismatch");
    if (kind(f) != OpKind::operation)
        throw std::invalid_argument("fg_membership: f must be an operation");
    const int k = g.universe.size;
    const int n = f.arity();
    std::vector<Element> tuple(static_cast<std::size_t>(n), g.zero);
    const Element a = single_element(f.eval(tuple));
    std::uint32_t coords = 0;
    for (int i = 1; i <= n; ++i) {
        // i is in I iff the unary slice through coordinate i is not constantly a.
        for (Element x = 0; x < k; ++x) {
            tuple[static_cast<std::size_t>(i - 1)] = x;
            if (single_element(f.eval(tuple)) != a) {
                coords |= (1u << (i - 1));
                break;
            }
        }
        tuple[static_cast<std::size_t>(i - 1)] = g.zero;
    }
    // Verify the candidate form on every tuple.
    const std::size_t len = table_length(k, n);
    std::vector<Element> args(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < len; ++idx) {
        index_to_tuple(k, n, idx, args);
        Element expected = a;
        for (int i = 1; i <= n; ++i)
            if (coords & (1u << (i - 1))) expected = g.add(expected, args[static_cast<std::size_t>(i - 1)]);
        if (f.at(idx) != singleton(expected)) return std::nullopt;
    }
    return FgForm{a, coords};
}

}  // namespace multiclone
