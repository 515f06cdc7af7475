#include "multiclone/classifiers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "multiclone/algebra.hpp"

namespace multiclone {

const char* ternary_case_name(TernaryCase c) {
    switch (c) {
        case TernaryCase::semiprojection: return "semiprojection";
        case TernaryCase::majority: return "majority";
        case TernaryCase::minority: return "minority";
        case TernaryCase::pixley: return "pixley";
        case TernaryCase::case121: return "case121";
        case TernaryCase::case222: return "case222";
    }
    return "?";
}

std::optional<int> is_projection(const MultiOp& f) {
    const int k = f.universe().size;
    const int n = f.arity();
    std::vector<Element> tuple(static_cast<std::size_t>(n));
    std::uint32_t candidates = (1u << n) - 1u;
    for (std::size_t idx = 0; idx < f.table().size() && candidates != 0; ++idx) {
        index_to_tuple(k, n, idx, tuple);
        for (int i = 0; i < n; ++i)
            if ((candidates & (1u << i)) && f.at(idx) != singleton(tuple[static_cast<std::size_t>(i)]))
                candidates &= ~(1u << i);
    }
    if (candidates == 0) return std::nullopt;
    return std::countr_zero(candidates) + 1;
}

bool is_idempotent(const MultiOp& f) {
    const int k = f.universe().size;
    std::vector<Element> tuple(static_cast<std::size_t>(f.arity()));
    for (Element a = 0; a < k; ++a) {
        std::fill(tuple.begin(), tuple.end(), a);
        if (f.eval(tuple) != singleton(a)) return false;
    }
    return true;
}

namespace {

void require_ternary(const MultiOp& f, const char* what) {
    if (f.arity() != 3) throw std::invalid_argument(std::string(what) + ": arity must be 3");
}

SubsetMask eval3(const MultiOp& f, Element x, Element y, Element z) {
    const std::size_t k = static_cast<std::size_t>(f.universe().size);
    return f.at((static_cast<std::size_t>(x) * k + y) * k + z);
}

}  // namespace

bool is_majority(const MultiOp& f) {
    require_ternary(f, "is_majority");
    const int k = f.universe().size;
    for (Element x = 0; x < k; ++x)
        for (Element y = 0; y < k; ++y) {
            const SubsetMask sx = singleton(x);
            if (eval3(f, x, x, y) != sx || eval3(f, x, y, x) != sx || eval3(f, y, x, x) != sx)
                return false;
        }
    return true;
}

bool is_minority(const MultiOp& f) {
    require_ternary(f, "is_minority");
    const int k = f.universe().size;
    for (Element x = 0; x < k; ++x)
        for (Element y = 0; y < k; ++y) {
            const SubsetMask sy = singleton(y);
            if (eval3(f, x, x, y) != sy || eval3(f, x, y, x) != sy ||
                eval3(f, y, x, x) != sy)
                return false;
        }
    return true;
}

bool is_maltsev(const MultiOp& f) {
    require_ternary(f, "is_maltsev");
    const int k = f.universe().size;
    for (Element x = 0; x < k; ++x)
        for (Element y = 0; y < k; ++y) {
            const SubsetMask sy = singleton(y);
            if (eval3(f, x, x, y) != sy || eval3(f, y, x, x) != sy) return false;
        }
    return true;
}

bool is_pixley(const MultiOp& f) {
    require_ternary(f, "is_pixley");
    if (!is_maltsev(f)) return false;
    const int k = f.universe().size;
    for (Element x = 0; x < k; ++x)
        for (Element y = 0; y < k; ++y)
            if (eval3(f, x, y, x) != singleton(x)) return false;
    return true;
}

std::optional<int> is_semiprojection(const MultiOp& f) {
    const int n = f.arity();
    if (n < 3) throw std::invalid_argument("is_semiprojection: arity must be at least 3");
    const int k = f.universe().size;
    std::vector<Element> tuple(static_cast<std::size_t>(n));
    std::uint32_t candidates = (1u << n) - 1u;
    for (std::size_t idx = 0; idx < f.table().size() && candidates != 0; ++idx) {
        index_to_tuple(k, n, idx, tuple);
        bool repeated = false;
        for (int s = 0; s < n && !repeated; ++s)
            for (int t = s + 1; t < n; ++t)
                if (tuple[static_cast<std::size_t>(s)] == tuple[static_cast<std::size_t>(t)]) {
                    repeated = true;
                    break;
                }
        if (!repeated) continue;
        for (int i = 0; i < n; ++i)
            if ((candidates & (1u << i)) && f.at(idx) != singleton(tuple[static_cast<std::size_t>(i)]))
                candidates &= ~(1u << i);
    }
    if (candidates == 0) return std::nullopt;
    if ((candidates & (candidates - 1u)) != 0)
        throw std::logic_error("is_semiprojection: coordinate tie, impossible for n >= 3, k >= 2");
    return std::countr_zero(candidates) + 1;
}

std::optional<ChiTriple> chi_triple(const MultiOp& f) {
    require_ternary(f, "chi_triple");
    auto a = is_projection(identify(f, 1, 2));  // f(x1, x1, x2)
    auto b = is_projection(identify(f, 1, 3));  // f(x1, x2, x1)
    auto c = is_projection(identify(f, 2, 3));  // f(x1, x2, x2)
    if (!a || !b || !c) return std::nullopt;
    return ChiTriple{*a, *b, *c};
}

TernaryCase classify_chi(ChiTriple t) {
    switch (t.code()) {
        case 111:
        case 122:
        case 212: return TernaryCase::semiprojection;
        case 112: return TernaryCase::majority;
        case 221: return TernaryCase::minority;
        case 211: return TernaryCase::pixley;
        case 121: return TernaryCase::case121;
        case 222: return TernaryCase::case222;
    }
    throw std::invalid_argument("classify_chi: entries must be 1 or 2");
}

SwierczkowskiResult swierczkowski_check(const MultiOp& f) {
    const int n = f.arity();
    if (n < 4) throw std::invalid_argument("swierczkowski_check: arity must be at least 4");
    const int k = f.universe().size;
    std::vector<Element> tuple(static_cast<std::size_t>(n));
    std::uint32_t candidates = (1u << n) - 1u;
    for (std::size_t idx = 0; idx < f.table().size(); ++idx) {
        index_to_tuple(k, n, idx, tuple);
        bool repeated = false;
        for (int s = 0; s < n && !repeated; ++s)
            for (int t = s + 1; t < n; ++t)
                if (tuple[static_cast<std::size_t>(s)] == tuple[static_cast<std::size_t>(t)]) {
                    repeated = true;
                    break;
                }
        if (!repeated) continue;
        for (int i = 0; i < n; ++i)
            if ((candidates & (1u << i)) && f.at(idx) != singleton(tuple[static_cast<std::size_t>(i)]))
                candidates &= ~(1u << i);
        if (candidates == 0) return SwierczkowskiResult{std::nullopt, tuple};
    }
    // The semiprojection scan passed; a violating input never reaches this
    // precondition, so a failure here is a genuine usage error.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!is_projection(identify(f, i, j)))
                throw std::invalid_argument(
                    "swierczkowski_check: an identification minor is not a projection");
    return SwierczkowskiResult{std::countr_zero(candidates) + 1, {}};
}

bool is_totally_symmetric(const MultiOp& f) {
    const int n = f.arity();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    while (std::next_permutation(perm.begin(), perm.end()))
        if (!(isomer(f, perm) == f)) return false;
    return true;
}

}  // namespace multiclone
