#include "multiclone/five_type.hpp"

#include <algorithm>
#include <array>

namespace multiclone {

const char* five_type_name(FiveType t) {
    switch (t) {
        case FiveType::t1_unary: return "T1_unary";
        case FiveType::t2_binary_idempotent: return "T2_binary_idempotent";
        case FiveType::t3_majority: return "T3_majority";
        case FiveType::t4_semiprojection: return "T4_semiprojection";
        case FiveType::t5_boolean_group: return "T5_boolean_group";
        case FiveType::trivial: return "trivial";
        case FiveType::inconclusive: return "inconclusive";
    }
    return "?";
}

ViolationScan minimal_violation(const GeneratorSet& gens, int cap, std::size_t limit) {
    if (cap < 1 || cap > kHardArityCap) throw std::invalid_argument("minimal_violation: bad cap");
    ViolationScan scan;
    bool minimality_uncertain = false;
    for (int n = 1; n <= cap; ++n) {
        CloneFragment frag = close_fixed_arity(gens, n, limit);
        const MultiOp* first_nonproj = nullptr;
        for (const MultiOp& m : frag.members)
            if (!is_projection(m)) {
                first_nonproj = &m;
                break;
            }
        if (first_nonproj != nullptr) {
            if (minimality_uncertain) {
                // An earlier projection-only fragment hit its limit; the least
                // violating arity cannot be certified.
                scan.inconclusive = true;
            } else {
                scan.arity = n;
                scan.witness = *first_nonproj;
            }
            scan.fragments.push_back(std::move(frag));
            return scan;
        }
        if (!frag.saturated) minimality_uncertain = true;
        scan.fragments.push_back(std::move(frag));
    }
    scan.inconclusive = minimality_uncertain;
    return scan;
}

MultiOp claim1_to_pixley(const MultiOp& f) {
    auto chi = chi_triple(f);
    if (!chi || (chi->code() != 121 && chi->code() != 222))
        throw std::invalid_argument("claim1_to_pixley: chi must be 121 or 222");
    const std::array<int, 3> perm =
        chi->code() == 121 ? std::array<int, 3>{1, 3, 2} : std::array<int, 3>{2, 1, 3};
    MultiOp h = isomer(f, perm);
    auto chi_h = chi_triple(h);
    if (!chi_h || chi_h->code() != 211)
        throw TheoremFalsified("claim1: constructed isomer does not have chi = 211");
    return h;
}

MultiOp claim2_to_majority(const MultiOp& h) {
    auto chi = chi_triple(h);
    if (!chi || chi->code() != 211)
        throw std::invalid_argument("claim2_to_majority: chi must be 211");
    const Universe u = h.universe();
    const std::array<MultiOp, 3> inner{make_projection(u, 3, 1), h, make_projection(u, 3, 3)};
    MultiOp m = compose(h, inner);
    if (!is_majority(m))
        throw TheoremFalsified("claim2: h(x1, h(x1,x2,x3), x3) is not a majority multioperation");
    return m;
}

bool verify_claim3_identities(const MultiOp& f1, const MultiOp& f2) {
    if (!(f1.universe() == f2.universe()))
        throw std::invalid_argument("verify_claim3_identities: universe mismatch");
    if (!is_minority(f1) || !is_minority(f2))
        throw std::invalid_argument("verify_claim3_identities: both inputs must be minorities");
    const Universe u = f1.universe();
    const MultiOp e1 = make_projection(u, 3, 1);
    const MultiOp e2 = make_projection(u, 3, 2);
    const MultiOp e3 = make_projection(u, 3, 3);
    return compose(f1, std::array<MultiOp, 3>{f2, e2, e3}) == e1 &&
           compose(f1, std::array<MultiOp, 3>{e1, f2, e3}) == e2 &&
           compose(f1, std::array<MultiOp, 3>{e1, e2, f2}) == e3;
}

bool verify_claim4(const MultiOp& f) {
    if (!is_minority(f)) throw std::invalid_argument("verify_claim4: not a minority");
    const int k = f.universe().size;
    for (Element a = 0; a < k; ++a)
        for (Element b = 0; b < k; ++b)
            for (Element c = 0; c < k; ++c) {
                const std::array<Element, 3> tuple{a, b, c};
                const bool returns_a = f.eval(tuple) == singleton(a);
                if (returns_a != (b == c)) return false;
            }
    return true;
}

MinorityAnalysis analyze_minority_clone(const CloneFragment& frag3, const CloneFragment& frag4) {
    if (!frag3.saturated || !frag4.saturated)
        throw UnsaturatedError("analyze_minority_clone: fragments must be saturated");
    std::vector<const MultiOp*> nonproj;
    for (const MultiOp& m : frag3.members)
        if (!is_projection(m)) nonproj.push_back(&m);
    for (const MultiOp* m : nonproj)
        if (!is_minority(*m))
            throw std::invalid_argument("analyze_minority_clone: a non-projection is not a minority");
    if (nonproj.size() != 1)
        throw TheoremFalsified("claim5: fragment contains " + std::to_string(nonproj.size()) +
                               " minority multioperations, expected exactly one");
    const MultiOp& m = *nonproj.front();
    if (!is_totally_symmetric(m))
        throw TheoremFalsified("claim5: the unique minority is not totally symmetric");
    if (kind(m) != OpKind::operation)
        throw TheoremFalsified("claim5a: the unique minority is not singleton-valued");
    MinorityAnalysis analysis{m, std::nullopt};
    for (const MultiOp& g : frag4.members)
        if (!is_projection(g) && is_semiprojection(g)) {
            analysis.quaternary_semiprojection = g;
            break;
        }
    return analysis;
}

namespace {

// Element-level evaluation of a singleton-valued ternary operation.
Element ev3(const MultiOp& g, Element x, Element y, Element z) {
    const std::size_t k = static_cast<std::size_t>(g.universe().size);
    return single_element(g.at((static_cast<std::size_t>(x) * k + y) * k + z));
}

[[noreturn]] void falsify(const std::string& what, std::initializer_list<Element> tuple) {
    std::string msg = what + " at (";
    bool first = true;
    for (Element a : tuple) {
        if (!first) msg += ",";
        msg += std::to_string(int(a));
        first = false;
    }
    throw TheoremFalsified(msg + ")");
}

}  // namespace

BooleanGroup extract_boolean_group(const MultiOp& g, Element zero) {
    if (kind(g) != OpKind::operation || !is_minority(g) || !is_totally_symmetric(g))
        throw std::invalid_argument(
            "extract_boolean_group: need a totally symmetric minority operation");
    const int k = g.universe().size;
    if (zero >= k) throw std::invalid_argument("extract_boolean_group: zero out of range");
    BooleanGroup group{g.universe(), zero, {}};
    group.add_table.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (Element a = 0; a < k; ++a)
        for (Element b = 0; b < k; ++b)
            group.add_table[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + b] =
                ev3(g, a, b, zero);

    for (Element a = 0; a < k; ++a) {
        if (group.add(a, zero) != a) falsify("claim6: zero not neutral", {a, zero});
        if (group.add(a, a) != zero) falsify("claim6: a+a=0 fails", {a, a});
        for (Element b = 0; b < k; ++b) {
            if (group.add(a, b) != group.add(b, a)) falsify("claim6: commutativity fails", {a, b});
            for (Element c = 0; c < k; ++c) {
                if (group.add(group.add(a, b), c) != group.add(a, group.add(b, c)))
                    falsify("claim6: associativity fails", {a, b, c});
                if (ev3(g, a, b, c) != group.add(group.add(a, b), c))
                    falsify("claim6: g(x,y,z) != x+y+z", {a, b, c});
            }
        }
    }
    // The quaternary identity ((xyz)(x(yzt)t)t) = t.
    for (Element x = 0; x < k; ++x)
        for (Element y = 0; y < k; ++y)
            for (Element z = 0; z < k; ++z)
                for (Element t = 0; t < k; ++t)
                    if (ev3(g, ev3(g, x, y, z), ev3(g, x, ev3(g, y, z, t), t), t) != t)
                        falsify("claim6: quaternary identity fails", {x, y, z, t});
    // The quaternary term h must be the fourth projection.
    const Universe u = g.universe();
    const MultiOp e41 = make_projection(u, 4, 1);
    const MultiOp e42 = make_projection(u, 4, 2);
    const MultiOp e43 = make_projection(u, 4, 3);
    const MultiOp e44 = make_projection(u, 4, 4);
    const MultiOp lhs = compose(g, std::array<MultiOp, 3>{e41, e42, e43});
    const MultiOp mid = compose(g, std::array<MultiOp, 3>{e42, e43, e44});
    const MultiOp rhs = compose(g, std::array<MultiOp, 3>{e41, mid, e44});
    const MultiOp h = compose(g, std::array<MultiOp, 3>{lhs, rhs, e44});
    if (!(h == e44))
        throw TheoremFalsified("claim6: quaternary term is not the fourth projection");
    return group;
}

namespace {

void note(TypeWitness& w, std::string text, std::optional<MultiOp> op = std::nullopt) {
    w.provenance.push_back(ProvenanceStep{std::move(text), std::move(op)});
}

void assert_member(const CloneFragment& frag, const MultiOp& f, const char* what) {
    if (!frag.contains(f))
        throw TheoremFalsified(std::string(what) + ": constructed witness is not a member of the fragment");
}

}  // namespace

TypeWitness classify_five_type(const GeneratorSet& gens, int cap, std::size_t limit, Element zero) {
    if (cap < 4) throw std::invalid_argument("classify_five_type: cap must be at least 4");
    TypeWitness result{FiveType::inconclusive, std::nullopt, std::nullopt, {}, {}};
    ViolationScan scan = minimal_violation(gens, cap, limit);
    result.fragments = scan.fragments;
    if (scan.inconclusive) {
        note(result, "a projection-only fragment hit the member limit; minimal arity unknown");
        return result;
    }
    if (!scan.arity) {
        result.tag = FiveType::trivial;
        note(result, "all fragments up to the cap equal the projections");
        return result;
    }
    const int n = *scan.arity;
    note(result, "least arity with a non-projection member: n = " + std::to_string(n));

    if (n == 1) {
        result.tag = FiveType::t1_unary;
        result.witness = scan.witness;
        note(result, "type 1: unary non-projection", scan.witness);
        return result;
    }
    if (n == 2) {
        if (!is_idempotent(*scan.witness))
            throw TheoremFalsified(
                "binary witness is not idempotent although C(1) contains only the identity");
        result.tag = FiveType::t2_binary_idempotent;
        result.witness = scan.witness;
        note(result, "type 2: binary idempotent non-projection", scan.witness);
        return result;
    }
    if (n >= 4) {
        SwierczkowskiResult sw = swierczkowski_check(*scan.witness);
        if (!sw.coordinate) {
            std::string msg = "swierczkowski: counterexample tuple (";
            for (std::size_t t = 0; t < sw.counterexample.size(); ++t)
                msg += (t ? "," : "") + std::to_string(int(sw.counterexample[t]));
            throw TheoremFalsified(msg + ")");
        }
        result.tag = FiveType::t4_semiprojection;
        result.witness = scan.witness;
        note(result,
             "type 4: semiprojection on coordinate " + std::to_string(*sw.coordinate) +
                 " (arity >= 4, all minors projections)",
             scan.witness);
        return result;
    }

    // n = 3. Direct witnesses first; these are valid even if the fragment is partial.
    const CloneFragment& frag3 = result.fragments[2];
    for (const MultiOp& f : frag3.members) {
        if (is_projection(f)) continue;
        if (is_semiprojection(f)) {
            result.tag = FiveType::t4_semiprojection;
            result.witness = f;
            note(result, "type 4: ternary semiprojection found in the fragment", f);
            return result;
        }
    }
    for (const MultiOp& f : frag3.members) {
        if (is_projection(f)) continue;
        if (is_majority(f)) {
            result.tag = FiveType::t3_majority;
            result.witness = f;
            note(result, "type 3: majority multioperation found in the fragment", f);
            return result;
        }
    }
    if (!frag3.saturated) {
        note(result, "arity-3 fragment hit the member limit; the case analysis needs saturation");
        return result;
    }

    // The chi-derived cases, applied to the first non-minority non-projection.
    for (const MultiOp& f : frag3.members) {
        if (is_projection(f)) continue;
        auto chi = chi_triple(f);
        if (!chi)
            throw TheoremFalsified(
                "a minor of a minimal-arity member is not a projection although C(2) = Q(2)");
        switch (classify_chi(*chi)) {
            case TernaryCase::semiprojection:
            case TernaryCase::majority:
            case TernaryCase::minority:
                continue;  // handled above / below
            case TernaryCase::case121:
            case TernaryCase::case222: {
                note(result, "chi(f) = " + std::to_string(chi->code()), f);
                MultiOp h = claim1_to_pixley(f);
                assert_member(frag3, h, "claim1");
                note(result, "claim1: isomer h with chi = 211", h);
                MultiOp m = claim2_to_majority(h);
                assert_member(frag3, m, "claim2");
                note(result, "claim2: majority m = h(x1, h(x1,x2,x3), x3)", m);
                result.tag = FiveType::t3_majority;
                result.witness = m;
                return result;
            }
            case TernaryCase::pixley: {
                note(result, "chi(f) = 211 (Pixley)", f);
                MultiOp m = claim2_to_majority(f);
                assert_member(frag3, m, "claim2");
                note(result, "claim2: majority m = f(x1, f(x1,x2,x3), x3)", m);
                result.tag = FiveType::t3_majority;
                result.witness = m;
                return result;
            }
        }
    }

    // Every non-projection is a minority. The scan stopped at arity 3, so the
    // arity-4 fragment is computed here.
    result.fragments.push_back(close_fixed_arity(gens, 4, limit));
    const CloneFragment& frag4 = result.fragments.back();
    if (!frag4.saturated) {
        note(result, "arity-4 fragment hit the member limit; the minority case needs saturation");
        return result;
    }
    MinorityAnalysis analysis = analyze_minority_clone(frag3, frag4);
    note(result, "claim5: unique totally symmetric minority operation", analysis.minority);
    if (analysis.quaternary_semiprojection) {
        result.tag = FiveType::t4_semiprojection;
        result.witness = analysis.quaternary_semiprojection;
        note(result, "type 4: quaternary semiprojection found in the fragment",
             analysis.quaternary_semiprojection);
        return result;
    }
    BooleanGroup group = extract_boolean_group(analysis.minority, zero);
    result.tag = FiveType::t5_boolean_group;
    result.witness = analysis.minority;
    result.group = group;
    note(result, "claim6: Boolean group extracted with zero = " + std::to_string(int(zero)));
    return result;
}

}  // namespace multiclone
