#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "multiclone/classifiers.hpp"
#include "multiclone/five_type.hpp"
#include "multiclone/opfile.hpp"
#include "multiclone/projection.hpp"

using json = nlohmann::ordered_json;
using namespace multiclone;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitFalsifier = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

json group_json(const BooleanGroup& g) {
    json rows = json::array();
    for (Element a = 0; a < g.universe.size; ++a) {
        json row = json::array();
        for (Element b = 0; b < g.universe.size; ++b) row.push_back(int(g.add(a, b)));
        rows.push_back(row);
    }
    return json{{"zero", int(g.zero)}, {"table", rows}};
}

json fragments_json(const std::vector<CloneFragment>& fragments) {
    json out = json::array();
    for (const CloneFragment& frag : fragments)
        out.push_back(json{{"arity", frag.arity},
                           {"size", frag.members.size()},
                           {"saturated", frag.saturated}});
    return out;
}

int run_classify(const std::string& path, int cap, std::size_t limit, int zero,
                 const std::string& out_path) {
    const OpFile file = parse_opfile(slurp(path));
    const TypeWitness result =
        classify_five_type(to_generators(file), cap, limit, static_cast<Element>(zero));
    json report;
    report["command"] = "classify";
    report["universe"] = file.universe.size;
    report["cap"] = cap;
    report["limit"] = limit;
    report["zero"] = zero;
    report["type"] = five_type_name(result.tag);
    report["witness"] =
        result.witness ? json{{"opfile", emit_single_op("witness", *result.witness)}} : json(nullptr);
    report["group"] = result.group ? group_json(*result.group) : json(nullptr);
    json steps = json::array();
    for (const ProvenanceStep& step : result.provenance) {
        json s{{"note", step.note}};
        s["opfile"] = step.op ? json(emit_single_op("step", *step.op)) : json(nullptr);
        steps.push_back(s);
    }
    report["provenance"] = steps;
    report["fragments"] = fragments_json(result.fragments);
    write_output(out_path, report.dump(2) + "\n");
    return result.tag == FiveType::inconclusive ? kExitInconclusive : kExitOk;
}

int run_close(const std::string& path, int arity, std::size_t limit, const std::string& out_path) {
    const OpFile file = parse_opfile(slurp(path));
    const CloneFragment frag = close_fixed_arity(to_generators(file), arity, limit);
    OpFile out{frag.universe, {}};
    for (std::size_t i = 0; i < frag.members.size(); ++i)
        out.ops.push_back(NamedOp{"m" + std::to_string(i), frag.members[i]});
    write_output(out_path, emit_opfile(out));
    if (!frag.saturated) {
        std::cerr << "unsaturated: member limit " << limit << " hit at arity " << arity << "\n";
        return kExitInconclusive;
    }
    return kExitOk;
}

int run_props(const std::string& path, const std::string& out_path) {
    const OpFile file = parse_opfile(slurp(path));
    json report;
    report["command"] = "props";
    report["universe"] = file.universe.size;
    json ops = json::array();
    for (const NamedOp& named : file.ops) {
        const MultiOp& f = named.op;
        json entry;
        entry["name"] = named.name;
        entry["arity"] = f.arity();
        entry["kind"] = op_kind_name(kind(f));
        auto proj = is_projection(f);
        entry["projection"] = proj ? json(*proj) : json(nullptr);
        entry["idempotent"] = is_idempotent(f);
        if (f.arity() == 3) {
            entry["majority"] = is_majority(f);
            entry["minority"] = is_minority(f);
            entry["maltsev"] = is_maltsev(f);
            entry["pixley"] = is_pixley(f);
            auto chi = chi_triple(f);
            entry["chi"] = chi ? json(chi->code()) : json(nullptr);
        } else {
            entry["majority"] = nullptr;
            entry["minority"] = nullptr;
            entry["maltsev"] = nullptr;
            entry["pixley"] = nullptr;
            entry["chi"] = nullptr;
        }
        if (f.arity() >= 3) {
            auto semi = is_semiprojection(f);
            entry["semiprojection"] = semi ? json(*semi) : json(nullptr);
        } else {
            entry["semiprojection"] = nullptr;
        }
        entry["totally_symmetric"] = is_totally_symmetric(f);
        ops.push_back(entry);
    }
    report["operations"] = ops;
    write_output(out_path, report.dump(2) + "\n");
    return kExitOk;
}

int run_theorem2(const std::string& path, int cap, std::size_t limit, const std::string& out_path) {
    const OpFile file = parse_opfile(slurp(path));
    const ProjectionPropertyReport result = theorem2_equivalence(to_generators(file), cap, limit);
    json report;
    report["command"] = "theorem2";
    report["universe"] = file.universe.size;
    report["cap"] = cap;
    report["limit"] = limit;
    report["verdict"] = theorem2_verdict_name(result.verdict);
    report["condition_i"] = condition_status_name(result.condition_i);
    report["has_all_constants"] = result.has_all_constants;
    report["binary_idempotents_are_projections"] = result.binary_idempotents_are_projections;
    report["idempotent_nonprojection"] =
        result.idempotent_nonprojection
            ? json{{"arity", result.idempotent_nonprojection->first},
                   {"opfile", emit_single_op("witness", result.idempotent_nonprojection->second)}}
            : json(nullptr);
    report["group"] = result.matched_group ? group_json(*result.matched_group) : json(nullptr);
    write_output(out_path, report.dump(2) + "\n");
    switch (result.verdict) {
        case Theorem2Verdict::inconclusive: return kExitInconclusive;
        case Theorem2Verdict::falsifier: return kExitFalsifier;
        default: return kExitOk;
    }
}

int run_fg(int k, int index, const std::string& out_path) {
    const auto groups = enumerate_boolean_groups(Universe(k));
    if (groups.empty())
        throw std::runtime_error("no Boolean group exists on a universe of size " + std::to_string(k));
    if (index < 0 || static_cast<std::size_t>(index) >= groups.size())
        throw std::runtime_error("group index out of range; universe " + std::to_string(k) + " has " +
                                 std::to_string(groups.size()) + " Boolean groups");
    const GeneratorSet gens = fg_generators(groups[static_cast<std::size_t>(index)]);
    OpFile out{gens.universe, {}};
    out.ops.push_back(NamedOp{"add", gens.gens[0]});
    for (int a = 0; a < k; ++a)
        out.ops.push_back(NamedOp{"c" + std::to_string(a), gens.gens[static_cast<std::size_t>(a + 1)]});
    write_output(out_path, emit_opfile(out));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multioperation clone toolkit"};
    app.require_subcommand(1);

    std::string input, out_path;
    int cap = kDefaultArityCap;
    std::size_t limit = kDefaultMemberLimit;
    int zero = 0;
    int arity = 0;
    int k = 2;
    int index = 0;

    auto* classify = app.add_subcommand("classify", "five-type classification of a generated multiclone");
    classify->add_option("file", input)->required();
    classify->add_option("--cap", cap, "arity cap");
    classify->add_option("--limit", limit, "fragment member limit");
    classify->add_option("--zero", zero, "neutral element for Boolean-group extraction");
    classify->add_option("--out", out_path, "write the report here instead of stdout");

    auto* close = app.add_subcommand("close", "fixed-arity closure of a generator set");
    close->add_option("file", input)->required();
    close->add_option("--arity", arity, "fragment arity")->required();
    close->add_option("--limit", limit, "fragment member limit");
    close->add_option("--out", out_path, "write the fragment here instead of stdout");

    auto* props = app.add_subcommand("props", "per-operation predicate report");
    props->add_option("file", input)->required();
    props->add_option("--out", out_path, "write the report here instead of stdout");

    auto* theorem2 = app.add_subcommand("theorem2", "projection-property equivalence check");
    theorem2->add_option("file", input)->required();
    theorem2->add_option("--cap", cap, "arity cap");
    theorem2->add_option("--limit", limit, "fragment member limit");
    theorem2->add_option("--out", out_path, "write the report here instead of stdout");

    auto* fg = app.add_subcommand("fg", "emit the F_G generators of a Boolean group");
    fg->add_option("--k", k, "universe size")->required();
    fg->add_option("--index", index, "which enumerated group");
    fg->add_option("--out", out_path, "write the generators here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify->parsed()) return run_classify(input, cap, limit, zero, out_path);
        if (close->parsed()) return run_close(input, arity, limit, out_path);
        if (props->parsed()) return run_props(input, out_path);
        if (theorem2->parsed()) return run_theorem2(input, cap, limit, out_path);
        if (fg->parsed()) return run_fg(k, index, out_path);
    } catch (const TheoremFalsified& e) {
        std::cerr << "falsifier: " << e.what() << "\n";
        return kExitFalsifier;
    } catch (const UnsaturatedError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
