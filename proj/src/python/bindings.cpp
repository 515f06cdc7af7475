#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multiclone/classifiers.hpp"
#include "multiclone/five_type.hpp"
#include "multiclone/opfile.hpp"
#include "multiclone/projection.hpp"

namespace py = pybind11;
using namespace multiclone;

namespace {

GeneratorSet gens_from_list(int k, const std::vector<MultiOp>& ops) {
    GeneratorSet gens{Universe(k)};
    for (const MultiOp& f : ops) gens.add(f);
    return gens;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "multioperations on small finite universes: composition, closure, classification";

    py::register_exception<UnsaturatedError>(m, "UnsaturatedError");
    py::register_exception<TheoremFalsified>(m, "TheoremFalsified");

    py::class_<MultiOp>(m, "MultiOp")
        .def(py::init([](int k, int arity, const std::vector<int>& table) {
                 std::vector<SubsetMask> masks(table.begin(), table.end());
                 return MultiOp(Universe(k), arity, std::move(masks));
             }),
             py::arg("k"), py::arg("arity"), py::arg("table"),
             "Build from a dense table of subset bitmasks (bit a set iff a is a value).")
        .def_property_readonly("k", [](const MultiOp& f) { return f.universe().size; })
        .def_property_readonly("arity", &MultiOp::arity)
        .def_property_readonly("table",
                               [](const MultiOp& f) {
                                   return std::vector<int>(f.table().begin(), f.table().end());
                               })
        .def("eval",
             [](const MultiOp& f, const std::vector<int>& tuple) {
                 std::vector<Element> t(tuple.begin(), tuple.end());
                 std::vector<int> values;
                 SubsetMask mask = f.eval(t);
                 for (int a = 0; a < f.universe().size; ++a)
                     if (mask & (1u << a)) values.push_back(a);
                 return values;
             })
        .def("kind", [](const MultiOp& f) { return std::string(op_kind_name(kind(f))); })
        .def("__eq__", [](const MultiOp& a, const MultiOp& b) { return a == b; })
        .def("__hash__", [](const MultiOp& f) { return MultiOpHash{}(f); })
        .def("__repr__", [](const MultiOp& f) {
            return "<MultiOp k=" + std::to_string(f.universe().size) +
                   " arity=" + std::to_string(f.arity()) + ">";
        });

    py::class_<BooleanGroup>(m, "BooleanGroup")
        .def_property_readonly("k", [](const BooleanGroup& g) { return g.universe.size; })
        .def_property_readonly("zero", [](const BooleanGroup& g) { return int(g.zero); })
        .def("add", [](const BooleanGroup& g, int a, int b) {
            return int(g.add(static_cast<Element>(a), static_cast<Element>(b)));
        })
        .def("__repr__", [](const BooleanGroup& g) {
            return "<BooleanGroup k=" + std::to_string(g.universe.size) +
                   " zero=" + std::to_string(int(g.zero)) + ">";
        });

    m.def("make_projection",
          [](int k, int arity, int coord) { return make_projection(Universe(k), arity, coord); });
    m.def("make_constant", [](int k, int arity, int a) {
        return make_constant(Universe(k), arity, static_cast<Element>(a));
    });
    m.def("make_empty", [](int k, int arity) { return make_empty(Universe(k), arity); });
    m.def("isomer", [](const MultiOp& f, const std::vector<int>& perm) { return isomer(f, perm); });
    m.def("identify", &identify);
    m.def("compose", [](const MultiOp& f, const std::vector<MultiOp>& inner) {
        return compose(f, inner);
    });

    m.def("is_projection", [](const MultiOp& f) { return is_projection(f); });
    m.def("is_idempotent", &is_idempotent);
    m.def("is_majority", &is_majority);
    m.def("is_minority", &is_minority);
    m.def("is_maltsev", &is_maltsev);
    m.def("is_pixley", &is_pixley);
    m.def("is_semiprojection", [](const MultiOp& f) { return is_semiprojection(f); });
    m.def("is_totally_symmetric", &is_totally_symmetric);
    m.def("chi_triple", [](const MultiOp& f) -> std::optional<int> {
        auto chi = chi_triple(f);
        if (!chi) return std::nullopt;
        return chi->code();
    });

    m.def(
        "close_fixed_arity",
        [](int k, const std::vector<MultiOp>& gens, int arity, std::size_t limit) {
            CloneFragment frag = close_fixed_arity(gens_from_list(k, gens), arity, limit);
            return py::make_tuple(frag.members, frag.saturated);
        },
        py::arg("k"), py::arg("gens"), py::arg("arity"), py::arg("limit") = kDefaultMemberLimit,
        "Returns (members, saturated).");

    m.def(
        "classify_five_type",
        [](int k, const std::vector<MultiOp>& gens, int cap, std::size_t limit, int zero) {
            TypeWitness w =
                classify_five_type(gens_from_list(k, gens), cap, limit, static_cast<Element>(zero));
            py::dict out;
            out["type"] = std::string(five_type_name(w.tag));
            out["witness"] = w.witness ? py::cast(*w.witness) : py::none();
            out["group"] = w.group ? py::cast(*w.group) : py::none();
            py::list steps;
            for (const ProvenanceStep& step : w.provenance) steps.append(step.note);
            out["provenance"] = steps;
            return out;
        },
        py::arg("k"), py::arg("gens"), py::arg("cap") = kDefaultArityCap,
        py::arg("limit") = kDefaultMemberLimit, py::arg("zero") = 0);

    m.def(
        "theorem2_equivalence",
        [](int k, const std::vector<MultiOp>& gens, int cap, std::size_t limit) {
            ProjectionPropertyReport r = theorem2_equivalence(gens_from_list(k, gens), cap, limit);
            py::dict out;
            out["verdict"] = std::string(theorem2_verdict_name(r.verdict));
            out["condition_i"] = std::string(condition_status_name(r.condition_i));
            out["has_all_constants"] = r.has_all_constants;
            out["binary_idempotents_are_projections"] = r.binary_idempotents_are_projections;
            out["group"] = r.matched_group ? py::cast(*r.matched_group) : py::none();
            return out;
        },
        py::arg("k"), py::arg("gens"), py::arg("cap") = kDefaultArityCap,
        py::arg("limit") = kDefaultMemberLimit);

    m.def("enumerate_boolean_groups",
          [](int k) { return enumerate_boolean_groups(Universe(k)); });
    m.def("fg_generators", [](const BooleanGroup& g) { return fg_generators(g).gens; });
    m.def("fg_membership",
          [](const BooleanGroup& g, const MultiOp& f) -> std::optional<std::pair<int, std::vector<int>>> {
              auto form = fg_membership(g, f);
              if (!form) return std::nullopt;
              std::vector<int> coords;
              for (int i = 1; i <= f.arity(); ++i)
                  if (form->coords & (1u << (i - 1))) coords.push_back(i);
              return std::make_pair(int(form->constant), coords);
          });

    m.def("parse_opfile", [](const std::string& text) {
        OpFile file = parse_opfile(text);
        std::vector<std::pair<std::string, MultiOp>> out;
        for (NamedOp& named : file.ops) out.emplace_back(named.name, std::move(named.op));
        return py::make_tuple(file.universe.size, out);
    });
    m.def("emit_opfile", [](int k, const std::vector<std::pair<std::string, MultiOp>>& ops) {
        OpFile file{Universe(k), {}};
        for (const auto& [name, op] : ops) file.ops.push_back(NamedOp{name, op});
        return emit_opfile(file);
    });
}
