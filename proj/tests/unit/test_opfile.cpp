#include "multiclone/opfile.hpp"

#include <random>
#include <string>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace multiclone;
using namespace multiclone::testing;

TEST_CASE("parse_opfile reads a two-operation file") {
    const std::string text =
        "universe 2\n"
        "\n"
        "op neg arity 1\n"
        "0 : 1\n"
        "1 : 0\n"
        "\n"
        "op hedge arity 2\n"
        "0 0 : 0\n"
        "0 1 : 0,1\n"
        "1 0 : -\n"
        "1 1 : 1\n";
    const OpFile file = parse_opfile(text);
    CHECK(file.universe.size == 2);
    REQUIRE(file.ops.size() == 2);
    CHECK(file.ops[0].name == "neg");
    CHECK(file.ops[0].op == negation());
    CHECK(file.ops[1].name == "hedge");
    CHECK(file.ops[1].op.at(0) == 0b01);
    CHECK(file.ops[1].op.at(1) == 0b11);
    CHECK(file.ops[1].op.at(2) == 0);
    CHECK(file.ops[1].op.at(3) == 0b10);

    const GeneratorSet gens = to_generators(file);
    CHECK(gens.gens.size() == 2);
    CHECK(gens.universe.size == 2);
}

TEST_CASE("emit_opfile prints the documented layout") {
    const OpFile file{Universe(2), {NamedOp{"xor3", xor_minority()}}};
    CHECK(emit_opfile(file) ==
          "universe 2\n"
          "\n"
          "op xor3 arity 3\n"
          "0 0 0 : 0\n"
          "0 0 1 : 1\n"
          "0 1 0 : 1\n"
          "0 1 1 : 0\n"
          "1 0 0 : 1\n"
          "1 0 1 : 0\n"
          "1 1 0 : 0\n"
          "1 1 1 : 1\n");
    CHECK(emit_single_op("xor3", xor_minority()) == emit_opfile(file));
}

TEST_CASE("parse_opfile reports positioned diagnostics") {
    auto line_of = [](const std::string& text) {
        try {
            parse_opfile(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("universe nine\n") == 1);
    CHECK(line_of("universe 9\n") == 1);
    CHECK(line_of("\n\nuniverse 2 junk\n") == 3);
    CHECK(line_of("universe 2\nop f arity 0\n") == 2);
    CHECK(line_of("universe 2\nop f arity 7\n") == 2);
    CHECK(line_of("universe 2\nop 9f arity 1\n") == 2);
    CHECK(line_of("universe 2\nnot a block\n") == 2);
    // Rows out of order.
    CHECK(line_of("universe 2\nop f arity 1\n1 : 0\n0 : 1\n") == 3);
    // Element out of range for the universe.
    CHECK(line_of("universe 2\nop f arity 1\n0 : 2\n1 : 0\n") == 3);
    // Values must ascend, without a trailing comma.
    CHECK(line_of("universe 2\nop f arity 1\n0 : 1,0\n1 : 0\n") == 3);
    CHECK(line_of("universe 2\nop f arity 1\n0 : 0,\n1 : 0\n") == 3);
    // Missing rows: the error points at the last line seen.
    CHECK(line_of("universe 2\nop f arity 1\n0 : 0\n") == 3);
    // Duplicate names.
    CHECK(line_of("universe 2\nop f arity 1\n0 : 0\n1 : 1\nop f arity 1\n0 : 0\n1 : 1\n") == 5);
    // Malformed row shape.
    CHECK(line_of("universe 2\nop f arity 2\n0 0 0 : 0\n") == 3);
    CHECK(line_of("universe 2\nop f arity 1\n0 = 0\n1 : 1\n") == 3);
}

TEST_CASE("round trip over random multioperations") {
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 5);
        const Universe u(k);
        const int arity = 1 + static_cast<int>(rng() % 3);
        std::vector<SubsetMask> table(table_length(k, arity));
        for (SubsetMask& m : table) m = static_cast<SubsetMask>(rng() % (1u << k));
        const MultiOp op(u, arity, std::move(table));
        const OpFile file{u, {NamedOp{"f_" + std::to_string(trial), op}}};
        const OpFile reparsed = parse_opfile(emit_opfile(file));
        REQUIRE(reparsed.ops.size() == 1);
        CHECK(reparsed.ops[0].name == file.ops[0].name);
        CHECK(reparsed.ops[0].op == op);
        // Emission is canonical: a second pass is byte-identical.
        CHECK(emit_opfile(reparsed) == emit_opfile(file));
    }
}

TEST_CASE("round trip of a whole closure fragment") {
    GeneratorSet gens(Universe(2));
    gens.add(xor_minority());
    for (Element a = 0; a < 2; ++a) gens.add(make_constant(Universe(2), 1, a));
    const CloneFragment frag = close_fixed_arity(gens, 3);
    CHECK(frag.members.size() == 16);
    OpFile file{frag.universe, {}};
    for (std::size_t i = 0; i < frag.members.size(); ++i)
        file.ops.push_back(NamedOp{"m" + std::to_string(i), frag.members[i]});
    const OpFile reparsed = parse_opfile(emit_opfile(file));
    REQUIRE(reparsed.ops.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) CHECK(reparsed.ops[i].op == frag.members[i]);
}
