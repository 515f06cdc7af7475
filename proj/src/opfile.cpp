#include "multiclone/opfile.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace multiclone {

namespace {

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

Element parse_element(const std::string& tok, int k, int line_no) {
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '7')
        throw ParseError(line_no, "expected an element, got '" + tok + "'");
    const int v = tok[0] - '0';
    if (v >= k) throw ParseError(line_no, "element " + tok + " out of range for universe " + std::to_string(k));
    return static_cast<Element>(v);
}

SubsetMask parse_values(const std::string& tok, int k, int line_no) {
    if (tok == "-") return 0;
    SubsetMask mask = 0;
    int last = -1;
    std::size_t pos = 0;
    while (pos < tok.size()) {
        std::size_t comma = tok.find(',', pos);
        std::string piece = tok.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        Element a = parse_element(piece, k, line_no);
        if (a <= last) throw ParseError(line_no, "values must be strictly ascending");
        last = a;
        mask |= singleton(a);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == tok.size()) throw ParseError(line_no, "trailing comma in value list");
    }
    return mask;
}

}  // namespace

OpFile parse_opfile(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    auto next_content_line = [&](std::vector<std::string>& toks) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            toks = tokens_of(line);
            if (!toks.empty()) return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_content_line(toks) || toks.size() != 2 || toks[0] != "universe")
        throw ParseError(line_no == 0 ? 1 : line_no, "expected header 'universe <k>'");
    int k = 0;
    try {
        k = std::stoi(toks[1]);
    } catch (...) {
        throw ParseError(line_no, "bad universe size '" + toks[1] + "'");
    }
    if (k < kMinUniverse || k > kMaxUniverse)
        throw ParseError(line_no, "universe size must be in [2, 8]");

    OpFile file{Universe(k), {}};
    std::unordered_set<std::string> names;
    while (next_content_line(toks)) {
        if (toks.size() != 4 || toks[0] != "op" || toks[2] != "arity")
            throw ParseError(line_no, "expected 'op <name> arity <n>'");
        // Copy: the row loop below reuses `toks` for every table line.
        const std::string name = toks[1];
        if (!valid_name(name)) throw ParseError(line_no, "invalid operation name '" + name + "'");
        if (!names.insert(name).second)
            throw ParseError(line_no, "duplicate operation name '" + name + "'");
        int arity = 0;
        try {
            arity = std::stoi(toks[3]);
        } catch (...) {
            throw ParseError(line_no, "bad arity '" + toks[3] + "'");
        }
        if (arity < 1 || arity > kHardArityCap)
            throw ParseError(line_no, "arity must be in [1, 6]");
        const std::size_t rows = table_length(k, arity);
        std::vector<SubsetMask> table(rows);
        std::vector<Element> tuple(static_cast<std::size_t>(arity));
        for (std::size_t row = 0; row < rows; ++row) {
            if (!next_content_line(toks))
                throw ParseError(line_no, "unexpected end of file: operation '" + name + "' needs " +
                                              std::to_string(rows) + " rows");
            if (toks.size() != static_cast<std::size_t>(arity) + 2 ||
                toks[static_cast<std::size_t>(arity)] != ":")
                throw ParseError(line_no, "expected '<a_1> ... <a_n> : <values>'");
            for (int t = 0; t < arity; ++t)
                tuple[static_cast<std::size_t>(t)] = parse_element(toks[static_cast<std::size_t>(t)], k, line_no);
            if (tuple_index(k, tuple) != row)
                throw ParseError(line_no, "rows out of order: expected index " + std::to_string(row));
            table[row] = parse_values(toks[static_cast<std::size_t>(arity) + 1], k, line_no);
        }
        file.ops.push_back(NamedOp{name, MultiOp(file.universe, arity, std::move(table))});
    }
    return file;
}

std::string emit_opfile(const OpFile& file) {
    std::ostringstream out;
    out << "universe " << file.universe.size << "\n";
    const int k = file.universe.size;
    for (const NamedOp& named : file.ops) {
        const MultiOp& op = named.op;
        out << "\nop " << named.name << " arity " << op.arity() << "\n";
        std::vector<Element> tuple(static_cast<std::size_t>(op.arity()));
        for (std::size_t idx = 0; idx < op.table().size(); ++idx) {
            index_to_tuple(k, op.arity(), idx, tuple);
            for (Element a : tuple) out << int(a) << ' ';
            out << ':';
            const SubsetMask mask = op.at(idx);
            if (mask == 0) {
                out << " -";
            } else {
                bool first = true;
                for (Element a = 0; a < k; ++a)
                    if (mask & singleton(a)) {
                        out << (first ? " " : ",") << int(a);
                        first = false;
                    }
            }
            out << "\n";
        }
    }
    return out.str();
}

GeneratorSet to_generators(const OpFile& file) {
    GeneratorSet gens(file.universe);
    for (const NamedOp& named : file.ops) gens.add(named.op);
    return gens;
}

std::string emit_single_op(const std::string& name, const MultiOp& op) {
    return emit_opfile(OpFile{op.universe(), {NamedOp{name, op}}});
}

}  // namespace multiclone
