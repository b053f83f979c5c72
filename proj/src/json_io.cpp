#include "ncpark/json_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ncpark {

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string(what) + ": missing field \"" + key + "\"");
    return j.at(key);
}

Json null_or(const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); }

}  // namespace

Json to_json(const SetPartition& p) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    return Json{{"n", p.size()}, {"blocks", blocks}};
}

SetPartition set_partition_from_json(const Json& j) {
    const Json& n = field(j, "n", "partition");
    if (!n.is_number_integer()) throw std::invalid_argument("partition: \"n\" must be an integer");
    const Json& blocks = field(j, "blocks", "partition");
    if (!blocks.is_array()) throw std::invalid_argument("partition: \"blocks\" must be an array");
    std::vector<Block> bs;
    for (const auto& b : blocks) bs.push_back(int_array(b, "partition block"));
    return SetPartition(n.get<int>(), std::move(bs));
}

NoncrossingPartition partition_from_json(const Json& j) { return NoncrossingPartition(set_partition_from_json(j)); }

Json to_json(const ParkingWord& w) { return Json(w); }

Json to_json(const ParkingTree& t) {
    Json children = Json::array();
    for (const auto& c : t.children) children.push_back(to_json(c));
    return Json{{"label", t.label}, {"children", children}};
}

Json to_json(const ParkingObject& p) {
    Json j = to_json(static_cast<const SetPartition&>(p.pi()));
    j["sigma"] = p.sigma().one_line();
    return j;
}

Json to_json(const NC2Triple& t) {
    return Json{{"pi", to_json(static_cast<const SetPartition&>(t.pi))}, {"rho", to_json(t.rho)}, {"lambda", t.lam}};
}

Json to_json(const AnyRepresentation& x) {
    return std::visit([](const auto& v) { return to_json(v); }, x);
}

ParkingWord word_from_json(const Json& j) { return int_array(j, "word"); }

ParkingTree tree_from_json(const Json& j) {
    ParkingTree t;
    t.label = int_array(field(j, "label", "tree"), "tree label");
    const Json& children = field(j, "children", "tree");
    if (!children.is_array()) throw std::invalid_argument("tree: \"children\" must be an array");
    for (const auto& c : children) t.children.push_back(tree_from_json(c));
    return t;
}

ParkingObject pair_from_json(const Json& j) {
    NoncrossingPartition pi = partition_from_json(j);
    return ParkingObject(pi, Permutation(int_array(field(j, "sigma", "pair"), "sigma")));
}

NC2Triple triple_from_json(const Json& j) {
    NC2Triple t;
    t.pi = partition_from_json(field(j, "pi", "triple"));
    t.rho = set_partition_from_json(field(j, "rho", "triple"));
    t.lam = int_array(field(j, "lambda", "triple"), "lambda");
    return t;
}

AnyRepresentation representation_from_json(const Json& j, Representation kind) {
    AnyRepresentation x;
    switch (kind) {
        case Representation::word: x = word_from_json(j); break;
        case Representation::tree: x = tree_from_json(j); break;
        case Representation::pair: x = pair_from_json(j); break;
        case Representation::triple: x = triple_from_json(j); break;
    }
    auto v = validate(x);
    if (!v) throw std::invalid_argument(v.diagnostic);
    return x;
}

AnyRepresentation parse_representation(const std::string& text, Representation kind) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw std::invalid_argument("empty input");
    if (text[start] == '[' || text[start] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
        }
        return representation_from_json(j, kind);
    }
    if (kind != Representation::word) throw std::invalid_argument("only words may be given outside JSON");
    ParkingWord w;
    if (text.find_first_of(" ,") == std::string::npos) {
        // A digit string, one letter per digit.
        for (std::size_t i = start; i < text.size(); ++i) {
            char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("word: unexpected character");
            w.push_back(c - '0');
        }
    } else {
        std::string s = text;
        for (char& c : s)
            if (c == ',') c = ' ';
        std::istringstream in(s);
        std::string tok;
        while (in >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("word: unexpected token " + tok);
            }
            if (used != tok.size()) throw std::invalid_argument("word: unexpected token " + tok);
            w.push_back(v);
        }
    }
    return representation_from_json(Json(w), kind);
}

Representation representation_from_name(const std::string& name) {
    if (name == "word") return Representation::word;
    if (name == "tree") return Representation::tree;
    if (name == "pair") return Representation::pair;
    if (name == "triple") return Representation::triple;
    throw std::invalid_argument("unknown representation " + name);
}

Json poset_to_json(const FinitePoset& p, int n) {
    Json covers = Json::array();
    for (const auto& [a, b] : p.cover_pairs()) covers.push_back({a, b});
    return Json{{"n", n}, {"elements", p.labels()}, {"covers", covers}};
}

std::string poset_to_dot(const FinitePoset& p, const std::string& name) {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i) os << "  " << i << " [label=" << Json(p.label(i)).dump() << "];\n";
    for (const auto& [a, b] : p.cover_pairs()) os << "  " << a << " -> " << b << ";\n";
    os << "}\n";
    return os.str();
}

Json to_json(const LemmaReport& r) {
    return Json{{"lemma", r.name}, {"domain", r.domain}, {"passed", r.passed}, {"counterexample", null_or(r.counterexample)}};
}

Json to_json(const ShellingReport& r) {
    return Json{{"lemma", "shelling"},
                {"n", r.n},
                {"chains", r.chains},
                {"domain", r.pairs_checked},
                {"passed", r.witnessed},
                {"order_consistent", r.order_consistent},
                {"counterexample", null_or(r.counterexample)}};
}

Json to_json(const KeyLemmaReport& r) {
    return Json{{"lemma", "key lemma"},
                {"n", r.n},
                {"domain", r.quadruples},
                {"passed", r.passed() ? r.quadruples : r.branch_a + r.only_branch_b},
                {"branch_a", r.branch_a},
                {"branch_b", r.branch_b},
                {"counterexample", null_or(r.counterexample)}};
}

}  // namespace ncpark
