#include "hnnp/io.hpp"

#include "hnnp/coset_table.hpp"
#include "hnnp/errors.hpp"
#include "hnnp/presentation.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace hnnp {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid file: ") + e.what());
    }
}

LoadedGroup from_cayley(const json& j) {
    LoadedGroup lg;
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
        throw ParseError("declared order does not match the table");
    lg.group = std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
    for (int i = 0; i < lg.group->order(); ++i) {
        lg.symbols.push_back(lg.group->label(i));
        lg.symbol_elems.push_back(i);
    }
    return lg;
}

LoadedGroup from_permutation(const json& j, int max_order) {
    int degree = j.at("degree").get<int>();
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != degree)
            throw ParseError("generator length does not match degree");
        std::vector<char> seen(g.size(), 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
                throw ParseError("generator is not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    std::vector<int> ident(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) ident[static_cast<std::size_t>(i)] = i;
    auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            out[i] = b[static_cast<std::size_t>(a[i])];
        return out;
    };
    std::vector<std::vector<int>> elems{ident};
    std::map<std::vector<int>, int> index{{ident, 0}};
    for (std::size_t qi = 0; qi < elems.size(); ++qi)
        for (const auto& g : gens) {
            std::vector<int> prod = compose(elems[qi], g);
            if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(prod));
                if (static_cast<int>(elems.size()) > max_order)
                    throw CapExceeded("permutation group exceeds the order cap");
            }
        }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                index.at(compose(elems[static_cast<std::size_t>(i)],
                                 elems[static_cast<std::size_t>(k)]));
    LoadedGroup lg;
    lg.group = std::make_shared<const FiniteGroup>(std::move(table));
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        lg.symbols.push_back("g" + std::to_string(gi));
        lg.symbol_elems.push_back(index.at(gens[gi]));
    }
    return lg;
}

LoadedGroup from_presentation(const json& j, int max_order) {
    Presentation pres;
    pres.generators = j.at("generators").get<std::vector<std::string>>();
    for (const std::string& r : j.at("relators").get<std::vector<std::string>>())
        pres.relators.push_back(parse_word(r, pres.generators));
    CosetTable ct = [&] {
        try {
            return enumerate_cosets(pres, {}, max_order);
        } catch (const Overflow&) {
            throw CapExceeded("presented group exceeds the order cap (or is infinite)");
        }
    }();
    LoadedGroup lg;
    lg.group = group_from_coset_table(ct);
    for (std::size_t gi = 0; gi < pres.generators.size(); ++gi) {
        lg.symbols.push_back(pres.generators[gi]);
        lg.symbol_elems.push_back(ct.trace(0, Word{{{static_cast<int>(gi), 1}}}));
    }
    return lg;
}

int resolve_token_list_element(const LoadedGroup& lg, const json& item) {
    if (item.is_number_integer()) {
        int idx = item.get<int>();
        if (idx < 0 || idx >= lg.group->order()) throw ParseError("element index out of range");
        return idx;
    }
    if (item.is_string()) return resolve_element(lg, item.get<std::string>());
    throw ParseError("element must be a word string or an index");
}

} // namespace

int resolve_element(const LoadedGroup& lg, const std::string& word) {
    // a bare integer is an element index
    bool numeric = !word.empty();
    for (std::size_t i = 0; i < word.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(word[i]))) { numeric = false; break; }
    if (numeric) {
        int idx = std::stoi(word);
        if (idx >= lg.group->order()) throw ParseError("element index out of range");
        return idx;
    }
    Word w = parse_word(word, lg.symbols);
    const FiniteGroup& g = *lg.group;
    int acc = g.identity();
    for (const Letter& l : w.letters)
        acc = g.mul(acc, g.power(lg.symbol_elems[static_cast<std::size_t>(l.gen)], l.exp));
    return acc;
}

LoadedGroup load_group_json(const std::string& json_text, int max_order) {
    return [&] {
        json j = parse_json(json_text);
        try {
            std::string fmt = j.at("format").get<std::string>();
            if (fmt == "cayley") return from_cayley(j);
            if (fmt == "permutation") return from_permutation(j, max_order);
            if (fmt == "presentation") return from_presentation(j, max_order);
            throw ParseError("unknown group format '" + fmt + "'");
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid group object: ") + e.what());
        }
    }();
}

LoadedInstance load_instance_json(const std::string& json_text, int max_order) {
    json j = parse_json(json_text);
    try {
        LoadedInstance out;
        out.lg = load_group_json(j.at("group").dump(), max_order);
        const FiniteGroup& g = *out.lg.group;
        int p = j.at("p").get<int>();
        if (p < 2) throw ParseError("p must be a prime");

        auto gens_of = [&](const char* key) {
            std::vector<int> elems;
            for (const json& item : j.at(key))
                elems.push_back(resolve_token_list_element(out.lg, item));
            return elems;
        };
        Subgroup a = closure(g, gens_of("A"));
        Subgroup b = closure(g, gens_of("B"));

        std::vector<int> dom, img;
        for (const json& pair : j.at("phi")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("phi entries must be [domainWord, imageWord] pairs");
            dom.push_back(resolve_token_list_element(out.lg, pair[0]));
            img.push_back(resolve_token_list_element(out.lg, pair[1]));
        }
        PartialIso phi = extend_partial_iso(g, dom, img);
        if (!(phi.domain == a))
            throw ParseError("phi pairs do not cover the subgroup A");
        if (!(phi.codomain == b))
            throw ParseError("phi image is not the subgroup B");
        out.inst = make_instance(out.lg.group, a, b, phi, p);
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid instance file: ") + e.what());
    }
}

LoadedInstance load_instance_file(const std::string& path, int max_order) {
    return load_instance_json(read_file(path), max_order);
}

std::string group_to_cayley_json(const FiniteGroup& g) {
    ojson j;
    j["format"] = "cayley";
    j["order"] = g.order();
    std::vector<std::vector<int>> table(static_cast<std::size_t>(g.order()),
                                        std::vector<int>(static_cast<std::size_t>(g.order())));
    for (int i = 0; i < g.order(); ++i)
        for (int k = 0; k < g.order(); ++k)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = g.mul(i, k);
    j["table"] = table;
    std::vector<std::string> labels;
    for (int i = 0; i < g.order(); ++i) labels.push_back(g.label(i));
    j["labels"] = labels;
    return j.dump();
}

std::string witness_to_json(const HNNInstance& inst, const WitnessResult& w) {
    const FiniteGroup& g = inst.group();
    ojson j;
    j["format"] = "witness";
    j["X"] = ojson::parse(group_to_cayley_json(*w.X));
    std::vector<std::vector<std::string>> rho;
    for (int i = 0; i < g.order(); ++i)
        rho.push_back({g.label(i), w.X->label(w.rhoOnG[static_cast<std::size_t>(i)])});
    j["rho"] = rho;
    j["rhoT"] = w.X->label(w.rhoT);
    j["report"] = {{"homomorphism", w.report.homomorphism},
                   {"injective_on_base", w.report.injective_on_base},
                   {"p_group", w.report.p_group},
                   {"conjugation", w.report.conjugation}};
    return j.dump(2) + "\n";
}

} // namespace hnnp
