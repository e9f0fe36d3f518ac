#pragma once

#include "hnnp/hnn.hpp"
#include "hnnp/witness.hpp"

#include <string>
#include <vector>

namespace hnnp {

/// A group loaded from a file, plus the symbols words over it may use.
/// Cayley input: symbols are the element labels. Presentation input: the
/// presentation generators. Permutation input: "g0", "g1", ...
struct LoadedGroup {
    FiniteGroupPtr group;
    std::vector<std::string> symbols;
    std::vector<int> symbol_elems; // element of group per symbol
};

/// Evaluates a word over the loaded symbols to a group element.
int resolve_element(const LoadedGroup& lg, const std::string& word);

/// Parses {"format":"cayley"|"permutation"|"presentation", ...}.
/// Conversion to a Cayley table is capped at order max_order.
LoadedGroup load_group_json(const std::string& json_text, int max_order = 4096);

/// Instance file: {"p": prime, "group": <group object>, "A": [words],
/// "B": [words], "phi": [[domainWord, imageWord], ...]}.
/// A is the closure of its generators; phi is extended from the pairs.
struct LoadedInstance {
    HNNInstance inst;
    LoadedGroup lg;
};

LoadedInstance load_instance_json(const std::string& json_text, int max_order = 4096);
LoadedInstance load_instance_file(const std::string& path, int max_order = 4096);

std::string read_file(const std::string& path);

/// Witness file: {"format":"witness","X":<cayley>,"rho":[[gLabel,xLabel]...],
/// "rhoT": xLabel, "report": {...}}.
std::string witness_to_json(const HNNInstance& inst, const WitnessResult& w);

std::string group_to_cayley_json(const FiniteGroup& g);

} // namespace hnnp
