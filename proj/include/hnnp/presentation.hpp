#pragma once

#include "hnnp/group.hpp"
#include "hnnp/word.hpp"

#include <string>
#include <vector>

namespace hnnp {

/// A finite presentation: generator names plus relator words.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int find_generator(const std::string& name) const;
};

/// Presentation of the HNN-extension (G, t; t^-1 A t = B, phi) over a
/// Cayley-table base. One generator per element of G (the identity gets a
/// killing relator) plus the stable letter "t"; defining relators are the
/// full product table plus one conjugation relator per generator of A.
///
/// Returned alongside: element_gen[i] = presentation generator index of
/// base element i, and the index of t.
struct HNNPresentation {
    Presentation pres;
    std::vector<int> element_gen;
    int t_gen = -1;

    Word element_word(int elem) const { return Word{{{element_gen[static_cast<std::size_t>(elem)], 1}}}; }
};

HNNPresentation hnn_presentation(const FiniteGroup& g, const Subgroup& a,
                                 const Subgroup& b, const PartialIso& phi);

} // namespace hnnp
