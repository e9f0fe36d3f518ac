#pragma once

#include <string>
#include <vector>

namespace hnnp {

/// One normalized word letter: generator index with a nonzero exponent.
struct Letter {
    int gen = 0;
    int exp = 0;
    bool operator==(const Letter&) const = default;
};

/// Freely reduced word over abstract generator symbols.
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    bool operator==(const Word&) const = default;

    Word inverse() const;
    long long exponent_sum(int gen) const;

    /// Expansion into single steps: +(g+1) for g, -(g+1) for g^-1.
    std::vector<int> steps() const;
};

/// Free reduction: merges adjacent letters with equal symbols and drops
/// zero exponents.
Word free_reduce(const Word& w);

Word concat(const Word& a, const Word& b);
Word word_power(const Word& a, int e);
Word commutator_word(const Word& a, const Word& b);
Word word_from_steps(const std::vector<int>& steps);

/// Parses whitespace-separated tokens "name" or "name^exp" against a
/// generator name list. Throws UnknownSymbol / ParseError.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

std::string format_word(const Word& w, const std::vector<std::string>& names);

} // namespace hnnp
