#include "hnnp/word.hpp"

#include "hnnp/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace hnnp {

Word free_reduce(const Word& w) {
    Word out;
    for (const Letter& l : w.letters) {
        if (l.exp == 0) continue;
        if (!out.letters.empty() && out.letters.back().gen == l.gen) {
            out.letters.back().exp += l.exp;
            if (out.letters.back().exp == 0) out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

Word Word::inverse() const {
    Word out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back({it->gen, -it->exp});
    return out;
}

long long Word::exponent_sum(int gen) const {
    long long s = 0;
    for (const Letter& l : letters)
        if (l.gen == gen) s += l.exp;
    return s;
}

std::vector<int> Word::steps() const {
    std::vector<int> out;
    for (const Letter& l : letters) {
        int step = l.exp > 0 ? l.gen + 1 : -(l.gen + 1);
        for (int i = 0; i < std::abs(l.exp); ++i) out.push_back(step);
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return free_reduce(out);
}

Word word_power(const Word& a, int e) {
    Word out;
    Word base = e < 0 ? a.inverse() : a;
    for (int i = 0; i < std::abs(e); ++i) out = concat(out, base);
    return out;
}

Word commutator_word(const Word& a, const Word& b) {
    return concat(concat(a.inverse(), b.inverse()), concat(a, b));
}

Word word_from_steps(const std::vector<int>& steps) {
    Word out;
    for (int s : steps)
        out.letters.push_back({std::abs(s) - 1, s > 0 ? 1 : -1});
    return free_reduce(out);
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    Word out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        int exp = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            if (e.empty()) throw ParseError("missing exponent in token '" + tok + "'");
            std::size_t pos = 0;
            try {
                exp = std::stoi(e, &pos);
            } catch (const std::exception&) {
                throw ParseError("bad exponent in token '" + tok + "'");
            }
            if (pos != e.size()) throw ParseError("bad exponent in token '" + tok + "'");
        }
        int gen = -1;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) { gen = static_cast<int>(i); break; }
        if (gen < 0) throw UnknownSymbol("unknown symbol '" + name + "'");
        out.letters.push_back({gen, exp});
    }
    return free_reduce(out);
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
    if (w.letters.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const Letter& l : w.letters) {
        if (!first) out << ' ';
        first = false;
        out << names[static_cast<std::size_t>(l.gen)];
        if (l.exp != 1) out << '^' << l.exp;
    }
    return out.str();
}

} // namespace hnnp
