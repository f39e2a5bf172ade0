#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "fintop/common.hpp"
#include "fintop/smith.hpp"

namespace fintop {

/// A word over group generators: a sequence of (generator index, sign)
/// letters with sign in {+1,-1}. Free reduction is an operation, not an
/// invariant; words compare letter-for-letter.
struct Word {
    std::vector<std::pair<int, int>> letters;

    Word() = default;
    static Word gen(int g, int sign = 1) {
        Word w;
        w.letters.push_back({g, sign});
        return w;
    }

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }

    void append(int g, int sign) { letters.push_back({g, sign}); }
    void append(const Word& o) {
        letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    }

    Word inverse() const {
        Word w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            w.letters.push_back({it->first, -it->second});
        return w;
    }

    Word operator*(const Word& o) const {
        Word w = *this;
        w.append(o);
        return w;
    }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator<(const Word& o) const { return letters < o.letters; }
};

inline Word free_reduce(const Word& w) {
    Word r;
    for (const auto& l : w.letters) {
        if (!r.letters.empty() && r.letters.back().first == l.first &&
            r.letters.back().second == -l.second)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

/// Cyclic reduction: strips matching first/last letters after free reduction.
inline Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    while (r.letters.size() >= 2 && r.letters.front().first == r.letters.back().first &&
           r.letters.front().second == -r.letters.back().second) {
        r.letters.erase(r.letters.begin());
        r.letters.pop_back();
        r = free_reduce(r);
    }
    return r;
}

inline std::vector<Int> exponent_vector(const Word& w, std::size_t ngens) {
    std::vector<Int> v(ngens);
    for (const auto& [g, s] : w.letters) v[g] += s;
    return v;
}

/// Replaces every occurrence of generator g by the word d (and g^-1 by d^-1).
inline Word substitute(const Word& w, int g, const Word& d) {
    Word out;
    for (const auto& [gen, s] : w.letters) {
        if (gen != g) {
            out.append(gen, s);
        } else if (s > 0) {
            out.append(d);
        } else {
            out.append(d.inverse());
        }
    }
    return out;
}

/// Renumbers letters after removing generator `gone` from the alphabet.
inline Word drop_generator_index(const Word& w, int gone) {
    Word out;
    for (const auto& [g, s] : w.letters) out.append(g > gone ? g - 1 : g, s);
    return out;
}

inline std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        long run = static_cast<long>(j - i) * w.letters[i].second;
        if (!out.empty()) out += " ";
        out += names.at(w.letters[i].first);
        if (run != 1) out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

}  // namespace fintop
