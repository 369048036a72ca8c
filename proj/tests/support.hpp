#pragma once

// Independent reference implementations for the unit tests. None of these
// share code with the library beyond the basic value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pstab/insertion.hpp"
#include "pstab/tableau.hpp"

namespace ref {

using pstab::Mode;
using pstab::PlainPair;
using pstab::PlainTableau;
using pstab::Symbol;
using pstab::Word;

// Columns drawn top to bottom, as in the figures: back() is the bottom box.
using Drawn = std::vector<std::vector<Symbol>>;

inline PlainTableau from_drawn(const Drawn& d)
{
    std::vector<std::vector<Symbol>> cols;
    for (const auto& c : d)
        cols.emplace_back(c.rbegin(), c.rend());
    return PlainTableau(std::move(cols));
}

// Patience sorting by a linear scan for the least bottom symbol above x.
inline PlainPair insert(const Word& w, Mode m)
{
    Drawn p, q;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const Symbol x = w[j];
        std::size_t best = p.size();
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Symbol r = p[i].back();
            const bool above = m == Mode::lps ? x < r : x <= r;
            if (above && (best == p.size() || r < p[best].back()))
                best = i;
        }
        if (best == p.size()) {
            p.push_back({x});
            q.push_back({static_cast<Symbol>(j + 1)});
        } else {
            p[best].push_back(x);
            q[best].insert(q[best].begin(), static_cast<Symbol>(j + 1));
        }
    }
    return {from_drawn(p), from_drawn(q)};
}

inline std::uint64_t binomial(unsigned n, unsigned k)
{
    std::vector<std::vector<std::uint64_t>> t(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (unsigned j = 1; j < i; ++j)
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return k > n ? 0 : t[n][k];
}

// Bell triangle; bell(n) for n >= 1.
inline std::uint64_t bell(unsigned n)
{
    std::vector<std::uint64_t> row{1};
    for (unsigned i = 1; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto x : row)
            next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.back();
}

// Ranks of the entries of a tableau whose entries are made distinct by
// occurrence indices: lps reads columns left to right, top to bottom;
// rps reads them right to left, bottom to top.
inline PlainTableau rank_standardized(const PlainTableau& t, Mode m)
{
    const auto& cols = t.columns();
    std::map<Symbol, unsigned> seen;
    std::vector<std::vector<std::pair<Symbol, unsigned>>> tagged(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        tagged[c].resize(cols[c].size());
    auto visit = [&](std::size_t c, std::size_t r) { tagged[c][r] = {cols[c][r], ++seen[cols[c][r]]}; };
    if (m == Mode::lps) {
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = cols[c].size(); r-- > 0;)
                visit(c, r);
    } else {
        for (std::size_t c = cols.size(); c-- > 0;)
            for (std::size_t r = 0; r < cols[c].size(); ++r)
                visit(c, r);
    }
    std::vector<std::pair<Symbol, unsigned>> all;
    for (const auto& c : tagged)
        all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    std::vector<std::vector<Symbol>> out;
    for (const auto& c : tagged) {
        std::vector<Symbol> col;
        for (const auto& e : c)
            col.push_back(static_cast<Symbol>(std::lower_bound(all.begin(), all.end(), e) - all.begin() + 1));
        out.push_back(std::move(col));
    }
    return PlainTableau(std::move(out));
}

// Simultaneous-occurrence test on two standard tableaux of equal shape.
// r: columns of p left to right, each top to bottom; s: the same for q with
// every column flipped.
inline bool stable(const PlainTableau& p, const PlainTableau& q)
{
    Word r, s;
    for (const auto& c : p.columns())
        r.insert(r.end(), c.rbegin(), c.rend());
    for (const auto& c : q.columns())
        s.insert(s.end(), c.begin(), c.end());
    for (std::size_t i = 0; i + 2 < r.size(); ++i)
        for (std::size_t j = i + 2; j < r.size(); ++j) {
            const bool r312 = r[i + 1] < r[j] && r[j] < r[i];
            const bool r321 = r[j] < r[i + 1] && r[i + 1] < r[i];
            const bool s132 = s[i] < s[j] && s[j] < s[i + 1];
            const bool s231 = s[j] < s[i] && s[i] < s[i + 1];
            if ((r312 && (s132 || s231)) || (r321 && s132))
                return false;
        }
    return true;
}

} // namespace ref
