#pragma once

#include <algorithm>
#include <deque>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pstab/errors.hpp"
#include "pstab/mode.hpp"
#include "pstab/tableau.hpp"
#include "pstab/words.hpp"

namespace pstab {

/// A pair of equal-length words (top u over bottom v).
template <class U, class V = U>
struct TwoRowedArray {
    BasicWord<U> top;
    BasicWord<V> bottom;

    TwoRowedArray() = default;
    TwoRowedArray(BasicWord<U> u, BasicWord<V> v) : top(std::move(u)), bottom(std::move(v))
    {
        if (top.size() != bottom.size())
            throw invalid_input("two-rowed array rows differ in length");
    }

    std::size_t size() const { return top.size(); }

    // u weakly increasing, and v weakly increasing (l) / decreasing (r) on equal-u runs.
    bool is_ordered_for(Mode m) const
    {
        for (std::size_t i = 1; i < top.size(); ++i) {
            if (top[i] < top[i - 1])
                return false;
            if (top[i] == top[i - 1]) {
                const bool bad = m == Mode::lps ? bottom[i] < bottom[i - 1]
                                                : bottom[i - 1] < bottom[i];
                if (bad)
                    return false;
            }
        }
        return true;
    }
    bool is_l_array() const { return is_ordered_for(Mode::lps); }
    bool is_r_array() const { return is_ordered_for(Mode::rps); }

    friend bool operator==(const TwoRowedArray&, const TwoRowedArray&) = default;
    friend auto operator<=>(const TwoRowedArray&, const TwoRowedArray&) = default;
};

using Array = TwoRowedArray<Symbol>;

// Insertion tableau p and recording tableau q, of equal shape.
template <class SP, class SQ = Symbol>
struct TableauPair {
    Tableau<SP> p;
    Tableau<SQ> q;

    friend bool operator==(const TableauPair&, const TableauPair&) = default;
    friend auto operator<=>(const TableauPair&, const TableauPair&) = default;
};

using PlainPair = TableauPair<Symbol, Symbol>;

namespace detail {

// Column that x bumps into, or cols.size() when x starts a new column.
// Column fronts are weakly (lps) or strictly (rps) increasing, so binary search applies.
template <class Cols, class S>
std::size_t target_column(const Cols& cols, const S& x, Mode m)
{
    auto head = [](const auto& c) -> const S& { return c.front().first; };
    auto it = m == Mode::lps ? std::ranges::upper_bound(cols, x, {}, head)
                             : std::ranges::lower_bound(cols, x, {}, head);
    return static_cast<std::size_t>(it - cols.begin());
}

template <class V, class L>
struct LabelledInsertion {
    // Each box of p remembers the step (0-based) that inserted it.
    std::vector<std::deque<std::pair<V, std::size_t>>> p;
    std::vector<std::vector<L>> q;
};

template <class V, class L>
LabelledInsertion<V, L> run_insertion(std::span<const V> v, std::span<const L> labels, Mode m)
{
    LabelledInsertion<V, L> st;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const std::size_t col = target_column(st.p, v[j], m);
        if (col == st.p.size()) {
            st.p.emplace_back();
            st.q.emplace_back();
        }
        // Bumping the column up one box and filling the cleared bottom box
        // is a push at the front of bottom-to-top storage.
        st.p[col].emplace_front(v[j], j);
        if (!labels.empty())
            st.q[col].push_back(labels[j]);
    }
    return st;
}

template <class V, class L>
Tableau<V> materialize_p(const LabelledInsertion<V, L>& st)
{
    std::vector<typename Tableau<V>::Column> cols;
    cols.reserve(st.p.size());
    for (const auto& c : st.p) {
        typename Tableau<V>::Column out;
        out.reserve(c.size());
        for (const auto& [sym, step] : c)
            out.push_back(sym);
        cols.push_back(std::move(out));
    }
    return Tableau<V>(std::move(cols));
}

} // namespace detail

/// PS insertion of a word, symbol by symbol from the left.
template <class S>
Tableau<S> ps_insert(std::span<const S> w, Mode m)
{
    auto st = detail::run_insertion<S, Symbol>(w, {}, m);
    return detail::materialize_p(st);
}

template <class S>
Tableau<S> ps_insert(const BasicWord<S>& w, Mode m)
{
    return ps_insert(std::span<const S>(w), m);
}

/// Where each letter of w ends up in ps_insert(w, m): result[i] is the final
/// position of w[i].
template <class S>
std::vector<Position> final_positions(std::span<const S> w, Mode m)
{
    auto st = detail::run_insertion<S, Symbol>(w, {}, m);
    std::vector<Position> pos(w.size());
    for (std::size_t c = 0; c < st.p.size(); ++c)
        for (std::size_t r = 0; r < st.p[c].size(); ++r)
            pos[st.p[c][r].second] = Position{c, r};
    return pos;
}

template <class S>
std::vector<Position> final_positions(const BasicWord<S>& w, Mode m)
{
    return final_positions(std::span<const S>(w), m);
}

namespace detail {

template <class V, class L>
TableauPair<V, L> insert_with_labels(std::span<const V> v, std::span<const L> labels, Mode m)
{
    auto st = run_insertion(v, labels, m);
    std::vector<typename Tableau<L>::Column> qcols(st.q.begin(), st.q.end());
    return TableauPair<V, L>{materialize_p(st), Tableau<L>(std::move(qcols))};
}

} // namespace detail

/// Insertion of w with a recording tableau: step j puts j on top of the
/// column of q matching the box created in p.
template <class S>
TableauPair<S, Symbol> extended_insert(std::span<const S> w, Mode m)
{
    std::vector<Symbol> steps(w.size());
    for (std::size_t j = 0; j < steps.size(); ++j)
        steps[j] = static_cast<Symbol>(j + 1);
    return detail::insert_with_labels<S, Symbol>(w, steps, m);
}

template <class S>
TableauPair<S, Symbol> extended_insert(const BasicWord<S>& w, Mode m)
{
    return extended_insert(std::span<const S>(w), m);
}

/// Insertion of a two-rowed array: p is the insertion of the bottom word,
/// q receives the top symbols where p's boxes were created.
/// Throws invalid_input unless the array is an l-array (lps) or r-array (rps).
template <class U, class V>
TableauPair<V, U> array_insert(const TwoRowedArray<U, V>& arr, Mode m)
{
    if (!arr.is_ordered_for(m))
        throw invalid_input(std::string("two-rowed array is not an ") +
                            (m == Mode::lps ? "l" : "r") + "-array");
    return detail::insert_with_labels<V, U>(arr.bottom, arr.top, m);
}

/// Undoes array insertion step by step.
///
/// lps removes from q the rightmost occurrence of its largest symbol; rps the
/// leftmost column whose top holds the largest symbol. The same column loses
/// its bottom box in p. Stable-pair membership is not checked here.
template <class SP, class SQ>
TwoRowedArray<SQ, SP> reverse_insertion(const TableauPair<SP, SQ>& pair, Mode m)
{
    if (pair.p.shape() != pair.q.shape())
        throw invalid_input("reverse insertion: tableaux differ in shape");
    if (!classify(pair.p).is_kind(m) || !classify(pair.q).is_kind(m))
        throw invalid_input(std::string("reverse insertion: both tableaux must be ") +
                            std::string(to_string(m)) + " tableaux");

    std::vector<std::deque<SP>> p;
    std::vector<std::vector<SQ>> q;
    for (const auto& c : pair.p.columns())
        p.emplace_back(c.begin(), c.end());
    for (const auto& c : pair.q.columns())
        q.emplace_back(c.begin(), c.end());

    const std::size_t n = pair.p.size();
    BasicWord<SQ> top(n);
    BasicWord<SP> bottom(n);
    for (std::size_t step = n; step-- > 0;) {
        const SQ* largest = nullptr;
        for (const auto& column : q)
            for (const SQ& s : column)
                if (largest == nullptr || *largest < s)
                    largest = &s;
        const SQ top_symbol = *largest;

        std::size_t col = q.size();
        if (m == Mode::lps) {
            for (std::size_t c = 0; c < q.size(); ++c)
                if (std::find(q[c].begin(), q[c].end(), top_symbol) != q[c].end())
                    col = c;
            if (!(q[col].back() == top_symbol))
                throw invalid_input("reverse insertion dead end at step " +
                                    std::to_string(step + 1) +
                                    ": largest recording symbol is not on top of its column");
        } else {
            for (std::size_t c = 0; c < q.size() && col == q.size(); ++c)
                if (q[c].back() == top_symbol)
                    col = c;
        }
        if (col + 1 != q.size() && q[col].size() == 1)
            throw invalid_input("reverse insertion dead end at step " + std::to_string(step + 1) +
                                ": would empty a column that is not the rightmost");

        top[step] = q[col].back();
        q[col].pop_back();
        bottom[step] = p[col].front();
        p[col].pop_front();
        if (q[col].empty()) {
            q.pop_back();
            p.pop_back();
        }
    }
    return TwoRowedArray<SQ, SP>(std::move(top), std::move(bottom));
}

/// Reads p in the order given by the column-reversed recording tableau:
/// the i-th letter is the entry of p where i sits in reverse_columns(q).
template <class S>
BasicWord<S> read_by_recording(const TableauPair<S, Symbol>& pair)
{
    if (pair.p.shape() != pair.q.shape())
        throw invalid_input("read by recording: tableaux differ in shape");
    if (!classify(pair.q).is_recording)
        throw invalid_input("read by recording: q is not a recording tableau");
    BasicWord<S> w(pair.p.size());
    for (std::size_t c = 0; c < pair.q.column_count(); ++c) {
        const auto& qc = pair.q.column(c);
        for (std::size_t r = 0; r < qc.size(); ++r)
            w[qc[r] - 1] = pair.p.column(c)[qc.size() - 1 - r];
    }
    return w;
}

} // namespace pstab
