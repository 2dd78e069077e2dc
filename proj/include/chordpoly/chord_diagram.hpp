#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordpoly/detail/rng.hpp"
#include "chordpoly/errors.hpp"
#include "chordpoly/graph.hpp"

namespace chordpoly {

/// Circular double occurrence word: 2n positions clockwise, each chord label
/// 0..n-1 appearing exactly twice.  Gap i sits between positions i and i+1
/// (mod 2n); corners are always placed in gaps.
class ChordDiagram {
public:
    explicit ChordDiagram(std::vector<int> word) : word_(std::move(word)) {
        if (word_.size() % 2 != 0) throw std::invalid_argument("diagram word has odd length");
        n_ = static_cast<int>(word_.size() / 2);
        ends_.assign(static_cast<std::size_t>(n_), {-1, -1});
        for (int p = 0; p < 2 * n_; ++p) {
            int c = word_[static_cast<std::size_t>(p)];
            if (c < 0 || c >= n_) throw std::invalid_argument("diagram labels must be 0..n-1");
            auto& e = ends_[static_cast<std::size_t>(c)];
            if (e.first < 0)
                e.first = p;
            else if (e.second < 0)
                e.second = p;
            else
                throw std::invalid_argument("label " + std::to_string(c) + " occurs more than twice");
        }
        for (int c = 0; c < n_; ++c)
            if (ends_[static_cast<std::size_t>(c)].second < 0)
                throw std::invalid_argument("label " + std::to_string(c) + " occurs fewer than twice");
    }

    int chord_count() const { return n_; }
    int position_count() const { return 2 * n_; }
    const std::vector<int>& word() const { return word_; }
    int chord_at(int pos) const { return word_[static_cast<std::size_t>(check_position(pos))]; }

    /// Endpoint positions of a chord, first < second.
    std::pair<int, int> endpoints(int chord) const {
        if (chord < 0 || chord >= n_) throw std::invalid_argument("chord label out of range");
        return ends_[static_cast<std::size_t>(chord)];
    }

    int partner(int pos) const {
        auto [a, b] = endpoints(chord_at(pos));
        return pos == a ? b : a;
    }

    int check_position(int pos) const {
        if (pos < 0 || pos >= 2 * n_) throw std::invalid_argument("position out of range");
        return pos;
    }

private:
    std::vector<int> word_;
    std::vector<std::pair<int, int>> ends_;
    int n_ = 0;
};

/// Open clockwise interval of the circle between two endpoints of one chord;
/// it covers gaps from..to-1 and positions from+1..to-1 (mod 2n).
struct Arc {
    int chord;
    int from;
    int to;
    bool operator==(const Arc&) const = default;
};

inline std::pair<Arc, Arc> arcs_of(const ChordDiagram& d, int chord) {
    auto [a, b] = d.endpoints(chord);
    return {Arc{chord, a, b}, Arc{chord, b, a}};
}

inline int arc_gap_count(const ChordDiagram& d, const Arc& a) {
    int m = d.position_count();
    return ((a.to - a.from) % m + m) % m;
}

inline bool arc_contains_gap(const ChordDiagram& d, const Arc& a, int gap) {
    int m = d.position_count();
    d.check_position(gap);
    return ((gap - a.from) % m + m) % m < arc_gap_count(d, a);
}

inline bool arc_contains_position(const ChordDiagram& d, const Arc& a, int pos) {
    int m = d.position_count();
    int off = ((pos - a.from) % m + m) % m;
    return off > 0 && off < arc_gap_count(d, a);
}

inline bool chords_cross(const ChordDiagram& d, int a, int b) {
    if (a == b) return false;
    auto [p1, p2] = d.endpoints(a);
    auto [q1, q2] = d.endpoints(b);
    bool in1 = p1 < q1 && q1 < p2;
    bool in2 = p1 < q2 && q2 < p2;
    return in1 != in2;
}

/// Crossing graph of the chords: vertex i is chord i.
inline Graph intersection_graph(const ChordDiagram& d) {
    Graph g(d.chord_count());
    for (int a = 0; a < d.chord_count(); ++a)
        for (int b = a + 1; b < d.chord_count(); ++b)
            if (chords_cross(d, a, b)) g.add_edge(a, b);
    return g;
}

namespace detail {

// Arc lengths in gaps, indexed by the arc's start position.  Every position
// starts exactly one arc.
inline std::vector<int> arc_lengths(const ChordDiagram& d) {
    const int m = d.position_count();
    std::vector<int> len(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) len[static_cast<std::size_t>(p)] = ((d.partner(p) - p) % m + m) % m;
    return len;
}

// Range-minimum sparse table.
class MinTable {
public:
    explicit MinTable(std::vector<long long> values) {
        table_.push_back(std::move(values));
        std::size_t n = table_[0].size();
        for (std::size_t half = 1; half * 2 <= n; half *= 2) {
            const auto& prev = table_.back();
            std::vector<long long> row(n - 2 * half + 1);
            for (std::size_t i = 0; i < row.size(); ++i) row[i] = std::min(prev[i], prev[i + half]);
            table_.push_back(std::move(row));
        }
    }

    // min over [lo, hi]; empty when lo > hi
    long long min(std::size_t lo, std::size_t hi) const {
        if (lo > hi) return std::numeric_limits<long long>::max();
        std::size_t level = 0, span = 1;
        while (span * 2 <= hi - lo + 1) {
            span *= 2;
            ++level;
        }
        return std::min(table_[level][lo], table_[level][hi + 1 - span]);
    }

private:
    std::vector<std::vector<long long>> table_;
};

}  // namespace detail

/// empty[p]: whether the arc starting at position p contains both endpoints of
/// no chord.  Equivalently, whether it contains no other arc of the family.
inline std::vector<char> empty_arc_flags(const ChordDiagram& d) {
    const int m = d.position_count();
    std::vector<char> empty(static_cast<std::size_t>(m), 1);
    if (m == 0) return empty;
    auto len = detail::arc_lengths(d);
    std::vector<long long> ends(static_cast<std::size_t>(2 * m));
    for (int i = 0; i < 2 * m; ++i) ends[static_cast<std::size_t>(i)] = i + len[static_cast<std::size_t>(i % m)];
    detail::MinTable table(std::move(ends));
    for (int p = 0; p < m; ++p) {
        int l = len[static_cast<std::size_t>(p)];
        if (l <= 1) continue;
        long long inner = table.min(static_cast<std::size_t>(p + 1), static_cast<std::size_t>(p + l - 1));
        empty[static_cast<std::size_t>(p)] = inner > p + l;
    }
    return empty;
}

struct PeripheralInfo {
    std::vector<int> chords;                   // labels with at least one empty arc, ascending
    std::vector<std::vector<Arc>> empty_arcs;  // indexed by chord label; 0..2 arcs each
};

/// Chords with an empty arc, together with those arcs.
inline PeripheralInfo peripheral_chords(const ChordDiagram& d) {
    PeripheralInfo info;
    info.empty_arcs.resize(static_cast<std::size_t>(d.chord_count()));
    auto empty = empty_arc_flags(d);
    for (int c = 0; c < d.chord_count(); ++c) {
        auto [a1, a2] = arcs_of(d, c);
        if (empty[static_cast<std::size_t>(a1.from)]) info.empty_arcs[static_cast<std::size_t>(c)].push_back(a1);
        if (empty[static_cast<std::size_t>(a2.from)]) info.empty_arcs[static_cast<std::size_t>(c)].push_back(a2);
        if (!info.empty_arcs[static_cast<std::size_t>(c)].empty()) info.chords.push_back(c);
    }
    return info;
}

/// Largest l such that from some cut gap, l chords appear with both endpoints
/// of each before both endpoints of the next.  For a fixed cut this is maximum
/// disjoint intervals, solved greedily by earliest right endpoint.
inline int max_series_independent(const ChordDiagram& d) {
    const int n = d.chord_count();
    const int m = d.position_count();
    if (n == 0) return 0;
    int best = 0;
    std::vector<int> left_of_right(static_cast<std::size_t>(m));
    for (int cut = 0; cut < m; ++cut) {
        // Linear coordinate of position p after cutting at gap `cut`.
        auto coord = [&](int p) { return ((p - cut - 1) % m + m) % m; };
        std::fill(left_of_right.begin(), left_of_right.end(), -1);
        for (int c = 0; c < n; ++c) {
            auto [a, b] = d.endpoints(c);
            int x = coord(a), y = coord(b);
            if (x > y) std::swap(x, y);
            left_of_right[static_cast<std::size_t>(y)] = x;
        }
        int count = 0, last = -1;
        for (int r = 0; r < m; ++r) {
            int l = left_of_right[static_cast<std::size_t>(r)];
            if (l >= 0 && l > last) {
                ++count;
                last = r;
            }
        }
        best = std::max(best, count);
    }
    return best;
}

/// Fixture diagram for the chordless cycle C_n: chord i occupies positions 2i
/// and (2i+3) mod 2n, so consecutive chords cross and no others do.
inline ChordDiagram canonical_cycle(int n) {
    if (n < 3) throw std::invalid_argument("canonical_cycle: n must be at least 3");
    std::vector<int> word(static_cast<std::size_t>(2 * n), -1);
    for (int i = 0; i < n; ++i) {
        word[static_cast<std::size_t>(2 * i)] = i;
        word[static_cast<std::size_t>((2 * i + 3) % (2 * n))] = i;
    }
    return ChordDiagram(std::move(word));
}

/// Seeded uniformly shuffled double occurrence word on n chords.
inline ChordDiagram random_diagram(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_diagram: n must be positive");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(2 * n));
    for (int c = 0; c < n; ++c) {
        word.push_back(c);
        word.push_back(c);
    }
    detail::Rng rng(seed);
    for (std::size_t i = word.size(); i > 1; --i) std::swap(word[i - 1], word[rng.below(i)]);
    return ChordDiagram(std::move(word));
}

/// Same diagram read from a different anchor position.
inline ChordDiagram rotated(const ChordDiagram& d, int offset) {
    const int m = d.position_count();
    std::vector<int> word(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) word[static_cast<std::size_t>(p)] = d.chord_at(((p + offset) % m + m) % m);
    return ChordDiagram(std::move(word));
}

/// Whitespace-separated tokens, two occurrences each; labels are renumbered to
/// 0..n-1 in order of first occurrence.
inline ChordDiagram parse_diagram(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.size() % 2 != 0)
        throw ParseError("diagram has an odd number of tokens (" + std::to_string(tokens.size()) + ")");
    std::map<std::string, int> id;
    std::map<std::string, int> count;
    std::vector<int> word;
    word.reserve(tokens.size());
    for (const auto& tok : tokens) {
        auto it = id.find(tok);
        if (it == id.end()) it = id.emplace(tok, static_cast<int>(id.size())).first;
        if (++count[tok] > 2) throw ParseError("token '" + tok + "' appears more than twice");
        word.push_back(it->second);
    }
    for (const auto& [tok, c] : count)
        if (c != 2) throw ParseError("token '" + tok + "' appears " + std::to_string(c) + " times, expected 2");
    return ChordDiagram(std::move(word));
}

inline std::string format_diagram(const ChordDiagram& d) {
    std::ostringstream out;
    for (int p = 0; p < d.position_count(); ++p) {
        if (p > 0) out << ' ';
        out << d.chord_at(p);
    }
    return out.str();
}

}  // namespace chordpoly
