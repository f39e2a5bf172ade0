#pragma once

#include <algorithm>
#include <array>
#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fintop/coloring.hpp"
#include "fintop/models.hpp"

namespace fintop {

/// Gaussian elimination over F2 on bitset rows.
class F2Matrix {
public:
    F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, boost::dynamic_bitset<>(cols)) {}

    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r][c] = v; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }

    std::size_t rank() const {
        auto rows = rows_;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows.size(); ++c) {
            std::size_t pivot = r;
            while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[r], rows[pivot]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != r && rows[i][c]) rows[i] ^= rows[r];
            ++r;
        }
        return r;
    }

    /// Solves (this)^T-free system: rows are equations over col variables;
    /// returns a solution of A x = b or nullopt.
    std::optional<boost::dynamic_bitset<>> solve(const boost::dynamic_bitset<>& b) const {
        auto rows = rows_;
        std::vector<char> rhs(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) rhs[i] = b[i];
        std::vector<long> pivot_col(rows.size(), -1);
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows.size(); ++c) {
            std::size_t pivot = r;
            while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[r], rows[pivot]);
            std::swap(rhs[r], rhs[pivot]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != r && rows[i][c]) {
                    rows[i] ^= rows[r];
                    rhs[i] ^= rhs[r];
                }
            pivot_col[r] = static_cast<long>(c);
            ++r;
        }
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rhs[i]) return std::nullopt;
        boost::dynamic_bitset<> x(cols_);
        for (std::size_t i = 0; i < r; ++i)
            if (rhs[i]) x[pivot_col[i]] = true;
        return x;
    }

private:
    std::size_t cols_;
    std::vector<boost::dynamic_bitset<>> rows_;
};

enum class BoardKind { Rectangle, Cylinder, Torus };

/// A board of squares together with its poset model. The grid and the
/// Hasse diagram are the same object: board vertices are poset elements,
/// board edges are covers, and the identification is kept explicitly in
/// `squares` and `vertex_edges`.
class Board {
public:
    BoardKind kind;
    int n = 0, m = 0;
    Poset poset;
    std::vector<std::array<int, 4>> squares;      // 4 cover indices each
    std::vector<std::vector<int>> vertex_edges;   // element -> incident covers

    static Board make(BoardKind kind, int n, int m) {
        if (n < 1 || m < 1) throw DimensionTooSmall("board dimensions must be >= 1");
        if ((kind == BoardKind::Cylinder || kind == BoardKind::Torus) && n < 4)
            throw DimensionTooSmall("cyclic direction needs n >= 4");
        if (kind == BoardKind::Torus && m < 4)
            throw DimensionTooSmall("cyclic direction needs m >= 4");
        Board b;
        b.kind = kind;
        b.n = n;
        b.m = m;
        const bool cyc1 = kind != BoardKind::Rectangle;
        const bool cyc2 = kind == BoardKind::Torus;
        Poset f1 = cyc1 ? models::cycle_poset(n) : models::fence(n);
        Poset f2 = cyc2 ? models::cycle_poset(m) : models::fence(m);
        b.poset = product(f1, f2);
        const int rows = static_cast<int>(f1.size());
        const int cols = static_cast<int>(f2.size());
        auto vid = [&](int i, int j) { return (i % rows) * cols + (j % cols); };
        auto eid = [&](int va, int vb) {
            int e = b.poset.edge_index(va, vb);
            if (e < 0) e = b.poset.edge_index(vb, va);
            if (e < 0) throw InvalidArgument("internal: missing grid edge");
            return e;
        };
        for (int i = 0; i < (cyc1 ? n : n); ++i)
            for (int j = 0; j < (cyc2 ? m : m); ++j) {
                std::array<int, 4> sq{
                    eid(vid(i, j), vid(i + 1, j)),      // side along the first factor
                    eid(vid(i, j + 1), vid(i + 1, j + 1)),
                    eid(vid(i, j), vid(i, j + 1)),      // side along the second factor
                    eid(vid(i + 1, j), vid(i + 1, j + 1))};
                b.squares.push_back(sq);
            }
        b.vertex_edges.resize(b.poset.size());
        for (std::size_t e = 0; e < b.poset.covers().size(); ++e) {
            auto [lo, hi] = b.poset.covers()[e];
            b.vertex_edges[lo].push_back(static_cast<int>(e));
            b.vertex_edges[hi].push_back(static_cast<int>(e));
        }
        return b;
    }

    std::size_t edge_count() const { return poset.covers().size(); }

    /// Grid coordinates: i along the first factor, j along the second,
    /// cyclic indices reduced.
    int vertex_id(int i, int j) const {
        const int rows = kind == BoardKind::Rectangle ? n + 1 : n;
        const int cols = kind == BoardKind::Torus ? m : m + 1;
        return ((i % rows + rows) % rows) * cols + ((j % cols + cols) % cols);
    }
    int factor1_edge(int i, int j) const {
        int e = poset.edge_index(vertex_id(i, j), vertex_id(i + 1, j));
        if (e < 0) e = poset.edge_index(vertex_id(i + 1, j), vertex_id(i, j));
        return e;
    }
    int factor2_edge(int i, int j) const {
        int e = poset.edge_index(vertex_id(i, j), vertex_id(i, j + 1));
        if (e < 0) e = poset.edge_index(vertex_id(i, j + 1), vertex_id(i, j));
        return e;
    }
};

/// Edge two-coloring in canonical (cover) order; false = blue, true = red.
struct BoardColoring {
    boost::dynamic_bitset<> red;

    static BoardColoring all_blue(const Board& b) {
        BoardColoring c;
        c.red.resize(b.edge_count());
        return c;
    }
};

/// Valid when every square has an even number of red edges, equivalently
/// 0, 2 or 4 blue edges.
inline bool is_valid(const Board& b, const BoardColoring& c) {
    for (const auto& sq : b.squares) {
        int reds = 0;
        for (int e : sq) reds += c.red[e] ? 1 : 0;
        if (reds % 2 != 0) return false;
    }
    return true;
}

/// Flip the colors of every edge incident to the vertex.
inline BoardColoring apply_move(const Board& b, BoardColoring c, int vertex) {
    for (int e : b.vertex_edges.at(vertex)) c.red.flip(e);
    return c;
}

/// The induced Z2 poset coloring (red = the nontrivial element).
inline Coloring to_poset_coloring(const Board& b, const BoardColoring& c) {
    Group z2 = Group::finite(FiniteGroup::cyclic(2));
    std::vector<GroupElement> colors;
    for (std::size_t e = 0; e < b.edge_count(); ++e) colors.push_back(c.red[e] ? 1 : 0);
    return Coloring(b.poset, z2, std::move(colors));
}

namespace detail {

inline F2Matrix coboundary_matrix(const Board& b) {
    F2Matrix m(b.edge_count(), b.poset.size());
    for (std::size_t v = 0; v < b.poset.size(); ++v)
        for (int e : b.vertex_edges[v]) m.set(e, v);
    return m;
}

inline F2Matrix validity_matrix(const Board& b) {
    F2Matrix m(b.squares.size(), b.edge_count());
    for (std::size_t s = 0; s < b.squares.size(); ++s)
        for (int e : b.squares[s]) m.set(s, e);
    return m;
}

}  // namespace detail

struct MoveReport {
    bool equivalent = false;
    std::vector<int> vertices;  // a witness move set when equivalent
};

/// Complete decision of move-equivalence: solve the F2 system
/// (coboundary) * x = c1 + c2 over the vertices.
inline MoveReport moves_equivalent(const Board& b, const BoardColoring& c1,
                                   const BoardColoring& c2) {
    boost::dynamic_bitset<> diff = c1.red ^ c2.red;
    F2Matrix m(b.edge_count(), b.poset.size());
    for (std::size_t v = 0; v < b.poset.size(); ++v)
        for (int e : b.vertex_edges[v]) m.set(e, v);
    MoveReport rep;
    auto sol = m.solve(diff);
    if (!sol) return rep;
    rep.equivalent = true;
    for (std::size_t v = 0; v < b.poset.size(); ++v)
        if ((*sol)[v]) rep.vertices.push_back(static_cast<int>(v));
    return rep;
}

/// Number of move-equivalence classes of valid colorings:
/// 2^(dim cocycles - dim coboundaries), by F2 rank arithmetic.
inline Int count_classes(const Board& b) {
    std::size_t dim_z = b.edge_count() - detail::validity_matrix(b).rank();
    std::size_t dim_b = detail::coboundary_matrix(b).rank();
    Int classes = 1;
    for (std::size_t i = 0; i < dim_z - dim_b; ++i) classes *= 2;
    return classes;
}

}  // namespace fintop
