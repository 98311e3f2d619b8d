#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsg/permutation.hpp"

namespace nsg {

// Face i of a tetrahedron is the face opposite vertex i.
constexpr std::array<std::array<int, 3>, 4> kFaceVertices = {{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

// Edge indices 0..5 in the order 01, 02, 03, 12, 13, 23.
constexpr std::array<std::array<int, 2>, 6> kEdgeVertices = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int a, int b) {
    if (a > b) { int t = a; a = b; b = t; }
    constexpr int lut[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return lut[a][b];
}

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int ln, int col)
        : std::runtime_error("line " + std::to_string(ln) + ", column " + std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};

struct InvalidTriangulation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A face gluing: this face is identified with face perm[f] of tetrahedron
// tet, where the full vertex bijection perm maps the three face vertices
// across and the opposite vertex to the opposite vertex.
struct Gluing {
    int tet = -1;
    Perm4 perm;
    friend bool operator==(const Gluing&, const Gluing&) = default;
};

class Triangulation {
public:
    explicit Triangulation(int n = 0) : gluings_(static_cast<std::size_t>(n)) {}

    int size() const { return static_cast<int>(gluings_.size()); }

    const std::optional<Gluing>& gluing(int tet, int face) const {
        return gluings_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
    }

    bool is_boundary(int tet, int face) const { return !gluing(tet, face).has_value(); }

    bool closed() const {
        for (int t = 0; t < size(); ++t)
            for (int f = 0; f < 4; ++f)
                if (is_boundary(t, f)) return false;
        return true;
    }

    int boundary_face_count() const {
        int c = 0;
        for (int t = 0; t < size(); ++t)
            for (int f = 0; f < 4; ++f)
                if (is_boundary(t, f)) ++c;
        return c;
    }

    // Installs the pairing (tet, face) <-> (perm[face] of other) and its
    // inverse.  perm must map face onto the target face index.
    void glue(int tet, int face, int other, const Perm4& perm) {
        set_half(tet, face, other, perm);
        set_half(other, perm[face], tet, perm.inverse());
    }

    void set_half(int tet, int face, int other, const Perm4& perm) {
        gluings_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)] = Gluing{other, perm};
    }

    void clear_gluing(int tet, int face) {
        auto g = gluing(tet, face);
        if (g) {
            gluings_[static_cast<std::size_t>(g->tet)][static_cast<std::size_t>(g->perm[face])].reset();
            gluings_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)].reset();
        }
    }

    // Structural validity: gluings involutive, no face glued to itself.
    void validate() const {
        for (int t = 0; t < size(); ++t) {
            for (int f = 0; f < 4; ++f) {
                const auto& g = gluing(t, f);
                if (!g) continue;
                if (g->tet < 0 || g->tet >= size())
                    throw InvalidTriangulation("gluing of tetrahedron " + std::to_string(t) +
                                               " face " + std::to_string(f) + " targets a tetrahedron out of range");
                if (!g->perm.is_valid())
                    throw InvalidTriangulation("gluing of tetrahedron " + std::to_string(t) +
                                               " face " + std::to_string(f) + " is not a vertex bijection");
                int tf = g->perm[f];
                if (g->tet == t && tf == f)
                    throw InvalidTriangulation("face " + std::to_string(f) + " of tetrahedron " +
                                               std::to_string(t) + " is glued to itself");
                const auto& back = gluing(g->tet, tf);
                if (!back || back->tet != t || !(back->perm * g->perm).is_identity() || back->perm[tf] != f)
                    throw InvalidTriangulation("gluings of tetrahedron " + std::to_string(t) + " face " +
                                               std::to_string(f) + " and tetrahedron " + std::to_string(g->tet) +
                                               " face " + std::to_string(tf) + " are not mutually inverse");
            }
        }
    }

private:
    std::vector<std::array<std::optional<Gluing>, 4>> gluings_;
};

namespace detail {

// Face written as a vertex triple, e.g. "013"; returns the face index and the
// triple in written order.
inline int face_of_triple(const std::array<int, 3>& t) {
    int missing = 0 + 1 + 2 + 3 - t[0] - t[1] - t[2];
    return missing;
}

}  // namespace detail

// Text format:
//   tri <n>
//   <i>: <g012> <g013> <g023> <g123>
// where each entry is "bdy" or "j(abc)", meaning that face of tetrahedron i
// is glued to face (abc) of tetrahedron j, first written vertex to a, second
// to b, third to c, opposite vertex to opposite vertex.  '#' starts a
// comment.  Serialization is the exact inverse.
inline Triangulation parse_triangulation(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines;  // (line number, content without comment)
    {
        std::istringstream in(text);
        std::string raw;
        int ln = 0;
        while (std::getline(in, raw)) {
            ++ln;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            bool blank = true;
            for (char c : raw)
                if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
            if (!blank) lines.emplace_back(ln, raw);
        }
    }
    if (lines.empty()) throw ParseError("empty input, expected 'tri <n>'", 1, 1);

    auto& [hline, header] = lines.front();
    std::istringstream hs(header);
    std::string word;
    long n = -1;
    if (!(hs >> word) || word != "tri" || !(hs >> n) || n < 0 || (hs >> word))
        throw ParseError("expected header 'tri <n>'", hline, 1);

    Triangulation tri(static_cast<int>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);

    // Columns in file order are faces (012), (013), (023), (123): indices 3,2,1,0.
    constexpr std::array<int, 4> column_face = {3, 2, 1, 0};

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& [ln, content] = lines[li];
        std::size_t pos = 0;
        auto skip_ws = [&] { while (pos < content.size() && std::isspace(static_cast<unsigned char>(content[pos]))) ++pos; };
        auto col = [&] { return static_cast<int>(pos) + 1; };
        skip_ws();
        std::size_t start = pos;
        while (pos < content.size() && std::isdigit(static_cast<unsigned char>(content[pos]))) ++pos;
        if (pos == start) throw ParseError("expected tetrahedron index", ln, col());
        long row = std::stol(content.substr(start, pos - start));
        if (row < 0 || row >= n) throw ParseError("tetrahedron index " + std::to_string(row) + " out of range", ln, static_cast<int>(start) + 1);
        if (seen[static_cast<std::size_t>(row)]) throw ParseError("duplicate row for tetrahedron " + std::to_string(row), ln, static_cast<int>(start) + 1);
        seen[static_cast<std::size_t>(row)] = true;
        skip_ws();
        if (pos >= content.size() || content[pos] != ':') throw ParseError("expected ':'", ln, col());
        ++pos;

        for (int c = 0; c < 4; ++c) {
            skip_ws();
            if (pos >= content.size()) throw ParseError("expected gluing entry", ln, col());
            int entry_col = col();
            if (content.compare(pos, 3, "bdy") == 0 &&
                (pos + 3 == content.size() || !std::isalnum(static_cast<unsigned char>(content[pos + 3])))) {
                pos += 3;
                continue;
            }
            start = pos;
            while (pos < content.size() && std::isdigit(static_cast<unsigned char>(content[pos]))) ++pos;
            if (pos == start) throw ParseError("expected 'bdy' or '<j>(<abc>)'", ln, entry_col);
            long target = std::stol(content.substr(start, pos - start));
            if (target < 0 || target >= n) throw ParseError("target tetrahedron " + std::to_string(target) + " out of range", ln, entry_col);
            if (pos >= content.size() || content[pos] != '(') throw ParseError("expected '('", ln, col());
            ++pos;
            std::array<int, 3> img{};
            for (int k = 0; k < 3; ++k) {
                if (pos >= content.size() || content[pos] < '0' || content[pos] > '3')
                    throw ParseError("expected vertex digit 0-3", ln, col());
                img[static_cast<std::size_t>(k)] = content[pos] - '0';
                ++pos;
            }
            if (img[0] == img[1] || img[0] == img[2] || img[1] == img[2])
                throw ParseError("face vertices must be distinct", ln, entry_col);
            if (pos >= content.size() || content[pos] != ')') throw ParseError("expected ')'", ln, col());
            ++pos;

            int face = column_face[static_cast<std::size_t>(c)];
            const auto& src = kFaceVertices[static_cast<std::size_t>(face)];
            Perm4 perm;
            for (int k = 0; k < 3; ++k) perm.img[static_cast<std::size_t>(src[static_cast<std::size_t>(k)])] = static_cast<std::uint8_t>(img[static_cast<std::size_t>(k)]);
            perm.img[static_cast<std::size_t>(face)] = static_cast<std::uint8_t>(detail::face_of_triple(img));
            tri.set_half(static_cast<int>(row), face, static_cast<int>(target), perm);
        }
        skip_ws();
        if (pos != content.size()) throw ParseError("unexpected trailing text", ln, col());
    }

    for (int t = 0; t < tri.size(); ++t)
        if (!seen[static_cast<std::size_t>(t)])
            throw ParseError("missing row for tetrahedron " + std::to_string(t),
                             lines.empty() ? 1 : lines.back().first, 1);
    tri.validate();
    return tri;
}

inline std::string serialize_triangulation(const Triangulation& tri) {
    std::ostringstream out;
    out << "tri " << tri.size() << "\n";
    constexpr std::array<int, 4> column_face = {3, 2, 1, 0};
    for (int t = 0; t < tri.size(); ++t) {
        out << t << ":";
        for (int c = 0; c < 4; ++c) {
            int face = column_face[static_cast<std::size_t>(c)];
            const auto& g = tri.gluing(t, face);
            out << ' ';
            if (!g) {
                out << "bdy";
            } else {
                out << g->tet << '(';
                for (int v : kFaceVertices[static_cast<std::size_t>(face)]) out << g->perm[v];
                out << ')';
            }
        }
        out << "\n";
    }
    return out.str();
}

// Two copies with every boundary face glued to its twin by the identity
// bijection; the result is closed.
inline Triangulation double_triangulation(const Triangulation& tri) {
    if (tri.closed()) throw PreconditionError("doubling requires nonempty boundary");
    int n = tri.size();
    Triangulation d(2 * n);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (g) {
                d.set_half(t, f, g->tet, g->perm);
                d.set_half(t + n, f, g->tet + n, g->perm);
            } else {
                d.set_half(t, f, t + n, Perm4{});
                d.set_half(t + n, f, t, Perm4{});
            }
        }
    }
    d.validate();
    return d;
}

}  // namespace nsg
