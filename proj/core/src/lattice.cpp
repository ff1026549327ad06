#include "ds3/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ds3 {

std::string_view boundary_name(Boundary b) {
    return b == Boundary::Open ? "open" : "periodic";
}

std::optional<Boundary> parse_boundary(std::string_view name) {
    if (name == "open") return Boundary::Open;
    if (name == "periodic") return Boundary::Periodic;
    return std::nullopt;
}

Lattice Lattice::grid(int rows, int cols, Boundary boundary) {
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("Lattice::grid: rows and cols must both be >= 2");
    }
    Lattice lat;
    lat.rows_ = rows;
    lat.cols_ = cols;
    lat.boundary_ = boundary;

    const bool per = boundary == Boundary::Periodic;
    const int hcols = per ? cols : cols - 1;
    const int vrows = per ? rows : rows - 1;

    lat.edges_.reserve(static_cast<std::size_t>(rows * hcols + vrows * cols));
    // Horizontal edges first, row-major.
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < hcols; ++c) {
            lat.edges_.push_back({lat.vertex_at(r, c), lat.vertex_at(r, (c + 1) % cols)});
        }
    }
    // Then vertical edges, row-major.
    for (int r = 0; r < vrows; ++r) {
        for (int c = 0; c < cols; ++c) {
            lat.edges_.push_back({lat.vertex_at(r, c), lat.vertex_at((r + 1) % rows, c)});
        }
    }

    lat.incident_.resize(static_cast<std::size_t>(lat.num_vertices()));
    for (EdgeId e = 0; e < lat.num_edges(); ++e) {
        lat.incident_[static_cast<std::size_t>(lat.edges_[static_cast<std::size_t>(e)].tail)].push_back({e, false});
        lat.incident_[static_cast<std::size_t>(lat.edges_[static_cast<std::size_t>(e)].head)].push_back({e, true});
    }
    for (auto& inc : lat.incident_) {
        std::sort(inc.begin(), inc.end(),
                  [](const IncidentEdge& a, const IncidentEdge& b) {
                      return a.edge != b.edge ? a.edge < b.edge : a.head < b.head;
                  });
    }
    return lat;
}

int Lattice::num_plaquettes() const {
    if (boundary_ == Boundary::Periodic) return rows_ * cols_;
    return (rows_ - 1) * (cols_ - 1);
}

VertexId Lattice::vertex_at(int row, int col) const { return row * cols_ + col; }

EdgeId Lattice::horizontal_edge(int row, int col) const {
    const int hcols = boundary_ == Boundary::Periodic ? cols_ : cols_ - 1;
    return row * hcols + col;
}

EdgeId Lattice::vertical_edge(int row, int col) const {
    const int hcols = boundary_ == Boundary::Periodic ? cols_ : cols_ - 1;
    return rows_ * hcols + row * cols_ + col;
}

VertexId Lattice::edge_tail(EdgeId e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e)].tail;
}

VertexId Lattice::edge_head(EdgeId e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e)].head;
}

const std::vector<IncidentEdge>& Lattice::incident_edges(VertexId v) const {
    check_vertex(v);
    return incident_[static_cast<std::size_t>(v)];
}

std::array<PathStep, 4> Lattice::plaquette_edges(PlaquetteId p) const {
    check_plaquette(p);
    const int pcols = boundary_ == Boundary::Periodic ? cols_ : cols_ - 1;
    const int r = p / pcols;
    const int c = p % pcols;
    return {PathStep{horizontal_edge(r, c), false},                       // bottom, rightward
            PathStep{vertical_edge(r, (c + 1) % cols_), false},           // right, upward
            PathStep{horizontal_edge((r + 1) % rows_, c), true},          // top, leftward
            PathStep{vertical_edge(r, c), true}};                         // left, downward
}

Path Lattice::path_between(VertexId v1, VertexId v2) const {
    check_vertex(v1);
    check_vertex(v2);
    if (v1 == v2) throw std::invalid_argument("path_between: endpoints must differ");

    Path path;
    path.start = v1;
    path.end = v2;
    int r = vertex_row(v1);
    int c = vertex_col(v1);
    const int r2 = vertex_row(v2);
    const int c2 = vertex_col(v2);
    path.steps.reserve(static_cast<std::size_t>(std::abs(r2 - r) + std::abs(c2 - c)));
    while (c != c2) {
        if (c2 > c) {
            path.steps.push_back({horizontal_edge(r, c), false});
            ++c;
        } else {
            path.steps.push_back({horizontal_edge(r, c - 1), true});
            --c;
        }
    }
    while (r != r2) {
        if (r2 > r) {
            path.steps.push_back({vertical_edge(r, c), false});
            ++r;
        } else {
            path.steps.push_back({vertical_edge(r - 1, c), true});
            --r;
        }
    }
    return path;
}

std::vector<VertexId> Lattice::path_vertices(const Path& path) const {
    std::vector<VertexId> verts;
    verts.reserve(path.steps.size() + 1);
    VertexId at = path.start;
    verts.push_back(at);
    for (const PathStep& s : path.steps) {
        check_edge(s.edge);
        const VertexId from = s.against ? edge_head(s.edge) : edge_tail(s.edge);
        const VertexId to = s.against ? edge_tail(s.edge) : edge_head(s.edge);
        if (from != at) throw std::invalid_argument("path_vertices: disconnected path");
        at = to;
        verts.push_back(at);
    }
    if (at != path.end) throw std::invalid_argument("path_vertices: path end mismatch");
    return verts;
}

void Lattice::check_vertex(VertexId v) const {
    if (v < 0 || v >= num_vertices()) throw std::out_of_range("vertex id out of range");
}

void Lattice::check_edge(EdgeId e) const {
    if (e < 0 || e >= num_edges()) throw std::out_of_range("edge id out of range");
}

void Lattice::check_plaquette(PlaquetteId p) const {
    if (p < 0 || p >= num_plaquettes()) throw std::out_of_range("plaquette id out of range");
}

}  // namespace ds3
