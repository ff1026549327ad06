#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ds3 {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using PlaquetteId = std::int32_t;

enum class Boundary { Open, Periodic };

std::string_view boundary_name(Boundary b);
std::optional<Boundary> parse_boundary(std::string_view name);

struct IncidentEdge {
    EdgeId edge;
    bool head;  // true if the edge orientation points into the vertex
};

struct PathStep {
    EdgeId edge;
    bool against;  // true if traversed against the edge orientation
};

// An ordered, simple walk along edges between two vertices.
struct Path {
    VertexId start = -1;
    VertexId end = -1;
    std::vector<PathStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
};

// Oriented square lattice of vertices rows x cols with one six-level spin per
// edge. Canonical orientation: horizontal edges point +col (right), vertical
// edges point +row (up). Plaquettes are the unit faces, indexed by their
// bottom-left vertex.
class Lattice {
public:
    static Lattice grid(int rows, int cols, Boundary boundary = Boundary::Open);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Boundary boundary() const { return boundary_; }

    int num_vertices() const { return rows_ * cols_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_plaquettes() const;

    VertexId vertex_at(int row, int col) const;
    int vertex_row(VertexId v) const { return v / cols_; }
    int vertex_col(VertexId v) const { return v % cols_; }

    EdgeId horizontal_edge(int row, int col) const;  // (row,col) -> (row,col+1)
    EdgeId vertical_edge(int row, int col) const;    // (row,col) -> (row+1,col)

    VertexId edge_tail(EdgeId e) const;
    VertexId edge_head(EdgeId e) const;

    // Incident edges of a vertex with head/tail attachment, sorted by edge id.
    const std::vector<IncidentEdge>& incident_edges(VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(incident_edges(v).size()); }

    // Boundary of a plaquette, counterclockwise from its bottom-left vertex:
    // bottom, right, top, left. Direction flags are relative to the canonical
    // edge orientation.
    std::array<PathStep, 4> plaquette_edges(PlaquetteId p) const;

    // L-shaped simple path, column moves first, then row moves. Length equals
    // the Manhattan distance. Throws if v1 == v2.
    Path path_between(VertexId v1, VertexId v2) const;

    // Ordered vertices visited by a path, endpoints included.
    std::vector<VertexId> path_vertices(const Path& path) const;

    void check_vertex(VertexId v) const;
    void check_edge(EdgeId e) const;
    void check_plaquette(PlaquetteId p) const;

private:
    Lattice() = default;

    struct EdgeRec {
        VertexId tail;
        VertexId head;
    };

    int rows_ = 0;
    int cols_ = 0;
    Boundary boundary_ = Boundary::Open;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<IncidentEdge>> incident_;
};

}  // namespace ds3
