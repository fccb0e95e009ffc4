#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "strudyn/linalg/vector_ops.hpp"

namespace strudyn {

using Point = std::array<double, 2>;

/// Interval (dim 1) or triangle (dim 2) mesh. In 1D the y coordinate is 0
/// and the third element index is unused.
struct Mesh {
    int dim = 2;
    std::vector<Point> nodes;
    std::vector<std::array<std::size_t, 3>> elements;
    std::vector<int> tags;
    std::vector<std::size_t> boundary;

    std::size_t node_count() const noexcept { return nodes.size(); }
    std::size_t element_count() const noexcept { return elements.size(); }
    std::size_t nodes_per_element() const noexcept { return static_cast<std::size_t>(dim) + 1; }

    /// Signed area of a triangle (positive for counter-clockwise order) or
    /// length of an interval.
    double measure(std::size_t e) const;
    double diameter(std::size_t e) const;
    Point centroid(std::size_t e) const;

    /// Index ranges, positive measures, one tag per element.
    void validate() const;
};

/// Uniform nodes on [0, L]. Element tags count the breakpoints at or below
/// the element midpoint, so breakpoints {0.5, 10} give tags 0, 1, 2.
/// Both end nodes are marked as boundary.
Mesh generate_interval_mesh(double length, std::size_t n_nodes, std::span<const double> breakpoints = {});

enum class DiagonalPattern {
    /// Every cell cut along the same (lower-left to upper-right) diagonal.
    Uniform,
    /// Diagonal direction alternates between neighbouring cells.
    Alternating,
};

/// (n+1)^2 nodes and 2 n^2 triangles on [0, side]^2. All edge nodes are
/// boundary nodes.
Mesh generate_square_mesh(double side, std::size_t n, DiagonalPattern pattern = DiagonalPattern::Uniform);

/// Cells per side such that the element diameter sqrt(2) side / n <= h.
std::size_t square_cells_for_diameter(double side, double h);

/// Cells per side such that the cell side side / n <= h.
std::size_t square_cells_for_side(double side, double h);

struct InclusionMeshSpec {
    double side = 3.0;
    Point center{1.65, 1.65};
    double r_zone2 = 0.1;
    double r_zone1 = 0.03;
    double h_fine = 0.024;
    double h_coarse = 0.22;
    /// Growth factor of consecutive cell sizes between the fine and coarse parts.
    double growth = 1.25;
};

/// Tensor-product graded triangulation of [0, side]^2 with a node at the
/// center. h_fine and h_coarse are element diameters, so square cells have
/// side h / sqrt(2). Fine cells cover at least 2 r_zone2 around the center
/// in both directions; sizes then grow geometrically up to the coarse size and the
/// graded part on each side is rescaled to end on the domain edge. Element
/// tags by centroid radius: 1 inside r_zone1, 2 inside r_zone2, 0 outside.
Mesh generate_inclusion_mesh(const InclusionMeshSpec& spec);

/// Graded 1D breakpoints on [0, side] used by generate_inclusion_mesh.
std::vector<double> graded_axis(double side, double center, double fine_half_width, double h_fine,
                                double h_coarse, double growth);

/// Containing element and barycentric weights of a point.
struct MeshLocation {
    std::size_t element = 0;
    std::array<double, 3> weights{};
};

/// Throws DomainError when the point lies outside the mesh (tolerance 1e-10
/// on the barycentric coordinates).
MeshLocation locate(const Mesh& mesh, const Point& p);

/// P1 interpolation of a nodal field with `components` values per node
/// (interleaved); returns one value per component.
Vector probe(const Mesh& mesh, std::span<const double> field, const Point& p, std::size_t components = 1);
Vector probe(const Mesh& mesh, std::span<const double> field, const MeshLocation& loc, std::size_t components = 1);

/// Line-oriented text format: `dim n_nodes n_elems`, node coordinates,
/// `i j [k] tag` per element, then `n_boundary` and the boundary indices.
void write_mesh(std::ostream& os, const Mesh& mesh);
Mesh read_mesh(std::istream& is);
std::string mesh_to_string(const Mesh& mesh);
Mesh mesh_from_string(const std::string& text);

} // namespace strudyn
