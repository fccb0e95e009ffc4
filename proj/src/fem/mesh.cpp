#include "strudyn/fem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "strudyn/errors.hpp"

namespace strudyn {

double Mesh::measure(std::size_t e) const
{
    const auto& el = elements[e];
    if (dim == 1) return nodes[el[1]][0] - nodes[el[0]][0];
    const Point& a = nodes[el[0]];
    const Point& b = nodes[el[1]];
    const Point& c = nodes[el[2]];
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

double Mesh::diameter(std::size_t e) const
{
    const auto& el = elements[e];
    double d = 0.0;
    for (std::size_t i = 0; i < nodes_per_element(); ++i)
        for (std::size_t j = i + 1; j < nodes_per_element(); ++j)
            d = std::max(d, std::hypot(nodes[el[i]][0] - nodes[el[j]][0], nodes[el[i]][1] - nodes[el[j]][1]));
    return d;
}

Point Mesh::centroid(std::size_t e) const
{
    const auto& el = elements[e];
    Point c{0.0, 0.0};
    const std::size_t k = nodes_per_element();
    for (std::size_t i = 0; i < k; ++i) {
        c[0] += nodes[el[i]][0] / static_cast<double>(k);
        c[1] += nodes[el[i]][1] / static_cast<double>(k);
    }
    return c;
}

void Mesh::validate() const
{
    if (dim != 1 && dim != 2) throw DomainError("Mesh: dim must be 1 or 2");
    if (tags.size() != elements.size()) throw DimensionError("Mesh: one tag per element required");
    for (std::size_t e = 0; e < elements.size(); ++e) {
        for (std::size_t i = 0; i < nodes_per_element(); ++i)
            if (elements[e][i] >= nodes.size()) throw DomainError("Mesh: element index out of range");
        if (!(measure(e) > 1e-14)) throw DomainError("Mesh: degenerate or clockwise element " + std::to_string(e));
    }
    for (std::size_t b : boundary)
        if (b >= nodes.size()) throw DomainError("Mesh: boundary index out of range");
}

Mesh generate_interval_mesh(double length, std::size_t n_nodes, std::span<const double> breakpoints)
{
    if (n_nodes < 2) throw DomainError("generate_interval_mesh: need at least 2 nodes");
    if (!(length > 0.0)) throw DomainError("generate_interval_mesh: length must be positive");
    Mesh m;
    m.dim = 1;
    const double dx = length / static_cast<double>(n_nodes - 1);
    for (std::size_t i = 0; i < n_nodes; ++i)
        m.nodes.push_back({i + 1 == n_nodes ? length : dx * static_cast<double>(i), 0.0});
    for (std::size_t i = 0; i + 1 < n_nodes; ++i) {
        m.elements.push_back({i, i + 1, 0});
        const double mid = 0.5 * (m.nodes[i][0] + m.nodes[i + 1][0]);
        m.tags.push_back(static_cast<int>(std::count_if(breakpoints.begin(), breakpoints.end(),
                                                        [mid](double b) { return b <= mid; })));
    }
    m.boundary = {0, n_nodes - 1};
    return m;
}

namespace {

// Triangulates the tensor grid xs x ys with alternating diagonals.
Mesh tensor_triangulation(const std::vector<double>& xs, const std::vector<double>& ys,
                          DiagonalPattern pattern = DiagonalPattern::Alternating)
{
    Mesh m;
    m.dim = 2;
    const std::size_t nx = xs.size();
    const std::size_t ny = ys.size();
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) m.nodes.push_back({xs[i], ys[j]});
    auto id = [nx](std::size_t i, std::size_t j) { return j * nx + i; };
    for (std::size_t j = 0; j + 1 < ny; ++j)
        for (std::size_t i = 0; i + 1 < nx; ++i) {
            const std::size_t a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
            if (pattern == DiagonalPattern::Uniform || (i + j) % 2 == 0) {
                m.elements.push_back({a, b, c});
                m.elements.push_back({a, c, d});
            } else {
                m.elements.push_back({a, b, d});
                m.elements.push_back({b, c, d});
            }
        }
    m.tags.assign(m.elements.size(), 0);
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i)
            if (i == 0 || j == 0 || i + 1 == nx || j + 1 == ny) m.boundary.push_back(id(i, j));
    return m;
}

} // namespace

Mesh generate_square_mesh(double side, std::size_t n, DiagonalPattern pattern)
{
    if (n < 1) throw DomainError("generate_square_mesh: need at least one cell per side");
    if (!(side > 0.0)) throw DomainError("generate_square_mesh: side must be positive");
    std::vector<double> xs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) xs[i] = i == n ? side : side * static_cast<double>(i) / static_cast<double>(n);
    return tensor_triangulation(xs, xs, pattern);
}

std::size_t square_cells_for_diameter(double side, double h)
{
    if (!(h > 0.0) || !(side > 0.0)) throw DomainError("square_cells_for_diameter: sizes must be positive");
    return static_cast<std::size_t>(std::ceil(std::sqrt(2.0) * side / h - 1e-9));
}

std::size_t square_cells_for_side(double side, double h)
{
    if (!(h > 0.0) || !(side > 0.0)) throw DomainError("square_cells_for_side: sizes must be positive");
    return static_cast<std::size_t>(std::ceil(side / h - 1e-9));
}

namespace {

// Cell sizes growing from h_fine towards h_coarse until they cover `length`,
// rescaled to sum to it exactly.
std::vector<double> graded_sizes(double length, double h_fine, double h_coarse, double growth)
{
    std::vector<double> sizes;
    double covered = 0.0;
    double s = h_fine;
    while (covered < length) {
        s = std::min(s * growth, h_coarse);
        sizes.push_back(s);
        covered += s;
    }
    // Drop the last cell when that lands closer to the edge.
    if (sizes.size() > 1 && covered - length > 0.5 * sizes.back()) {
        covered -= sizes.back();
        sizes.pop_back();
    }
    for (double& v : sizes) v *= length / covered;
    return sizes;
}

} // namespace

std::vector<double> graded_axis(double side, double center, double fine_half_width, double h_fine, double h_coarse,
                                double growth)
{
    if (!(h_fine > 0.0) || h_fine > h_coarse) throw DomainError("graded_axis: need 0 < h_fine <= h_coarse");
    if (!(growth > 1.0)) throw DomainError("graded_axis: growth must exceed 1");
    const auto nf = static_cast<std::size_t>(std::ceil(fine_half_width / h_fine - 1e-9));
    const double lo = center - h_fine * static_cast<double>(nf);
    const double hi = center + h_fine * static_cast<double>(nf);
    if (!(lo > 0.0 && hi < side)) throw DomainError("graded_axis: refined zone does not fit in the domain");

    std::vector<double> left = graded_sizes(lo, h_fine, h_coarse, growth);
    std::vector<double> right = graded_sizes(side - hi, h_fine, h_coarse, growth);
    std::vector<double> xs;
    double x = 0.0;
    xs.push_back(0.0);
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        x += *it;
        xs.push_back(x);
    }
    xs.back() = lo;
    for (std::size_t k = 1; k <= 2 * nf; ++k) xs.push_back(lo + h_fine * static_cast<double>(k));
    xs.back() = hi;
    x = hi;
    for (double s : right) {
        x += s;
        xs.push_back(x);
    }
    xs.back() = side;
    return xs;
}

Mesh generate_inclusion_mesh(const InclusionMeshSpec& s)
{
    if (!(s.r_zone1 > 0.0 && s.r_zone1 < s.r_zone2 && s.r_zone2 < 0.5 * s.side))
        throw DomainError("generate_inclusion_mesh: need 0 < r_zone1 < r_zone2 < side/2");
    if (s.h_fine > s.h_coarse) throw DomainError("generate_inclusion_mesh: h_fine exceeds h_coarse");
    const double half = 2.0 * s.r_zone2;
    // Right triangles with legs a have diameter sqrt(2) a.
    const double fine = s.h_fine / std::sqrt(2.0);
    const double coarse = s.h_coarse / std::sqrt(2.0);
    const auto xs = graded_axis(s.side, s.center[0], half, fine, coarse, s.growth);
    const auto ys = graded_axis(s.side, s.center[1], half, fine, coarse, s.growth);
    Mesh m = tensor_triangulation(xs, ys);
    for (std::size_t e = 0; e < m.element_count(); ++e) {
        const Point c = m.centroid(e);
        const double r = std::hypot(c[0] - s.center[0], c[1] - s.center[1]);
        m.tags[e] = r < s.r_zone1 ? 1 : (r < s.r_zone2 ? 2 : 0);
    }
    return m;
}

MeshLocation locate(const Mesh& mesh, const Point& p)
{
    const double tol = 1e-10;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const auto& el = mesh.elements[e];
        if (mesh.dim == 1) {
            const double a = mesh.nodes[el[0]][0];
            const double b = mesh.nodes[el[1]][0];
            const double t = (p[0] - a) / (b - a);
            if (t >= -tol && t <= 1.0 + tol) return {e, {1.0 - t, t, 0.0}};
            continue;
        }
        const Point& a = mesh.nodes[el[0]];
        const Point& b = mesh.nodes[el[1]];
        const Point& c = mesh.nodes[el[2]];
        const double det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
        const double l1 = ((p[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (p[1] - a[1])) / det;
        const double l2 = ((b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1])) / det;
        const double l0 = 1.0 - l1 - l2;
        if (l0 >= -tol && l1 >= -tol && l2 >= -tol) return {e, {l0, l1, l2}};
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "point (%g, %g) lies outside the mesh", p[0], p[1]);
    throw DomainError(buf);
}

Vector probe(const Mesh& mesh, std::span<const double> field, const MeshLocation& loc, std::size_t components)
{
    if (components == 0 || field.size() != mesh.node_count() * components)
        throw DimensionError("probe: field size does not match the mesh");
    Vector out(components, 0.0);
    const auto& el = mesh.elements[loc.element];
    for (std::size_t i = 0; i < mesh.nodes_per_element(); ++i)
        for (std::size_t c = 0; c < components; ++c) out[c] += loc.weights[i] * field[el[i] * components + c];
    return out;
}

Vector probe(const Mesh& mesh, std::span<const double> field, const Point& p, std::size_t components)
{
    return probe(mesh, field, locate(mesh, p), components);
}

void write_mesh(std::ostream& os, const Mesh& mesh)
{
    char buf[128];
    os << mesh.dim << ' ' << mesh.node_count() << ' ' << mesh.element_count() << '\n';
    for (const Point& p : mesh.nodes) {
        if (mesh.dim == 1) std::snprintf(buf, sizeof buf, "%.17g\n", p[0]);
        else std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p[0], p[1]);
        os << buf;
    }
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const auto& el = mesh.elements[e];
        os << el[0] << ' ' << el[1];
        if (mesh.dim == 2) os << ' ' << el[2];
        os << ' ' << mesh.tags[e] << '\n';
    }
    os << mesh.boundary.size() << '\n';
    for (std::size_t b : mesh.boundary) os << b << '\n';
}

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& is) : is_(is) {}

    // Next non-blank line split into tokens.
    std::vector<std::string> next(const char* what)
    {
        std::string line;
        while (std::getline(is_, line)) {
            ++line_no_;
            std::istringstream ss(line);
            std::vector<std::string> tok;
            for (std::string t; ss >> t;) tok.push_back(t);
            if (!tok.empty()) return tok;
        }
        throw ParseError(line_no_ + 1, std::string("unexpected end of input, expected ") + what);
    }

    std::size_t line() const noexcept { return line_no_; }

    double to_double(const std::string& s) const
    {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size()) throw ParseError(line_no_, "invalid number '" + s + "'");
        return v;
    }

    long long to_int(const std::string& s) const
    {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != s.size()) throw ParseError(line_no_, "invalid integer '" + s + "'");
        return v;
    }

    std::size_t to_index(const std::string& s, std::size_t bound) const
    {
        const long long v = to_int(s);
        if (v < 0 || static_cast<unsigned long long>(v) >= bound)
            throw ParseError(line_no_, "index " + s + " out of range");
        return static_cast<std::size_t>(v);
    }

private:
    std::istream& is_;
    std::size_t line_no_ = 0;
};

} // namespace

Mesh read_mesh(std::istream& is)
{
    LineReader r(is);
    auto head = r.next("header");
    if (head.size() != 3) throw ParseError(r.line(), "header must be 'dim n_nodes n_elems'");
    Mesh m;
    const long long dim = r.to_int(head[0]);
    const long long nn = r.to_int(head[1]);
    const long long ne = r.to_int(head[2]);
    if (dim != 1 && dim != 2) throw ParseError(r.line(), "dim must be 1 or 2");
    if (nn < 0 || ne < 0) throw ParseError(r.line(), "negative count");
    m.dim = static_cast<int>(dim);
    const auto n_nodes = static_cast<std::size_t>(nn);
    for (std::size_t i = 0; i < n_nodes; ++i) {
        auto t = r.next("node coordinates");
        if (t.size() != static_cast<std::size_t>(dim)) throw ParseError(r.line(), "wrong number of coordinates");
        m.nodes.push_back({r.to_double(t[0]), dim == 2 ? r.to_double(t[1]) : 0.0});
    }
    const std::size_t k = m.nodes_per_element();
    for (long long e = 0; e < ne; ++e) {
        auto t = r.next("element");
        if (t.size() != k + 1) throw ParseError(r.line(), "wrong number of element fields");
        std::array<std::size_t, 3> el{0, 0, 0};
        for (std::size_t i = 0; i < k; ++i) el[i] = r.to_index(t[i], n_nodes);
        m.elements.push_back(el);
        m.tags.push_back(static_cast<int>(r.to_int(t[k])));
    }
    auto nb = r.next("boundary count");
    if (nb.size() != 1) throw ParseError(r.line(), "expected a single boundary count");
    const long long n_b = r.to_int(nb[0]);
    if (n_b < 0) throw ParseError(r.line(), "negative count");
    for (long long b = 0; b < n_b; ++b) {
        auto t = r.next("boundary index");
        if (t.size() != 1) throw ParseError(r.line(), "expected one boundary index per line");
        m.boundary.push_back(r.to_index(t[0], n_nodes));
    }
    return m;
}

std::string mesh_to_string(const Mesh& mesh)
{
    std::ostringstream os;
    write_mesh(os, mesh);
    return os.str();
}

Mesh mesh_from_string(const std::string& text)
{
    std::istringstream is(text);
    return read_mesh(is);
}

} // namespace strudyn
