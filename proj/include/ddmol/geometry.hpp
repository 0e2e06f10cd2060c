#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ddmol {

enum class Layout {
    Perpendicular, // dots of a molecule stacked across the scaling line
    InLine,        // all dots on one line
};

std::string to_string(Layout layout);
Layout layout_from_string(const std::string& s);

/// Molecule arrangement and the nearest-neighbour coupling graph.
///
/// Molecules are indexed row-major. On a grid, molecules sharing an edge
/// are always adjacent; `diagonal` adds the corner neighbours.
class Topology {
public:
    enum class Kind { Line, Grid };

    static Topology line(std::size_t n);
    static Topology grid(std::size_t rows, std::size_t cols, bool diagonal = true);

    Kind kind() const { return kind_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool diagonal() const { return diagonal_; }
    std::size_t size() const { return rows_ * cols_; }

    bool contains(std::size_t i) const { return i < size(); }
    bool adjacent(std::size_t i, std::size_t j) const;
    std::vector<std::size_t> neighbors(std::size_t i) const;

    std::size_t row_of(std::size_t i) const { return i / cols_; }
    std::size_t col_of(std::size_t i) const { return i % cols_; }

    bool operator==(const Topology&) const = default;

private:
    Topology(Kind kind, std::size_t rows, std::size_t cols, bool diagonal)
        : kind_(kind), rows_(rows), cols_(cols), diagonal_(diagonal) {}

    Kind kind_ = Kind::Line;
    std::size_t rows_ = 1;
    std::size_t cols_ = 0;
    bool diagonal_ = true;
};

struct LayoutGeometry {
    double intra_dot_distance = 20.0;       // a [nm]
    double inter_molecule_distance = 200.0; // b [nm]
    Layout layout = Layout::Perpendicular;
    Topology topology = Topology::line(2);
    double relative_permittivity = 12.9;
    // In-line layout only: extra gap added to b between facing dots.
    double inline_gap_offset = 0.0;

    /// Throws PhysicsError on invalid geometry; returns soft warnings
    /// (b < 10 a weakens the nearest-neighbour truncation).
    std::vector<std::string> validate() const;

    /// e^2 / (4 pi eps0 eps_r) [µeV nm].
    double coulomb_scale() const;
};

} // namespace ddmol
