#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fitzlab/ext_real.hpp"

namespace fitzlab {

/// One point of a paired space: (x, x*) with both components in R^n.
/// Also reused for dual-bidual pairs (x*, x**), which at finite dimension
/// live in the same kind of product.
struct PairPoint {
    std::vector<double> x;
    std::vector<double> xstar;

    PairPoint() = default;
    PairPoint(std::vector<double> x_, std::vector<double> xstar_);

    std::size_t dimension() const { return x.size(); }

    /// Flattened coordinates (x..., xstar...), length 2n.
    std::vector<double> flat() const;
    static PairPoint from_flat(std::span<const double> coords);

    friend PairPoint operator+(const PairPoint& a, const PairPoint& b);
    friend bool operator==(const PairPoint& a, const PairPoint& b);
};

double dot(std::span<const double> a, std::span<const double> b);

/// The duality product pi(x, x*) = <x, x*>.
double duality_product(const PairPoint& p);

// Which pairing a grid function lives over.
enum class SpaceTag { Primal, Dual };  // Primal = X x X*, Dual = X* x X**

std::string to_string(SpaceTag tag);
SpaceTag space_tag_from_string(const std::string& s);

struct AxisSpec {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t count = 2;
};

/// Regular grid over an axis-aligned box. Node order is row-major with
/// axis 0 slowest; both endpoints are grid nodes. Grid operations are
/// limited to 4 axes total (conjugation cost is exponential in axes).
class GridSpec {
  public:
    explicit GridSpec(std::vector<AxisSpec> axes);

    std::size_t axis_count() const { return axes_.size(); }
    const AxisSpec& axis(std::size_t a) const { return axes_[a]; }
    const std::vector<AxisSpec>& axes() const { return axes_; }

    std::size_t node_count() const { return node_count_; }

    double coordinate(std::size_t axis, std::size_t i) const;
    double spacing(std::size_t axis) const;
    /// Largest per-axis spacing; the "h" in grid tolerances.
    double max_spacing() const;

    std::vector<std::size_t> unflatten(std::size_t flat) const;
    std::size_t flatten(std::span<const std::size_t> multi) const;
    std::vector<double> node(std::size_t flat) const;

    bool contains(std::span<const double> p) const;
    bool is_boundary_node(std::size_t flat) const;

    friend bool operator==(const GridSpec& a, const GridSpec& b);

  private:
    std::vector<AxisSpec> axes_;
    std::size_t node_count_;
};

/// Extended-real values stored at every node of a GridSpec.
/// Invariant: at least one value is finite (proper function).
class GridFunction {
  public:
    GridFunction(GridSpec spec, std::vector<ExtReal> values, SpaceTag tag);

    const GridSpec& spec() const { return spec_; }
    SpaceTag tag() const { return tag_; }
    const std::vector<ExtReal>& values() const { return values_; }
    ExtReal value(std::size_t flat) const { return values_[flat]; }

  private:
    GridSpec spec_;
    std::vector<ExtReal> values_;
    SpaceTag tag_;
};

/// Evaluates f at every node, in node order. Deterministic; f returning
/// -inf or NaN raises ImproperValueError (via ExtReal), as does an f
/// with no finite value on the whole grid.
GridFunction sample_on_grid(const std::function<ExtReal(std::span<const double>)>& f,
                            const GridSpec& spec, SpaceTag tag);

/// Multilinear interpolation over the enclosing cell. If any vertex of
/// the cell is +inf the result is +inf. Queries outside the box throw
/// OutOfDomainError.
ExtReal interpolate(const GridFunction& g, std::span<const double> p);

// --- serialization ------------------------------------------------------
//
// Format: one JSON header line {axes, tag} followed by one line with the
// flat CSV value array in node order; +inf is the literal "inf".

void write_grid_function(const GridFunction& g, std::ostream& out);
GridFunction read_grid_function(std::istream& in);

/// Shortest round-trip decimal form of a double ("inf" for +infinity).
std::string format_double(double v);
double parse_double(const std::string& s);

}  // namespace fitzlab
