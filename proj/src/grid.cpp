#include "fitzlab/grid.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fitzlab {

PairPoint::PairPoint(std::vector<double> x_, std::vector<double> xstar_)
    : x(std::move(x_)), xstar(std::move(xstar_)) {
    if (x.empty() || x.size() != xstar.size())
        throw std::invalid_argument("PairPoint: components must share dimension n >= 1");
}

std::vector<double> PairPoint::flat() const {
    std::vector<double> out(x);
    out.insert(out.end(), xstar.begin(), xstar.end());
    return out;
}

PairPoint PairPoint::from_flat(std::span<const double> coords) {
    if (coords.size() < 2 || coords.size() % 2 != 0)
        throw std::invalid_argument("PairPoint::from_flat: need even coordinate count");
    const std::size_t n = coords.size() / 2;
    return PairPoint(std::vector<double>(coords.begin(), coords.begin() + n),
                     std::vector<double>(coords.begin() + n, coords.end()));
}

PairPoint operator+(const PairPoint& a, const PairPoint& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("PairPoint: dimension mismatch");
    PairPoint r = a;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        r.x[i] += b.x[i];
        r.xstar[i] += b.xstar[i];
    }
    return r;
}

bool operator==(const PairPoint& a, const PairPoint& b) {
    return a.x == b.x && a.xstar == b.xstar;
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double duality_product(const PairPoint& p) { return dot(p.x, p.xstar); }

std::string to_string(SpaceTag tag) { return tag == SpaceTag::Primal ? "PRIMAL" : "DUAL"; }

SpaceTag space_tag_from_string(const std::string& s) {
    if (s == "PRIMAL") return SpaceTag::Primal;
    if (s == "DUAL") return SpaceTag::Dual;
    throw std::invalid_argument("unknown space tag: " + s);
}

GridSpec::GridSpec(std::vector<AxisSpec> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw std::invalid_argument("GridSpec: needs at least one axis");
    if (axes_.size() > 4)
        throw std::invalid_argument("GridSpec: grid operations are limited to 4 axes");
    node_count_ = 1;
    for (const auto& a : axes_) {
        if (!(a.lo < a.hi)) throw std::invalid_argument("GridSpec: requires lo < hi on every axis");
        if (a.count < 2) throw std::invalid_argument("GridSpec: requires resolution >= 2");
        node_count_ *= a.count;
    }
}

double GridSpec::coordinate(std::size_t axis, std::size_t i) const {
    const AxisSpec& a = axes_[axis];
    // Affine spacing including both endpoints; single fixed expression so
    // node coordinates are bitwise reproducible.
    return a.lo + (a.hi - a.lo) * (static_cast<double>(i) / static_cast<double>(a.count - 1));
}

double GridSpec::spacing(std::size_t axis) const {
    const AxisSpec& a = axes_[axis];
    return (a.hi - a.lo) / static_cast<double>(a.count - 1);
}

double GridSpec::max_spacing() const {
    double h = 0.0;
    for (std::size_t a = 0; a < axes_.size(); ++a) h = std::max(h, spacing(a));
    return h;
}

std::vector<std::size_t> GridSpec::unflatten(std::size_t flat) const {
    std::vector<std::size_t> multi(axes_.size());
    for (std::size_t a = axes_.size(); a-- > 0;) {
        multi[a] = flat % axes_[a].count;
        flat /= axes_[a].count;
    }
    return multi;
}

std::size_t GridSpec::flatten(std::span<const std::size_t> multi) const {
    assert(multi.size() == axes_.size());
    std::size_t flat = 0;
    for (std::size_t a = 0; a < axes_.size(); ++a) flat = flat * axes_[a].count + multi[a];
    return flat;
}

std::vector<double> GridSpec::node(std::size_t flat) const {
    const auto multi = unflatten(flat);
    std::vector<double> p(axes_.size());
    for (std::size_t a = 0; a < axes_.size(); ++a) p[a] = coordinate(a, multi[a]);
    return p;
}

bool GridSpec::contains(std::span<const double> p) const {
    if (p.size() != axes_.size()) return false;
    for (std::size_t a = 0; a < axes_.size(); ++a)
        if (p[a] < axes_[a].lo || p[a] > axes_[a].hi) return false;
    return true;
}

bool GridSpec::is_boundary_node(std::size_t flat) const {
    const auto multi = unflatten(flat);
    for (std::size_t a = 0; a < axes_.size(); ++a)
        if (multi[a] == 0 || multi[a] + 1 == axes_[a].count) return true;
    return false;
}

bool operator==(const GridSpec& a, const GridSpec& b) {
    if (a.axes_.size() != b.axes_.size()) return false;
    for (std::size_t i = 0; i < a.axes_.size(); ++i) {
        if (a.axes_[i].lo != b.axes_[i].lo || a.axes_[i].hi != b.axes_[i].hi ||
            a.axes_[i].count != b.axes_[i].count)
            return false;
    }
    return true;
}

GridFunction::GridFunction(GridSpec spec, std::vector<ExtReal> values, SpaceTag tag)
    : spec_(std::move(spec)), values_(std::move(values)), tag_(tag) {
    if (values_.size() != spec_.node_count())
        throw std::invalid_argument("GridFunction: value count does not match grid");
    bool any_finite = false;
    for (const auto& v : values_)
        if (v.is_finite()) {
            any_finite = true;
            break;
        }
    if (!any_finite) throw ImproperValueError("GridFunction: no finite value (improper)");
}

GridFunction sample_on_grid(const std::function<ExtReal(std::span<const double>)>& f,
                            const GridSpec& spec, SpaceTag tag) {
    std::vector<ExtReal> values;
    values.reserve(spec.node_count());
    std::vector<double> p(spec.axis_count());
    for (std::size_t flat = 0; flat < spec.node_count(); ++flat) {
        const auto multi = spec.unflatten(flat);
        for (std::size_t a = 0; a < spec.axis_count(); ++a) p[a] = spec.coordinate(a, multi[a]);
        values.push_back(f(p));  // ExtReal rejects NaN / -inf
    }
    return GridFunction(spec, std::move(values), tag);
}

ExtReal interpolate(const GridFunction& g, std::span<const double> p) {
    const GridSpec& spec = g.spec();
    if (p.size() != spec.axis_count())
        throw std::invalid_argument("interpolate: coordinate count mismatch");
    if (!spec.contains(p)) throw OutOfDomainError("interpolate: query outside grid box");

    const std::size_t d = spec.axis_count();
    std::vector<std::size_t> base(d);
    std::vector<double> frac(d);
    for (std::size_t a = 0; a < d; ++a) {
        const AxisSpec& ax = spec.axis(a);
        const double t = (p[a] - ax.lo) / (ax.hi - ax.lo) * static_cast<double>(ax.count - 1);
        std::size_t i = static_cast<std::size_t>(std::floor(t));
        if (i >= ax.count - 1) i = ax.count - 2;  // clamp: p == hi lands in last cell
        base[a] = i;
        frac[a] = t - static_cast<double>(i);
    }

    // Accumulate over the 2^d cell vertices; an infinite vertex poisons the
    // whole cell.
    double acc = 0.0;
    std::vector<std::size_t> corner(d);
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        double w = 1.0;
        for (std::size_t a = 0; a < d; ++a) {
            const bool hi = (mask >> a) & 1u;
            corner[a] = base[a] + (hi ? 1 : 0);
            w *= hi ? frac[a] : (1.0 - frac[a]);
        }
        const ExtReal v = g.value(spec.flatten(corner));
        if (v.is_inf()) return ExtReal::infinity();
        acc += w * v.finite();
    }
    return ExtReal(acc);
}

std::string format_double(double v) {
    if (v == std::numeric_limits<double>::infinity()) return "inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("parse_double: bad token '" + s + "'");
    return v;
}

void write_grid_function(const GridFunction& g, std::ostream& out) {
    out << "{\"axes\":[";
    for (std::size_t a = 0; a < g.spec().axis_count(); ++a) {
        const auto& ax = g.spec().axis(a);
        if (a) out << ',';
        out << "{\"lo\":" << format_double(ax.lo) << ",\"hi\":" << format_double(ax.hi)
            << ",\"count\":" << ax.count << '}';
    }
    out << "],\"tag\":\"" << to_string(g.tag()) << "\"}\n";
    for (std::size_t i = 0; i < g.values().size(); ++i) {
        if (i) out << ',';
        out << format_double(g.values()[i].raw());
    }
    out << '\n';
}

namespace {

// Minimal scanner for the fixed header shape written above. Kept local so
// the core library does not need a JSON dependency.
struct HeaderScanner {
    const std::string& s;
    std::size_t i = 0;

    void expect(const std::string& lit) {
        if (s.compare(i, lit.size(), lit) != 0)
            throw std::invalid_argument("grid header: expected '" + lit + "' at offset " +
                                        std::to_string(i));
        i += lit.size();
    }
    bool peek(char c) const { return i < s.size() && s[i] == c; }
    std::string until(char stop) {
        std::size_t j = s.find(stop, i);
        if (j == std::string::npos) throw std::invalid_argument("grid header: truncated");
        std::string tok = s.substr(i, j - i);
        i = j;
        return tok;
    }
};

}  // namespace

GridFunction read_grid_function(std::istream& in) {
    std::string header;
    std::string body;
    if (!std::getline(in, header) || !std::getline(in, body))
        throw std::invalid_argument("grid function stream: missing header or value line");

    HeaderScanner sc{header};
    sc.expect("{\"axes\":[");
    std::vector<AxisSpec> axes;
    while (!sc.peek(']')) {
        sc.expect("{\"lo\":");
        AxisSpec ax;
        ax.lo = parse_double(sc.until(','));
        sc.expect(",\"hi\":");
        ax.hi = parse_double(sc.until(','));
        sc.expect(",\"count\":");
        ax.count = static_cast<std::size_t>(std::stoull(sc.until('}')));
        sc.expect("}");
        axes.push_back(ax);
        if (sc.peek(',')) sc.expect(",");
    }
    sc.expect("],\"tag\":\"");
    const SpaceTag tag = space_tag_from_string(sc.until('"'));

    GridSpec spec(std::move(axes));
    std::vector<ExtReal> values;
    values.reserve(spec.node_count());
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(ExtReal(parse_double(tok)));
    return GridFunction(std::move(spec), std::move(values), tag);
}

}  // namespace fitzlab
