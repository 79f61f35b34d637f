#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pmfp {

/// Default absolute tolerance for point equality. Used wherever two real
/// points are compared for coincidence (set membership at closed endpoints,
/// cycle detection, witness matching).
inline constexpr double kEqTol = 1e-9;

/// Window length used when sampling an interval that is unbounded above:
/// the grid covers [lo, lo + kUnboundedSpan].
inline constexpr double kUnboundedSpan = 4.0;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;
};

/// A finite union of real intervals plus isolated points.
///
/// Membership gives closed endpoints a `tol` slack outward; open endpoints
/// are exact strict comparisons, so a half-open boundary point is never a
/// member but points arbitrarily close inside are.
struct SetDescriptor {
    std::vector<Interval> intervals;
    std::vector<double> points;

    // Declared metadata, not computed: sequence-based closedness and
    // 0-compactness are not decidable from finite samples.
    bool declared_closed = false;
    bool declared_zero_compact = false;

    bool contains(double x, double tol = kEqTol) const;
    bool is_empty() const { return intervals.empty() && points.empty(); }

    static SetDescriptor closed(double lo, double hi);
    static SetDescriptor interval(double lo, double hi, bool lo_closed, bool hi_closed);
    static SetDescriptor point_set(std::vector<double> pts);

    SetDescriptor& add_interval(double lo, double hi, bool lo_closed = true,
                                bool hi_closed = true);
    SetDescriptor& add_point(double p);
    SetDescriptor& flag_closed(bool v = true);
    SetDescriptor& flag_zero_compact(bool v = true);
};

/// Deterministic grid: `density` equally spaced points per interval, always
/// including closed endpoints; half-open endpoints are pulled inward by
/// `tol` and excluded. Isolated points are appended. Result is sorted and
/// de-duplicated at `tol`. An empty set yields an empty list.
std::vector<double> sample(const SetDescriptor& set, std::size_t density,
                           double tol = kEqTol);

SetDescriptor set_union(const SetDescriptor& a, const SetDescriptor& b);
SetDescriptor set_intersect(const SetDescriptor& a, const SetDescriptor& b,
                            double tol = kEqTol);
SetDescriptor set_subtract(const SetDescriptor& a, const SetDescriptor& b,
                           double tol = kEqTol);

std::string to_string(const SetDescriptor& set);

/// Ordered family A_1..A_k with the convention A_{k+1} = A_1.
struct CyclicDecomposition {
    std::vector<SetDescriptor> sets;

    std::size_t size() const { return sets.size(); }
    const SetDescriptor& at_wrapped(std::size_t i) const {
        return sets[i % sets.size()];
    }
};

}  // namespace pmfp
