#include "pmfp/set_descriptor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pmfp/errors.hpp"

namespace pmfp {

namespace {

bool interval_contains(const Interval& iv, double x, double tol) {
    const bool lo_ok = iv.lo_closed ? x >= iv.lo - tol : x > iv.lo;
    const bool hi_ok = iv.hi_closed ? x <= iv.hi + tol : x < iv.hi;
    return lo_ok && hi_ok;
}

bool interval_nonempty(const Interval& iv) {
    if (iv.lo < iv.hi) return true;
    return iv.lo == iv.hi && iv.lo_closed && iv.hi_closed;
}

}  // namespace

bool SetDescriptor::contains(double x, double tol) const {
    for (const auto& iv : intervals) {
        if (interval_contains(iv, x, tol)) return true;
    }
    for (double p : points) {
        if (std::fabs(x - p) <= tol) return true;
    }
    return false;
}

SetDescriptor SetDescriptor::closed(double lo, double hi) {
    return interval(lo, hi, true, true);
}

SetDescriptor SetDescriptor::interval(double lo, double hi, bool lo_closed,
                                      bool hi_closed) {
    if (lo > hi) throw ArgumentError("interval endpoints out of order");
    SetDescriptor s;
    s.intervals.push_back({lo, hi, lo_closed, hi_closed});
    return s;
}

SetDescriptor SetDescriptor::point_set(std::vector<double> pts) {
    SetDescriptor s;
    s.points = std::move(pts);
    return s;
}

SetDescriptor& SetDescriptor::add_interval(double lo, double hi, bool lo_closed,
                                           bool hi_closed) {
    if (lo > hi) throw ArgumentError("interval endpoints out of order");
    intervals.push_back({lo, hi, lo_closed, hi_closed});
    return *this;
}

SetDescriptor& SetDescriptor::add_point(double p) {
    points.push_back(p);
    return *this;
}

SetDescriptor& SetDescriptor::flag_closed(bool v) {
    declared_closed = v;
    return *this;
}

SetDescriptor& SetDescriptor::flag_zero_compact(bool v) {
    declared_zero_compact = v;
    return *this;
}

std::vector<double> sample(const SetDescriptor& set, std::size_t density, double tol) {
    if (density < 1) throw ArgumentError("sample density must be >= 1");
    std::vector<double> pts;
    for (const auto& iv : set.intervals) {
        if (!interval_nonempty(iv)) continue;
        double lo = iv.lo;
        double hi = iv.hi;
        if (std::isinf(hi)) hi = (std::isinf(lo) ? 0.0 : lo) + kUnboundedSpan;
        if (std::isinf(lo)) lo = hi - kUnboundedSpan;
        // Half-open endpoints are approached to within tol but excluded.
        const double lo_eff = iv.lo_closed ? lo : lo + tol;
        const double hi_eff = iv.hi_closed ? hi : hi - tol;
        if (lo_eff > hi_eff) continue;
        if (density == 1 || lo_eff == hi_eff) {
            pts.push_back(lo_eff);
            continue;
        }
        const double step = (hi_eff - lo_eff) / static_cast<double>(density - 1);
        for (std::size_t i = 0; i + 1 < density; ++i) {
            pts.push_back(lo_eff + static_cast<double>(i) * step);
        }
        pts.push_back(hi_eff);  // exact closed endpoint
    }
    pts.insert(pts.end(), set.points.begin(), set.points.end());
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    out.reserve(pts.size());
    for (double p : pts) {
        if (out.empty() || p - out.back() > tol) out.push_back(p);
    }
    return out;
}

SetDescriptor set_union(const SetDescriptor& a, const SetDescriptor& b) {
    SetDescriptor u = a;
    u.intervals.insert(u.intervals.end(), b.intervals.begin(), b.intervals.end());
    u.points.insert(u.points.end(), b.points.begin(), b.points.end());
    u.declared_closed = a.declared_closed && b.declared_closed;
    u.declared_zero_compact = false;
    return u;
}

SetDescriptor set_intersect(const SetDescriptor& a, const SetDescriptor& b,
                            double tol) {
    SetDescriptor out;
    for (const auto& ia : a.intervals) {
        for (const auto& ib : b.intervals) {
            Interval r;
            if (ia.lo > ib.lo) {
                r.lo = ia.lo;
                r.lo_closed = ia.lo_closed;
            } else if (ib.lo > ia.lo) {
                r.lo = ib.lo;
                r.lo_closed = ib.lo_closed;
            } else {
                r.lo = ia.lo;
                r.lo_closed = ia.lo_closed && ib.lo_closed;
            }
            if (ia.hi < ib.hi) {
                r.hi = ia.hi;
                r.hi_closed = ia.hi_closed;
            } else if (ib.hi < ia.hi) {
                r.hi = ib.hi;
                r.hi_closed = ib.hi_closed;
            } else {
                r.hi = ia.hi;
                r.hi_closed = ia.hi_closed && ib.hi_closed;
            }
            if (interval_nonempty(r)) {
                if (r.lo == r.hi) {
                    out.points.push_back(r.lo);
                } else {
                    out.intervals.push_back(r);
                }
            }
        }
    }
    // Isolated points of either operand that land in the other set.
    for (double p : a.points) {
        if (b.contains(p, tol)) out.points.push_back(p);
    }
    for (double p : b.points) {
        if (a.contains(p, tol) && !out.contains(p, tol)) out.points.push_back(p);
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()),
                     out.points.end());
    return out;
}

namespace {

// Removes one interval from one interval, yielding 0..2 remainders.
void interval_minus(const Interval& a, const Interval& s, std::vector<Interval>& out) {
    // No overlap.
    if (s.hi < a.lo || (s.hi == a.lo && !(s.hi_closed && a.lo_closed)) ||
        s.lo > a.hi || (s.lo == a.hi && !(s.lo_closed && a.hi_closed))) {
        out.push_back(a);
        return;
    }
    // Left remainder: a.lo .. s.lo
    if (a.lo < s.lo || (a.lo == s.lo && a.lo_closed && !s.lo_closed)) {
        out.push_back({a.lo, s.lo, a.lo_closed, !s.lo_closed});
    }
    // Right remainder: s.hi .. a.hi
    if (s.hi < a.hi || (s.hi == a.hi && a.hi_closed && !s.hi_closed)) {
        out.push_back({s.hi, a.hi, !s.hi_closed, a.hi_closed});
    }
}

}  // namespace

SetDescriptor set_subtract(const SetDescriptor& a, const SetDescriptor& b, double tol) {
    std::vector<Interval> work = a.intervals;
    for (const auto& s : b.intervals) {
        std::vector<Interval> next;
        for (const auto& iv : work) interval_minus(iv, s, next);
        work = std::move(next);
    }
    // Removing an isolated point splits any interval that contains it.
    for (double p : b.points) {
        std::vector<Interval> next;
        for (const auto& iv : work) {
            interval_minus(iv, {p, p, true, true}, next);
        }
        work = std::move(next);
    }
    SetDescriptor out;
    for (const auto& iv : work) {
        if (!interval_nonempty(iv)) continue;
        if (iv.lo == iv.hi) {
            out.points.push_back(iv.lo);
        } else {
            out.intervals.push_back(iv);
        }
    }
    for (double p : a.points) {
        if (!b.contains(p, tol)) out.points.push_back(p);
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()),
                     out.points.end());
    return out;
}

std::string to_string(const SetDescriptor& set) {
    std::ostringstream os;
    bool first = true;
    for (const auto& iv : set.intervals) {
        if (!first) os << " u ";
        first = false;
        os << (iv.lo_closed ? '[' : '(') << iv.lo << ',' << iv.hi
           << (iv.hi_closed ? ']' : ')');
    }
    for (double p : set.points) {
        if (!first) os << " u ";
        first = false;
        os << '{' << p << '}';
    }
    if (first) os << "{}";
    return os.str();
}

}  // namespace pmfp
