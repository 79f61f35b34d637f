#include "pmfp/catalog.hpp"

#include <bit>
#include <limits>
#include <string>

#include "pmfp/errors.hpp"

namespace pmfp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Decomposition sets must be nonempty and land inside the space domain;
// checked on a coarse sample, like every other set-level claim here.
void validate_entry(const CatalogEntry& entry, std::size_t density = 20) {
    if (!entry.decomposition) return;
    if (entry.decomposition->size() < 1) {
        throw ArgumentError("cyclic decomposition needs at least one set");
    }
    for (const auto& set : entry.decomposition->sets) {
        const auto pts = sample(set, density);
        if (pts.empty()) {
            throw ArgumentError("decomposition set " + to_string(set) +
                                " is empty on its default sample");
        }
        for (double x : pts) {
            if (!entry.space.domain().contains(x)) {
                throw ArgumentError("decomposition set " + to_string(set) +
                                    " leaves the domain of " + entry.space.name() +
                                    " at " + std::to_string(x));
            }
        }
    }
}

std::vector<double> dyadic_sample(std::size_t density) {
    if (density < 1) throw ArgumentError("sample density must be >= 1");
    if (density == 1) return {0.0};
    // Grid pitch 4/m with m a power of two, so every point k*(4/m) is an
    // exactly representable dyadic rational.
    const std::size_t m = std::bit_ceil(density - 1);
    const double step = kUnboundedSpan / static_cast<double>(m);
    std::vector<double> pts;
    pts.reserve(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        pts.push_back(static_cast<double>(k) * step);
    }
    return pts;
}

}  // namespace

std::vector<double> CatalogEntry::default_sample(std::size_t density) const {
    if (sampler) return sampler(density);
    return sample(space.domain(), density);
}

PartialMetric make_max_space(SetDescriptor domain, std::string name) {
    if (domain.is_empty()) throw ArgumentError("max space needs a nonempty domain");
    for (const auto& iv : domain.intervals) {
        if (iv.lo < 0.0) {
            throw ArgumentError("max space domain must lie in [0, inf)");
        }
    }
    for (double p : domain.points) {
        if (p < 0.0) {
            throw ArgumentError("max space domain must lie in [0, inf)");
        }
    }
    return PartialMetric::max_rule(std::move(name), std::move(domain));
}

CatalogEntry make_max_entry() {
    auto domain = SetDescriptor::interval(0.0, kInf, true, false).flag_closed();
    CatalogEntry entry{
        make_max_space(domain),
        PiecewiseMap("x/2").add_rule(domain, 0.5, 0.0),
        std::nullopt,
        "complete partial metric space; p(x,y)=max(x,y) on [0,inf); "
        "canonical map x/2",
        nullptr,
    };
    validate_entry(entry);
    return entry;
}

CatalogEntry make_rationals_max() {
    auto domain = SetDescriptor::interval(0.0, kInf, true, false);
    CatalogEntry entry{
        make_max_space(domain, "rationals-max"),
        PiecewiseMap("x/2").add_rule(domain, 0.5, 0.0),
        std::nullopt,
        "0-complete partial metric space which is not complete; sampler "
        "emits dyadic rational grids so points are exactly representable; "
        "canonical map x/2",
        dyadic_sample,
    };
    validate_entry(entry);
    return entry;
}

CatalogEntry make_hybrid_unit() {
    auto domain = SetDescriptor::closed(0.0, 1.0).flag_closed();
    auto unit_half_open = SetDescriptor::interval(0.0, 1.0, true, false);
    PiecewiseMap t("hybrid-unit T");
    t.add_constant(unit_half_open, 0.5)
        .add_constant(SetDescriptor::point_set({1.0}), 0.0);
    CyclicDecomposition decomp{{
        SetDescriptor::closed(0.0, 0.5).flag_closed(),
        SetDescriptor::closed(0.5, 1.0).flag_closed(),
    }};
    CatalogEntry entry{
        PartialMetric::hybrid_unit_rule("hybrid-unit", domain),
        std::move(t),
        std::move(decomp),
        "complete partial metric space on [0,1]; p=|x-y| when both "
        "arguments are in [0,1), max otherwise; cyclic for A=[0,1/2], "
        "B=[1/2,1] with contraction constant alpha=3/4 (measured sup "
        "ratio 1/2)",
        nullptr,
    };
    validate_entry(entry);
    return entry;
}

CatalogEntry make_counterexample() {
    auto a = SetDescriptor::closed(0.0, 1.0).flag_closed();
    auto b = SetDescriptor::closed(3.0, 4.0).add_point(1.5).flag_closed();
    auto domain = set_union(a, b);
    PiecewiseMap t("counterexample T");
    t.add_constant(SetDescriptor::closed(0.0, 1.0), 1.5)
        .add_constant(SetDescriptor::point_set({1.5}), 0.5)
        .add_rule(SetDescriptor::closed(3.0, 4.0), 0.5, -1.0);  // (x-2)/2
    CyclicDecomposition decomp{{a, b}};
    CatalogEntry entry{
        make_max_space(domain, "counterexample"),
        std::move(t),
        std::move(decomp),
        "0-complete max space on A u B with A=[0,1], B=[3,4] u {3/2}; "
        "A n B is empty; T cycles A and B but is not a cyclic "
        "contraction (sup ratio 1 at y=3/2); T(1)=3/2 is an extension "
        "choice, the defining rule leaves x=1 uncovered",
        nullptr,
    };
    validate_entry(entry);
    return entry;
}

CatalogEntry make_k3_demo() {
    auto domain = SetDescriptor::closed(0.0, 1.0).flag_closed();
    CyclicDecomposition decomp{{
        SetDescriptor::closed(0.0, 1.0).flag_closed(),
        SetDescriptor::closed(0.0, 0.5).flag_closed(),
        SetDescriptor::closed(0.0, 0.25).flag_closed(),
    }};
    CatalogEntry entry{
        make_max_space(domain, "k3-demo"),
        PiecewiseMap("x/4").add_rule(domain, 0.25, 0.0),
        std::move(decomp),
        "k=3 cyclic construction: max space on [0,1], T(x)=x/4, sets "
        "[0,1] -> [0,1/2] -> [0,1/4] -> wrap; fixed point 0 lies in "
        "every set",
        nullptr,
    };
    validate_entry(entry);
    return entry;
}

CatalogEntry make_entry(const std::string& name) {
    if (name == "max") return make_max_entry();
    if (name == "rationals-max") return make_rationals_max();
    if (name == "hybrid-unit") return make_hybrid_unit();
    if (name == "counterexample") return make_counterexample();
    throw ArgumentError("unknown space \"" + name +
                        "\" (catalog: max, rationals-max, hybrid-unit, "
                        "counterexample)");
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{
        "max",
        "rationals-max",
        "hybrid-unit",
        "counterexample",
    };
    return names;
}

}  // namespace pmfp
