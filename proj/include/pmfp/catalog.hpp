#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmfp/partial_metric.hpp"
#include "pmfp/piecewise_map.hpp"
#include "pmfp/set_descriptor.hpp"

namespace pmfp {

// A named space bundled with its canonical map and cyclic decomposition,
// when it has them, plus human-readable metadata.
struct CatalogEntry {
    PartialMetric space;
    std::optional<PiecewiseMap> map;
    std::optional<CyclicDecomposition> decomposition;
    std::string notes;

    // Overrides grid sampling of the domain (the rational space emits
    // dyadic grids so every sampled point is exactly representable).
    std::function<std::vector<double>(std::size_t)> sampler;

    std::vector<double> default_sample(std::size_t density) const;
};

// p(x,y) = max(x,y) on the given domain. The domain must be nonempty and
// contained in [0, inf); anything negative is rejected since p maps into
// the nonnegative reals.
PartialMetric make_max_space(SetDescriptor domain, std::string name = "max");

// Catalog constructors. Each validates its decomposition against the
// domain on a coarse sample.
CatalogEntry make_max_entry();         // "max"
CatalogEntry make_rationals_max();     // "rationals-max"
CatalogEntry make_hybrid_unit();       // "hybrid-unit"
CatalogEntry make_counterexample();    // "counterexample"

// The k=3 construction used by the cyclic-demo: max space on [0,1],
// T(x)=x/4, sets [0,1] -> [0,1/2] -> [0,1/4] -> (wrap). Not addressable by
// catalog name; the demo command builds it directly.
CatalogEntry make_k3_demo();

// Lookup by CLI name; throws ArgumentError for unknown names.
CatalogEntry make_entry(const std::string& name);
const std::vector<std::string>& catalog_names();

}  // namespace pmfp
