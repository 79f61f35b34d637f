#pragma once

#include <string>

#include "pmfp/piecewise_map.hpp"
#include "pmfp/set_descriptor.hpp"

namespace pmfp {

// Textual set notation, e.g. "[0,1]", "[0,1) u {2}", "[3,4],{1.5}".
// Atoms are intervals with round/square bracket endpoints or point lists
// in braces; atoms are joined by 'u', commas, or whitespace.
SetDescriptor parse_set_spec(const std::string& text);

// Semicolon-separated set specs forming A_1..A_k, e.g. "[0,0.5];[0.5,1]".
CyclicDecomposition parse_decomp_spec(const std::string& text);

// Either a single affine expression applied on default_guard ("x/2",
// "(x-2)/2"), or semicolon-separated guarded pieces "SET: expr", e.g.
// "[0,1): 3/2; {1.5}: 1/2; [3,4]: (x-2)/2".
PiecewiseMap parse_map_spec(const std::string& text,
                            const SetDescriptor& default_guard);

}  // namespace pmfp
