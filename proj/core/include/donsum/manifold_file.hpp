#pragma once

#include <string>
#include <string_view>

#include "donsum/kmseries.hpp"

namespace donsum {

// Manifold description files are JSON objects:
//
//   {
//     "name": "K3#2",
//     "rank": 4,
//     "form": [[2,0,0,1],[0,-1,0,0],[0,0,-1,0],[1,0,0,0]],
//     "classes": {"sigma": [1,-1,-1,0], "w": [0,1,0,0], "dbar": [0,0,0,1]},
//     "genus": 2, "b_plus": 3, "b1": 0, "euler": 26, "signature": -18,
//     "simple_type": true,
//     "basic_classes": [{"vector": [0,1,1,0], "coeff": "1/4", "sw": "-1"}]
//   }
//
// Coefficients are exact strings ("p/q" or "p/q+r/s*i"), never numbers.
// "b1" defaults to 0, "dbar" and "sw" are optional; any other entry of
// "classes" becomes a named probe class.

/// Throws Error(Parse) for malformed documents and Error(Validation) when
/// the form does not match the rank. Other invariants are left to validate().
StructureSeries parse_manifold(std::string_view text);
StructureSeries load_manifold(const std::string& path);

/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string serialize_manifold(const StructureSeries& s);

}  // namespace donsum
