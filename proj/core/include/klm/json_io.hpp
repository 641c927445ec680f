#pragma once

#include <klm/ekl.hpp>
#include <klm/kl.hpp>
#include <klm/lattice.hpp>
#include <klm/matroid.hpp>
#include <klm/partition.hpp>
#include <klm/polynomial.hpp>
#include <klm/rep_ring.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace klm {

/// Order-preserving JSON so serialized output is byte-stable: object keys
/// appear in construction order, integers travel as decimal strings.
using Json = nlohmann::ordered_json;

// Polynomials: {"ring": "int"|"q", "coeffs": [...]}. Integer coefficients
// are decimal strings; q-polynomial coefficients are arrays of decimal
// strings (again indexed by exponent).
Json to_json(const QPoly& p);
Json to_json(const TPoly& p);
Json to_json(const QTPoly& p);
QPoly qpoly_from_json(const Json& j);
TPoly tpoly_from_json(const Json& j);
QTPoly qtpoly_from_json(const Json& j);

// Partitions are plain arrays: [3,2].
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"n": ..., "terms": [{"partition": [...], "mult": "..."}]}, terms in
// ascending partition order.
Json to_json(const VirtualRep& rep);
VirtualRep virtual_rep_from_json(const Json& j);

// {"variant": "uniform"|"qniform"|"explicit", ...}
Json to_json(const MatroidSpec& spec);

// {"ground": ..., "flats": [[...], ...]}
Json to_json(const ExplicitLattice& lattice);
ExplicitLattice lattice_from_json(const Json& j);

// {"matroid": ..., "rank": ..., "P": ...}
Json kl_result_json(const MatroidSpec& spec, const KLResult<BigInt>& result);
Json kl_result_json(const MatroidSpec& spec, const KLResult<QPoly>& result);

// {"n", "m", "flavor", "coefficients": [{"i", "rep", "dim", "qdim"}]}
Json to_json(const EKLTable& table);

}  // namespace klm
