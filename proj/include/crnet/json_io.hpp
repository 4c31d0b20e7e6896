#pragma once

// Serialisation of the library types. Exports of matrices, spectra and
// topologies keep full double precision; report-style JSON (SLEM reports,
// optimisation results) rounds to 10 significant digits.

#include "crnet/charpoly.hpp"
#include "crnet/optimizer.hpp"
#include "crnet/spectral.hpp"
#include "crnet/topology.hpp"
#include "crnet/weights.hpp"

#include <json.hpp>

#include <string>

namespace crnet {

using json = nlohmann::json;

double round_significant(double x, int digits = 10);

json to_json(const ChainSpec& spec);
// Accepts {"orders":[...]}; throws InvalidSpec on anything else.
ChainSpec chain_spec_from_json(const json& j);

// nodes (id, role, group), edges (u, v, orbit 1-based), orbit sizes.
json to_json(const Topology& t);

json to_json(const WeightMatrix& w);
std::string to_csv(const WeightMatrix& w);

json to_json(const Spectrum& s);
json to_json(const SlemReport& r);
// u coefficients lowest power first.
json to_json(const EvenPolynomial& p);
// "81,-54,1": u coefficients highest power first.
std::string to_csv(const EvenPolynomial& p);
json to_json(const OptimizationResult& r);

}  // namespace crnet
