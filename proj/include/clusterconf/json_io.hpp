#pragma once

#include <tuple>

#include "json.hpp"

#include "clusterconf/chain_complex.hpp"
#include "clusterconf/fox_neuwirth.hpp"
#include "clusterconf/geometry.hpp"
#include "clusterconf/graded.hpp"
#include "clusterconf/stable.hpp"

namespace clusterconf {

using Json = nlohmann::json;

// Exact-number policy: integers that fit in 64 bits travel as JSON numbers,
// anything larger as decimal strings; rationals always as "a/b" strings (or
// "a" for integers). Floats are rejected on input -- every value in this
// interface is exact.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json rational_to_json(const Rational& v);
Rational rational_from_json(const Json& j);

Json to_json(const Partition& p);                 // [[1,3],[2]]
Partition partition_from_json(const Json& j);

Json to_json(const AbelianGroup& g);              // {"betti":…, "torsion":[…]}
Json to_json(const GradedAbelianGroup& g);        // [{"degree":…, "betti":…, …}]

Json to_json(const GradedModule& m);
Json to_json(const FormulaResult& r);

Json to_json(const ClusterConfiguration& c);
ClusterConfiguration configuration_from_json(const Json& j);

// {"alpha":[{"colour":"e0","count":5},…], "d":2, "parity":{"e0":0,…}};
// a missing parity object means the trivial one.
std::tuple<ColourMultiset, int, ParityMap> fn_request_from_json(const Json& j);

Json to_json(const ChainComplex& c);

Json to_json(const LambdaTuple& lambda);
Json to_json(const TypeMultiset& alpha);
Json to_json(const StableAssembly& assembly);
Json to_json(const GradedAssembly& assembly);

} // namespace clusterconf
