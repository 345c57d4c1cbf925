#pragma once

#include <optional>
#include <string>

#include "quatorder/chains.hpp"
#include "quatorder/degeneracy.hpp"
#include "quatorder/isomap.hpp"
#include "json.hpp"
#include "quatorder/quat.hpp"
#include "quatorder/report.hpp"
#include "quatorder/split.hpp"

namespace quatorder {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"x":"n/d","y":..,"z":..,"t":..}
Json quat_json(const QuatElem& u);
QuatElem quat_from_json(const Json& j, const Algebra& alg);

/// {"q":..,"prec":..,"residue":"n/d"}; the residue is a rational
/// representative of the value modulo q^prec.
Json padic_json(const PadicNum& x, long absolute);
PadicNum padic_from_json(const Json& j);

/// Row-major HNF basis as an array of 4-vectors over the common denominator.
Json lattice_json(const ZLattice4& l);

Json params_json(const AlgebraParams& params);
Json construct_json(const AlgebraParams& params);
Json splitting_json(const LocalSplitting& s);
Json degeneracy_json(const DegeneracyPair& d);
Json psi_json(const PsiMap& m);
Json chain_json(const ChainBasis& c, long oracle_depth, bool stabilized);
Json report_json(const Report& r, bool vacuous);
Report report_from_json(const Json& j);

/// Plain-text versions using i, j, k.
std::string construct_text(const AlgebraParams& params);
std::string splitting_text(const LocalSplitting& s);
std::string degeneracy_text(const DegeneracyPair& d);
std::string psi_text(const PsiMap& m);
std::string chain_text(const ChainBasis& c, long oracle_depth, bool stabilized);
std::string report_text(const Report& r, bool vacuous);

}  // namespace quatorder
