#pragma once

#include <string>

#include <json.hpp>

#include "mahlerkit/cyclotomic.hpp"
#include "mahlerkit/decomp.hpp"
#include "mahlerkit/linrep.hpp"
#include "mahlerkit/lrs.hpp"
#include "mahlerkit/mahler_eq.hpp"
#include "mahlerkit/negligible.hpp"
#include "mahlerkit/ore.hpp"
#include "mahlerkit/seqspec.hpp"
#include "mahlerkit/series.hpp"

namespace mahlerkit::io {

using json = nlohmann::ordered_json;

// Scalars serialize as "num/den" strings (plain "num" for integers); parsing
// also accepts JSON integers.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// Polynomials are arrays of scalars, index = exponent.
json to_json(const UniPoly<Rational>& p);
UniPoly<Rational> poly_from_json(const json& j);

json to_json(const Cyclo& c);
Cyclo cyclo_from_json(const json& j);

json to_json(const TruncSeries<Rational>& s);
TruncSeries<Rational> series_from_json(const json& j);
json to_json(const TruncSeries<Cyclo>& s);

json to_json(const LRSSpec& s);
LRSSpec lrs_from_json(const json& j);

json to_json(const EventuallyPeriodic& e);
EventuallyPeriodic chi_from_json(const json& j);

json to_json(const LinRep& r);
LinRep linrep_from_json(const json& j);

json to_json(const MultiplicativeDecomposition& d);
MultiplicativeDecomposition decomposition_from_json(const json& j);

json to_json(const MahlerEquation<Rational>& eq);
MahlerEquation<Rational> equation_from_json(const json& j);

json to_json(const OrePoly<Rational>& op);
OrePoly<Rational> ore_from_json(const json& j);

json to_json(const SequenceSpec& spec);
SequenceSpec spec_from_json(const json& j);

json to_json(const NegligibilityCertificate& cert);

// Sequence ingestion: a JSON object with "values"/"offset", a tagged
// SequenceSpec object, or OEIS-style b-file text (two whitespace-separated
// columns: index, value; indices contiguous ascending).
SequenceSpec parse_sequence_text(const std::string& text);
SequenceSpec load_sequence_file(const std::string& path);

} // namespace mahlerkit::io
