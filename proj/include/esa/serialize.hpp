#pragma once

#include "esa/frobenius.hpp"
#include "esa/selfadjoint.hpp"

#include "json.hpp"

#include <string>

namespace esa {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Polynomial& p);
/// Defining polynomial, isolating interval narrowed to relative width
/// 1e-30, and a decimal rendering with `digits` significant figures.
Json to_json(const AlgebraicReal& x, int digits = 20);
Json to_json(const Endpoint& e, int digits = 20);
Json to_json(const IntervalSet& s, int digits = 20);
Json to_json(const HalfPlaneCount& c);
Json to_json(const EsaVerdict& v);
Json to_json(const EsaRegion& r, int digits = 20);
Json to_json(const ResonanceClassification& c);
/// Exponents and descriptor parameters carry error bounds from certified
/// root disks.
Json to_json(const BasisSelection& s);
Json to_json(const ConjectureRow& row);

/// {"command", "input", "result", "certification"}.
Json envelope(const std::string& command, Json input, Json result, Json certification);

/// Structural check of an envelope produced by the CLI; returns an empty
/// string when valid, otherwise the first problem found.
std::string validate_envelope(const Json& j);

}  // namespace esa
