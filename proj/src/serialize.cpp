#include "esa/serialize.hpp"

#include "esa/certified_roots.hpp"

#include <cmath>
#include <limits>

namespace esa {

namespace {

Rational refinement_width(const AlgebraicReal& x) {
    Rational scale = abs(x.interval().lo) + abs(x.interval().hi) + 1;
    return scale / Rational(Integer("1000000000000000000000000000000"));
}

Json side_name(Side s) {
    switch (s) {
        case Side::Above: return "above";
        case Side::Pivot: return "pivot";
        case Side::Below: return "below";
    }
    return "";
}

Json complex_with_bound(std::complex<double> z, double bound) {
    return Json{{"re", z.real()}, {"im", z.imag()}, {"error_bound", bound}};
}

// Distance from each closed-form exponent to the certified disk nearest it,
// plus that disk's radius and the double rounding of the stored value.
std::array<double, 4> exponent_bounds(const BasisSelection& s) {
    std::array<double, 4> out{};
    EulerParams p{s.classification.c1, s.classification.c2};
    OrderedRootSet roots = certified_roots(euler_quartic(p), 256);
    for (int j = 0; j < 4; ++j) {
        std::complex<double> a = s.alpha[static_cast<std::size_t>(j)];
        double best = std::numeric_limits<double>::infinity();
        for (const auto& r : roots.roots) {
            std::complex<double> c(r.center.re.to_double(), r.center.im.to_double());
            best = std::min(best, std::abs(a - c) + r.radius.to_double());
        }
        out[static_cast<std::size_t>(j)] = best + 4 * std::numeric_limits<double>::epsilon() * (1 + std::abs(a));
    }
    return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

Json to_json(const AlgebraicReal& x, int digits) {
    Json j;
    j["defining_polynomial"] = to_json(x.defining().primitive());
    if (auto q = x.as_rational()) {
        j["interval"] = Json::array({to_string(*q), to_string(*q)});
        j["decimal"] = to_decimal(*q, digits);
        j["exact"] = to_string(*q);
        return j;
    }
    AlgebraicReal r = x.refined(refinement_width(x));
    j["interval"] = Json::array({to_string(r.interval().lo), to_string(r.interval().hi)});
    j["decimal"] = r.to_decimal(digits);
    j["exact"] = nullptr;
    return j;
}

Json to_json(const Endpoint& e, int digits) {
    Json j;
    switch (e.kind) {
        case Endpoint::Kind::NegInf: j["kind"] = "-inf"; break;
        case Endpoint::Kind::PosInf: j["kind"] = "+inf"; break;
        case Endpoint::Kind::Finite: j["kind"] = "finite"; break;
    }
    j["closed"] = e.closed;
    if (e.finite()) j["value"] = to_json(e.value, digits);
    return j;
}

Json to_json(const IntervalSet& s, int digits) {
    Json arr = Json::array();
    for (const auto& p : s.pieces) arr.push_back(Json{{"lo", to_json(p.lo, digits)}, {"hi", to_json(p.hi, digits)}});
    return arr;
}

Json to_json(const HalfPlaneCount& c) {
    return Json{{"left", c.left},
                {"axis", c.axis},
                {"right", c.right},
                {"exact", c.exact},
                {"precision_bits", static_cast<long>(c.precision)}};
}

Json to_json(const EsaVerdict& v) {
    Json axis = Json::array();
    for (const auto& t : v.axis.t_values)
        axis.push_back(Json{{"t", to_json(t.value())}, {"multiplicity", t.multiplicity}});
    return Json{{"spec", {{"m", v.spec.m}, {"n", v.spec.n}, {"l", v.spec.l}, {"c", to_string(v.spec.c)}}},
                {"verdict", to_string(v.verdict)},
                {"counts", to_json(v.count)},
                {"certificate",
                 {{"indicial_polynomial", to_json(v.indicial)},
                  {"hurwitz_determinant", to_string(v.det_h)},
                  {"axis_common_factor", to_json(v.axis.common)},
                  {"axis_roots", axis}}}};
}

Json to_json(const EsaRegion& r, int digits) {
    auto candidates = [](const std::vector<BoundaryCandidate>& cs) {
        Json arr = Json::array();
        for (const auto& c : cs)
            arr.push_back(Json{{"value", to_json(c.value)}, {"l", c.l}, {"multiplicity", c.multiplicity}});
        return arr;
    };
    Json samples = Json::array();
    for (const auto& s : r.samples)
        samples.push_back(Json{{"c", to_string(s.c)}, {"verdict", to_string(s.verdict)}, {"l", s.l}});
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["l"] = r.l ? Json(*r.l) : Json(nullptr);
    j["text"] = render(r.set, digits);
    j["pieces"] = to_json(r.set, digits);
    j["boundary_candidates"] = candidates(r.boundary_candidates);
    j["indeterminate"] = candidates(r.indeterminate);
    j["samples"] = samples;
    j["certification"] = Json{{"mode", to_string(r.mode)},
                              {"certified_up_to_l", r.certified_up_to_l},
                              {"oracle_checked", r.oracle_agrees.has_value()},
                              {"oracle_agrees", r.oracle_agrees ? Json(*r.oracle_agrees) : Json(nullptr)}};
    return j;
}

Json to_json(const ResonanceClassification& c) {
    Json ms = Json::array();
    for (const auto& m : c.memberships)
        ms.push_back(Json{{"locus", m.locus == Locus::Line ? "line" : "parabola"},
                          {"k", m.k},
                          {"side", side_name(m.side)},
                          {"relation", m.relation}});
    return Json{{"c1", to_string(c.c1)}, {"c2", to_string(c.c2)}, {"generic", c.generic()}, {"memberships", ms}};
}

Json to_json(const BasisSelection& s) {
    std::array<double, 4> eb = exponent_bounds(s);
    Json alpha = Json::array();
    for (std::size_t j = 0; j < 4; ++j) alpha.push_back(complex_with_bound(s.alpha[j], eb[j]));

    Json sols = Json::array();
    for (const auto& d : s.solutions) {
        Json params = Json::array();
        for (std::size_t i = 0; i < d.parameters.size(); ++i) {
            double bound;
            if (d.kind == SolutionKind::SeriesF03) {
                auto jj = static_cast<std::size_t>(d.exponent - 1);
                auto kk = static_cast<std::size_t>(d.order[i] - 1);
                bound = (eb[jj] + eb[kk]) / 4;
            } else {
                bound = eb[static_cast<std::size_t>(d.order[i] - 1)] / 4;
            }
            bound += 4 * std::numeric_limits<double>::epsilon() * (1 + std::abs(d.parameters[i]));
            params.push_back(complex_with_bound(d.parameters[i], bound));
        }
        Json sol;
        sol["kind"] = to_string(d.kind);
        sol["exponent"] = d.exponent;
        sol["order"] = d.order;
        sol["argument_sign"] = d.argument_sign;
        if (d.kind == SolutionKind::SeriesF03)
            sol["exponent_value"] = complex_with_bound(d.exponent_value, eb[static_cast<std::size_t>(d.exponent - 1)]);
        sol["parameters"] = params;
        sols.push_back(sol);
    }
    return Json{{"case", to_string(s.tag)},
                {"classification", to_json(s.classification)},
                {"alpha", alpha},
                {"solutions", sols}};
}

Json to_json(const ConjectureRow& row) {
    auto rel = [](double v) { return Json{{"value", v}, {"relative_error_bound", 1e-12}}; };
    return Json{{"m", row.m},
                {"gamma", to_json(row.gamma)},
                {"asymptotic", rel(row.asymptotic)},
                {"log_ratio", std::isnan(row.log_ratio) ? Json(nullptr) : rel(row.log_ratio)}};
}

Json envelope(const std::string& command, Json input, Json result, Json certification) {
    return Json{{"command", command},
                {"input", std::move(input)},
                {"result", std::move(result)},
                {"certification", std::move(certification)}};
}

namespace {

std::string check_algebraic(const Json& a, const std::string& where) {
    if (!a.is_object()) return where + ": not an object";
    if (!a.contains("defining_polynomial") || !a["defining_polynomial"].is_array())
        return where + ": missing defining_polynomial";
    for (const auto& c : a["defining_polynomial"]) {
        if (!c.is_string()) return where + ": coefficient is not a string";
        try {
            parse_rational(c.get<std::string>());
        } catch (const ParseError&) {
            return where + ": malformed coefficient";
        }
    }
    if (!a.contains("interval") || !a["interval"].is_array() || a["interval"].size() != 2)
        return where + ": missing interval";
    try {
        Rational lo = parse_rational(a["interval"][0].get<std::string>());
        Rational hi = parse_rational(a["interval"][1].get<std::string>());
        if (lo > hi) return where + ": empty interval";
    } catch (const std::exception&) {
        return where + ": malformed interval";
    }
    if (!a.contains("decimal") || !a["decimal"].is_string()) return where + ": missing decimal";
    if (!a.contains("exact") || !(a["exact"].is_null() || a["exact"].is_string())) return where + ": missing exact";
    return "";
}

std::string check_region(const Json& r) {
    for (const char* key : {"m", "n", "text", "pieces", "boundary_candidates", "indeterminate", "certification"})
        if (!r.contains(key)) return std::string("region: missing ") + key;
    for (const auto& p : r["pieces"])
        for (const char* side : {"lo", "hi"}) {
            const Json& e = p[side];
            if (!e.contains("kind") || !e.contains("closed")) return "region: bad endpoint";
            if (e["kind"] == "finite") {
                std::string err = check_algebraic(e["value"], "region endpoint");
                if (!err.empty()) return err;
            }
        }
    for (const char* list : {"boundary_candidates", "indeterminate"})
        for (const auto& c : r[list]) {
            std::string err = check_algebraic(c["value"], "candidate");
            if (!err.empty()) return err;
        }
    const Json& cert = r["certification"];
    if (!cert.contains("mode") || !cert.contains("certified_up_to_l") || !cert.contains("oracle_agrees"))
        return "region: incomplete certification";
    return "";
}

std::string check_bounded(const Json& v, const std::string& where) {
    if (!v.is_object() || !v.contains("error_bound") || !v["error_bound"].is_number())
        return where + ": numeric without error bound";
    return "";
}

}  // namespace

std::string validate_envelope(const Json& j) {
    for (const char* key : {"command", "input", "result", "certification"})
        if (!j.contains(key)) return std::string("missing ") + key;
    if (!j["command"].is_string()) return "command is not a string";
    const Json& cert = j["certification"];
    for (const char* key : {"precision_ladder", "lmax", "oracle"})
        if (!cert.contains(key)) return std::string("certification: missing ") + key;
    const std::string cmd = j["command"];
    const Json& r = j["result"];
    if (cmd == "decide") {
        for (const char* key : {"spec", "verdict", "counts", "certificate"})
            if (!r.contains(key)) return std::string("decide: missing ") + key;
        if (r["verdict"] != "ESA" && r["verdict"] != "NotESA") return "decide: bad verdict";
        const Json& c = r["counts"];
        if (c["left"].get<int>() + c["axis"].get<int>() + c["right"].get<int>() != 2 * r["spec"]["m"].get<int>())
            return "decide: counts do not add up to 2m";
        return "";
    }
    if (cmd == "region") return check_region(r);
    if (cmd == "basis") {
        for (const char* key : {"case", "classification", "alpha", "solutions"})
            if (!r.contains(key)) return std::string("basis: missing ") + key;
        if (r["alpha"].size() != 4) return "basis: expected four exponents";
        for (const auto& a : r["alpha"]) {
            std::string err = check_bounded(a, "basis exponent");
            if (!err.empty()) return err;
        }
        for (const auto& s : r["solutions"])
            for (const auto& p : s["parameters"]) {
                std::string err = check_bounded(p, "basis parameter");
                if (!err.empty()) return err;
            }
        return "";
    }
    if (cmd == "conjecture") {
        if (!r.is_array()) return "conjecture: result is not an array";
        for (const auto& row : r) {
            std::string err = check_algebraic(row["gamma"], "conjecture gamma");
            if (!err.empty()) return err;
        }
        return "";
    }
    if (cmd == "table") {
        for (const char* key : {"which", "rows", "matches_golden"})
            if (!r.contains(key)) return std::string("table: missing ") + key;
        return "";
    }
    if (cmd == "figure") {
        if (!r.contains("files") || !r["files"].is_array()) return "figure: missing files";
        return "";
    }
    return "unknown command " + cmd;
}

}  // namespace esa
