#include "cheby/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace cheby {

Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back({c.real(), c.imag()});
    return arr;
}

Polynomial polynomial_from_json(const Json& j) {
    std::vector<Complex> coeffs;
    for (const auto& e : j) {
        if (e.is_array() && e.size() == 2)
            coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
        else
            coeffs.emplace_back(e.get<double>(), 0.0);
    }
    return Polynomial{std::move(coeffs)};
}

Json to_json(Complex z) { return Json{z.real(), z.imag()}; }

Json to_json(const SpherePoint& z) {
    if (z.is_infinity()) return Json("inf");
    return to_json(z.value());
}

Json to_json(const RationalMap& r) {
    return Json{{"num", to_json(r.num)},
                {"den", to_json(r.den)},
                {"degree", r.degree},
                {"lead_ratio", to_json(r.lead_ratio)}};
}

Json to_json(const DegreeBreakdown& b) {
    return Json{{"m", b.m},     {"n", b.n},
                {"r", b.r},     {"s", b.s},
                {"B", b.B},     {"predicted", b.predicted},
                {"actual", b.actual}, {"agrees", b.agrees}};
}

Json to_json(const FixedPointRecord& rec) {
    Json j{{"location", to_json(rec.location)},
           {"multiplier", to_json(rec.multiplier)},
           {"class", to_string(rec.cls)},
           {"extraneous", rec.extraneous},
           {"multiplicity", rec.multiplicity}};
    if (rec.root_multiplicity)
        j["root_multiplicity"] = *rec.root_multiplicity;
    else
        j["root_multiplicity"] = nullptr;
    if (!rec.note.empty()) j["note"] = rec.note;
    return j;
}

Json to_json(const std::vector<FixedPointRecord>& recs) {
    Json arr = Json::array();
    for (const auto& r : recs) arr.push_back(to_json(r));
    return arr;
}

Json to_json(const BoundCheck& c) {
    return Json{{"name", c.name}, {"pass", c.pass}, {"measured", c.measured}, {"detail", c.detail}};
}

Json to_json(const LambdaFamilyRecord& rec) {
    Json checks = Json::array();
    for (const auto& c : rec.bound_checks) checks.push_back(to_json(c));
    Json others = Json::array();
    for (const auto& z : rec.other_extraneous) others.push_back(to_json(z));
    return Json{{"lambda", to_json(rec.lambda)},
                {"psi", to_json(rec.psi_value)},
                {"p", to_json(rec.p_lambda)},
                {"map", to_json(rec.c_lambda)},
                {"distinguished_extraneous", to_json(rec.distinguished_extraneous)},
                {"other_extraneous", std::move(others)},
                {"distinguished_multiplier", to_json(rec.distinguished_multiplier)},
                {"closed_form_agrees", rec.closed_form_agrees},
                {"fixed_points", to_json(rec.fixed_points)},
                {"bound_checks", std::move(checks)}};
}

namespace {

Json attractor_json(const Attractor& a) {
    const char* kind = a.kind == AttractorKind::superattracting ? "superattracting"
                       : a.kind == AttractorKind::parabolic     ? "parabolic"
                                                                : "attracting";
    return Json{{"id", a.id},
                {"location", to_json(a.location)},
                {"kind", kind},
                {"multiplier", to_json(a.multiplier)},
                {"is_root", a.is_root}};
}

}  // namespace

Json to_json(const CriticalOrbitReport& rep) {
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        entries.push_back({{"point", to_json(e.point)},
                           {"local_degree", e.local_deg},
                           {"outcome", to_string(e.outcome)},
                           {"attractor", e.attractor},
                           {"julia_marked", e.julia_marked},
                           {"iterations", e.iterations}});
    }
    return Json{{"entries", std::move(entries)}, {"pass", rep.pass}};
}

Json to_json(const RayProbeReport& rep) {
    Json samples = Json::array();
    for (const auto& s : rep.samples) {
        samples.push_back({{"x", s.x},
                           {"converged", s.converged},
                           {"moved_right", s.moved_right},
                           {"iterations", s.iterations}});
    }
    return Json{{"samples", std::move(samples)}, {"pass", rep.pass}};
}

Json to_json(const PoleProbeReport& rep) {
    Json poles = Json::array();
    for (const auto& p : rep.poles) {
        poles.push_back({{"pole", to_json(p.pole)},
                         {"multiplicity", p.multiplicity},
                         {"eps", p.eps},
                         {"fraction", p.fraction},
                         {"pass", p.pass}});
    }
    return Json{{"poles", std::move(poles)}, {"pass", rep.pass}};
}

Json to_json(const ConnectivityEvidence& ev) {
    Json attractors = Json::array();
    for (const auto& a : ev.attractors.items) attractors.push_back(attractor_json(a));
    return Json{{"verdict", to_string(ev.verdict)},
                {"attractors", std::move(attractors)},
                {"critical_orbits", to_json(ev.critical_orbits)},
                {"ray", to_json(ev.ray)},
                {"poles", to_json(ev.poles)},
                {"ray_attractor", to_json(ev.ray_attractor)},
                {"note", ev.note}};
}

std::string fixed_point_table(const std::vector<FixedPointRecord>& recs) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-28s %-26s %-10s %-24s %-12s %s\n", "location", "multiplier",
                  "|mult|", "class", "type", "note");
    os << line;
    for (const auto& rec : recs) {
        char loc[64];
        if (rec.location.is_infinity()) {
            std::snprintf(loc, sizeof loc, "inf");
        } else {
            Complex z = rec.location.value();
            std::snprintf(loc, sizeof loc, "%.10g%+.10gi", z.real(), z.imag());
        }
        char mult[64];
        std::snprintf(mult, sizeof mult, "%.8g%+.8gi", rec.multiplier.real(), rec.multiplier.imag());
        char type[32];
        if (rec.root_multiplicity)
            std::snprintf(type, sizeof type, "root k=%d", *rec.root_multiplicity);
        else
            std::snprintf(type, sizeof type, "extraneous");
        std::snprintf(line, sizeof line, "%-28s %-26s %-10.6g %-24s %-12s %s\n", loc, mult,
                      std::abs(rec.multiplier), to_string(rec.cls), type, rec.note.c_str());
        os << line;
    }
    return os.str();
}

namespace {

double parse_double(const std::string& text) {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw DegenerateInput("malformed number in root spec: " + text);
    return v;
}

Complex parse_complex(std::string text) {
    if (text.empty()) throw DegenerateInput("empty value in root spec");
    if (text.back() != 'i') return {parse_double(text), 0.0};
    text.pop_back();  // drop the i
    // Split into real and imaginary at the last sign that is not an exponent
    // sign and not leading.
    size_t split = std::string::npos;
    for (size_t k = text.size(); k-- > 1;) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        // pure imaginary: "2i", "i", "-i"
        if (text.empty() || text == "+") return {0.0, 1.0};
        if (text == "-") return {0.0, -1.0};
        return {0.0, parse_double(text)};
    }
    double re = parse_double(text.substr(0, split));
    std::string imag_part = text.substr(split);
    if (imag_part == "+") return {re, 1.0};
    if (imag_part == "-") return {re, -1.0};
    return {re, parse_double(imag_part)};
}

}  // namespace

std::vector<std::pair<Complex, int>> parse_root_spec(const std::string& spec) {
    std::vector<std::pair<Complex, int>> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // strip blanks
        std::string clean;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) clean += ch;
        if (clean.empty()) continue;
        size_t colon = clean.rfind(':');
        int mult = 1;
        std::string value = clean;
        if (colon != std::string::npos) {
            value = clean.substr(0, colon);
            std::string m = clean.substr(colon + 1);
            try {
                size_t used = 0;
                mult = std::stoi(m, &used);
                if (used != m.size()) throw std::invalid_argument(m);
            } catch (const std::exception&) {
                throw DegenerateInput("malformed multiplicity in root spec: " + m);
            }
            if (mult < 1) throw DegenerateInput("multiplicity must be positive in root spec");
        }
        out.emplace_back(parse_complex(value), mult);
    }
    if (out.empty()) throw DegenerateInput("root spec is empty");
    return out;
}

}  // namespace cheby
