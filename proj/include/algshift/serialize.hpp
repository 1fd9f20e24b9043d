#pragma once

// JSON forms of the library's values (nlohmann::json, vendored as <json.hpp>).

#include <json.hpp>

#include "shift.hpp"

namespace algshift {

using Json = nlohmann::ordered_json;

inline Json to_json(const Face& f) { return Json(f.vertices()); }

inline Json to_json(const SimplicialComplex& c)
{
    auto facets = c.facets();
    std::sort(facets.begin(), facets.end());
    Json fs = Json::array();
    for (Face f : facets) fs.push_back(to_json(f));
    return Json{{"n", c.n()}, {"facets", fs}};
}

inline Json to_json(const Monomial& m) { return m.to_string(); }

inline Json to_json(const MonomialIdeal& ideal) { return Json{{"generators", ideal.to_strings()}}; }

namespace detail {

inline Json sparse_values(std::uint32_t dmax, const std::vector<std::int64_t>& values)
{
    Json v = Json::object();
    for (std::uint32_t j = 1; j <= dmax && j < values.size(); ++j)
        if (values[j] != 0) v[std::to_string(j)] = values[j];
    return Json{{"dmax", dmax}, {"values", v}};
}

inline std::vector<std::int64_t> dense_values(const Json& j, std::uint32_t& dmax)
{
    if (!j.is_object() || !j.contains("dmax") || !j.contains("values"))
        throw InvalidInput("sequence JSON needs \"dmax\" and \"values\"");
    dmax = j.at("dmax").get<std::uint32_t>();
    std::vector<std::int64_t> out(dmax + 1, 0);
    for (const auto& [key, value] : j.at("values").items()) {
        std::size_t pos = 0;
        const auto idx = std::stoul(key, &pos);
        if (pos != key.size() || idx < 1 || idx > dmax) throw InvalidInput("bad sequence index \"" + key + "\"");
        out[idx] = value.get<std::int64_t>();
    }
    return out;
}

inline const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("JSON object needs \"") + name + "\"");
    return j.at(name);
}

} // namespace detail

inline Json to_json(const BSequence& b) { return detail::sparse_values(b.dmax, b.values); }
inline Json to_json(const KSequence& k) { return detail::sparse_values(k.dmax, k.values); }

inline Json to_json(const UsliPrefix& u)
{
    return Json{{"k", to_json(u.k)}, {"R", u.R}, {"generators", u.generators.to_strings()}};
}

inline Json to_json(const BettiTable& t)
{
    Json rows = Json::array();
    for (const auto& [ij, v] : t.entries) rows.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"value", v}});
    return rows;
}

inline Json to_json(const ShiftOrbit& o)
{
    Json iterates = Json::array();
    for (const auto& it : o.iterates) iterates.push_back(to_json(it));
    Json steps = Json::array();
    for (const auto& s : o.steps) {
        const char* rel = s.order > 0 ? "greater" : (s.order < 0 ? "less" : "equal");
        steps.push_back(Json{{"order", rel},
                             {"decided_in_degree", s.decided_in_degree ? Json(*s.decided_in_degree) : Json(nullptr)}});
    }
    Json stab = nullptr;
    if (o.stabilized_prefix) stab = o.stabilized_prefix->to_strings();
    return Json{{"start", to_json(o.start)},         {"iterates", iterates},
                {"dbound", o.dbound},                {"stabilized_prefix", stab},
                {"certified", o.certified},          {"fixed_point", o.fixed_point},
                {"working_degree", o.working_degree}, {"steps", steps}};
}

inline Json to_json(const AxiomReport& r)
{
    static const char* names[4] = {"f_vector", "cone", "monotone", "betti_sum"};
    Json props = Json::object();
    for (int k = 0; k < 4; ++k) props[names[k]] = Json{{"checked", r.checked[k]}, {"passed", r.passed[k]}};
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json e{{"property", f.property}, {"complex", to_json(f.complex)}, {"detail", f.detail}};
        if (f.other) e["other"] = to_json(*f.other);
        failures.push_back(e);
    }
    return Json{{"complexes", r.complexes},
                {"nested_pairs", r.nested_pairs},
                {"properties", props},
                {"ok", r.ok()},
                {"failures", failures}};
}

inline Json to_json(const ConjectureProbe& p)
{
    return Json{{"order", p.order},
                {"degree", p.degree ? Json(*p.degree) : Json(nullptr)},
                {"i0", p.i0 ? Json(*p.i0) : Json(nullptr)},
                {"ideal", to_json(p.ideal)},
                {"shifted", to_json(p.shifted)},
                {"shifted_complete", p.shifted_complete},
                {"moved", p.moved ? Json(*p.moved) : Json(nullptr)},
                {"note", p.note}};
}

inline SimplicialComplex complex_from_json(const Json& j)
{
    const auto n = detail::field(j, "n").get<std::int64_t>();
    if (n < 0 || n > static_cast<std::int64_t>(kMaxVertices)) throw InvalidInput("complex needs 0 <= n <= 64");
    std::vector<Face> facets;
    for (const auto& f : detail::field(j, "facets")) {
        std::vector<Vertex> vs;
        for (const auto& v : f) {
            const auto x = v.get<std::int64_t>();
            if (x < 1 || x > n) throw InvalidInput("vertex " + std::to_string(x) + " outside [" + std::to_string(n) + "]");
            if (!vs.empty() && static_cast<Vertex>(x) <= vs.back()) throw InvalidInput("facet vertices must increase strictly");
            vs.push_back(static_cast<Vertex>(x));
        }
        facets.emplace_back(vs);
    }
    return SimplicialComplex(static_cast<Vertex>(n), std::move(facets));
}

inline MonomialIdeal ideal_from_json(const Json& j)
{
    const auto& gens = detail::field(j, "generators");
    if (!gens.is_array()) throw InvalidInput("\"generators\" must be an array");
    return MonomialIdeal::parse(gens.get<std::vector<std::string>>());
}

inline BSequence bsequence_from_json(const Json& j)
{
    std::uint32_t dmax = 0;
    auto v = detail::dense_values(j, dmax);
    BSequence b(dmax);
    b.values = std::move(v);
    return b;
}

inline KSequence ksequence_from_json(const Json& j)
{
    std::uint32_t dmax = 0;
    auto v = detail::dense_values(j, dmax);
    for (auto x : v)
        if (x < 0) throw InvalidInput("k entries must be nonnegative");
    KSequence k(dmax);
    k.values = std::move(v);
    return k;
}

/// Rebuilds the prefix from k and rejects a generator list that disagrees with it.
inline UsliPrefix usli_from_json(const Json& j)
{
    auto u = usli_from_k(ksequence_from_json(detail::field(j, "k")));
    const auto listed = MonomialIdeal::parse(detail::field(j, "generators").get<std::vector<std::string>>());
    if (!(listed == u.generators)) throw InvalidInput("USLI generators do not match k");
    return u;
}

inline ShiftOrbit orbit_from_json(const Json& j)
{
    ShiftOrbit o;
    o.start = ideal_from_json(detail::field(j, "start"));
    for (const auto& it : detail::field(j, "iterates")) o.iterates.push_back(ideal_from_json(it));
    o.dbound = detail::field(j, "dbound").get<std::uint32_t>();
    const auto& stab = detail::field(j, "stabilized_prefix");
    if (!stab.is_null()) o.stabilized_prefix = MonomialIdeal::parse(stab.get<std::vector<std::string>>());
    o.certified = detail::field(j, "certified").get<bool>();
    o.fixed_point = j.value("fixed_point", false);
    o.working_degree = j.value("working_degree", o.dbound);
    if (j.contains("steps"))
        for (const auto& s : j.at("steps")) {
            StepRecord r;
            const auto rel = s.at("order").get<std::string>();
            r.order = rel == "greater" ? std::strong_ordering::greater
                                       : (rel == "less" ? std::strong_ordering::less : std::strong_ordering::equal);
            if (!s.at("decided_in_degree").is_null()) r.decided_in_degree = s.at("decided_in_degree").get<std::uint32_t>();
            o.steps.push_back(r);
        }
    return o;
}

inline bool operator==(const StepRecord& a, const StepRecord& b)
{
    return a.order == b.order && a.decided_in_degree == b.decided_in_degree;
}

inline bool operator==(const ShiftOrbit& a, const ShiftOrbit& b)
{
    return a.start == b.start && a.iterates == b.iterates && a.steps == b.steps && a.dbound == b.dbound &&
           a.working_degree == b.working_degree && a.stabilized_prefix == b.stabilized_prefix &&
           a.certified == b.certified && a.fixed_point == b.fixed_point;
}

} // namespace algshift
