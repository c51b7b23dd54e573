#ifndef THETACOL_JSON_IO_HPP
#define THETACOL_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "classifier.hpp"
#include "coloring.hpp"
#include "lemma_lab.hpp"
#include "oracle.hpp"
#include "pair_search.hpp"
#include "path_engine.hpp"
#include "theta.hpp"
#include "theta_solver.hpp"

// File formats
//   graph     {"vertices": ["a", ...], "edges": [["a","b"], ...]}
//   theta     {"theta": {"lengths": [4,4,4]}}
//   lists     {"lists": {"a": [1,2,3], ...}}      optional "path": ["v1", ...]
//   coloring  {"fold": 2, "assignment": {"a": [1,2], ...}}

namespace thetacol
{

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    }
    catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

namespace detail
{

inline std::string name_of(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw InputError("vertex names must be strings or integers");
}

inline const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing \"") + key + "\"");
    return j.at(key);
}

} // namespace detail

inline ColourSet colour_set_from_json(const Json& j)
{
    if (!j.is_array())
        throw InputError("a colour list must be an array of integers");
    std::vector<Colour> cs;
    for (const auto& c : j) {
        if (!c.is_number_integer())
            throw InputError("colours must be integers");
        cs.push_back(c.get<Colour>());
    }
    ColourSet s(cs);
    if (s.size() != cs.size())
        throw InputError("a colour list repeats a colour");
    return s;
}

inline Json to_json(const ColourSet& s) { return Json(s.values()); }

inline Graph graph_from_json(const Json& j)
{
    std::vector<std::string> names;
    for (const auto& v : detail::member(j, "vertices"))
        names.push_back(detail::name_of(v));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : detail::member(j, "edges")) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("an edge must be a two-element array");
        edges.emplace_back(detail::name_of(e[0]), detail::name_of(e[1]));
    }
    return Graph::from_names(names, edges);
}

inline Json to_json(const Graph& g)
{
    Json j;
    j["vertices"] = g.names();
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back({g.name(a), g.name(b)});
    j["edges"] = edges;
    return j;
}

inline ThetaGraph theta_from_json(const Json& j)
{
    const Json& t = j.contains("theta") ? j.at("theta") : j;
    std::vector<int> lengths;
    for (const auto& k : detail::member(t, "lengths")) {
        if (!k.is_number_integer())
            throw InputError("theta lengths must be integers");
        lengths.push_back(k.get<int>());
    }
    return ThetaGraph(lengths);
}

/// Lists keyed by vertex name; every vertex of g needs one.
inline ListAssignment lists_from_json(const Json& j, const Graph& g)
{
    const Json& obj = detail::member(j, "lists");
    if (!obj.is_object())
        throw InputError("\"lists\" must be an object keyed by vertex name");
    ListAssignment lists(g.size());
    std::vector<bool> seen(g.size(), false);
    for (const auto& [name, list] : obj.items()) {
        auto w = g.index_of(name);
        if (!w)
            throw InputError("list given for unknown vertex '" + name + "'");
        lists[*w] = colour_set_from_json(list);
        seen[*w] = true;
    }
    for (Vertex w = 0; w < g.size(); ++w)
        if (!seen[w])
            throw InputError("no list for vertex '" + g.name(w) + "'");
    return lists;
}

/// Path lists in path order: the "path" array if given, else v1..vn when
/// those keys are all present, else file order.
inline std::vector<ColourSet> path_lists_from_json(const Json& j)
{
    const Json& obj = detail::member(j, "lists");
    if (!obj.is_object() || obj.empty())
        throw InputError("\"lists\" must be a non-empty object");
    std::vector<ColourSet> out;
    if (j.contains("path")) {
        for (const auto& n : j.at("path")) {
            const auto name = detail::name_of(n);
            if (!obj.contains(name))
                throw InputError("no list for path vertex '" + name + "'");
            out.push_back(colour_set_from_json(obj.at(name)));
        }
        return out;
    }
    bool numbered = true;
    for (std::size_t i = 1; i <= obj.size(); ++i)
        numbered = numbered && obj.contains("v" + std::to_string(i));
    if (numbered) {
        for (std::size_t i = 1; i <= obj.size(); ++i)
            out.push_back(colour_set_from_json(obj.at("v" + std::to_string(i))));
        return out;
    }
    for (const auto& [name, list] : obj.items())
        out.push_back(colour_set_from_json(list));
    return out;
}

/// Cycle lists keyed v0..v{2k}.
inline ListAssignment cycle_lists_from_json(const Json& j)
{
    const Json& obj = detail::member(j, "lists");
    ListAssignment out;
    for (std::size_t i = 0; i < obj.size(); ++i) {
        const auto key = "v" + std::to_string(i);
        if (!obj.contains(key))
            throw InputError("cycle lists must be keyed v0..v" + std::to_string(obj.size() - 1));
        out.push_back(colour_set_from_json(obj.at(key)));
    }
    return out;
}

inline Json lists_to_json(const Graph& g, const ListAssignment& lists)
{
    Json obj = Json::object();
    for (Vertex w = 0; w < g.size(); ++w)
        obj[g.name(w)] = to_json(lists[w]);
    return Json{{"lists", obj}};
}

/// Accepts a bare colouring or a solver report carrying one under "coloring".
inline FoldColoring coloring_from_json(const Json& root, const Graph& g)
{
    const Json& j = root.is_object() && root.contains("coloring") ? root.at("coloring") : root;
    const Json& fold = detail::member(j, "fold");
    if (!fold.is_number_integer())
        throw InputError("\"fold\" must be an integer");
    FoldColoring phi{fold.get<int>(), std::vector<ColourSet>(g.size())};
    std::vector<bool> seen(g.size(), false);
    for (const auto& [name, set] : detail::member(j, "assignment").items()) {
        auto w = g.index_of(name);
        if (!w)
            throw InputError("colouring names unknown vertex '" + name + "'");
        phi.assignment[*w] = colour_set_from_json(set);
        seen[*w] = true;
    }
    for (Vertex w = 0; w < g.size(); ++w)
        if (!seen[w])
            throw InputError("colouring misses vertex '" + g.name(w) + "'");
    return phi;
}

inline Json to_json(const Graph& g, const FoldColoring& phi)
{
    Json a = Json::object();
    for (Vertex w = 0; w < g.size() && w < phi.assignment.size(); ++w)
        a[g.name(w)] = to_json(phi.assignment[w]);
    return Json{{"fold", phi.fold}, {"assignment", a}};
}

inline Json to_json(const VerificationReport& r)
{
    Json vs = Json::array();
    for (const auto& v : r.violations)
        vs.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
    return Json{{"valid", r.ok()}, {"violations", vs}};
}

inline Json to_json(const PathProfile& p)
{
    Json res = Json::array();
    for (const auto& x : p.residuals)
        res.push_back(to_json(x));
    return Json{{"residuals", res},
                {"slp", p.slp},
                {"lambda", to_json(p.lambda)},
                {"hat_first", to_json(p.hat_first)},
                {"hat_last", to_json(p.hat_last)}};
}

inline Json to_json(const IdentityCheck& c)
{
    return Json{{"name", c.name}, {"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

inline Json to_json(const SlpIdentityReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    Json j{{"hypotheses_ok", r.hypotheses_ok}, {"l1", r.l1}, {"l2", r.l2}, {"checks", checks}};
    if (!r.hypotheses_ok)
        j["hypothesis_violation"] = r.hypothesis_violation;
    j["printed_equality"] = to_json(r.printed_equality);
    j["all_hold"] = r.all_hold();
    return j;
}

inline Json to_json(const ConditionReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return Json{{"family", r.family}, {"all_ok", r.all_ok()}, {"checks", checks}};
}

inline Json to_json(const PairCandidate& p)
{
    return Json{{"S", to_json(p.S)},
                {"T", to_json(p.T)},
                {"damages", p.damages},
                {"simple", p.simple},
                {"kind", to_string(p.kind)}};
}

inline Json to_json(const CoupleClassification& c)
{
    Json couples = Json::array();
    for (const auto& cp : c.index.couples)
        couples.push_back({cp.at_u, cp.at_v});
    Json paths = Json::array();
    for (const auto& p : c.paths) {
        Json labels = Json::array();
        for (auto l : p.labels)
            labels.push_back(to_string(l));
        paths.push_back({{"labels", labels},
                         {"heavy", p.heavy},
                         {"light", p.light},
                         {"safe", p.safe},
                         {"hub_damage", p.hub_damage}});
    }
    return Json{{"couples", couples}, {"paths", paths}};
}

inline Json to_json(const SweepCell& c)
{
    return Json{{"ell", c.ell}, {"k", c.k}, {"x", c.x}, {"y", c.y}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

inline Json to_json(const SweepReport& r)
{
    Json j{{"kind", r.kind}, {"lmax", r.lmax}, {"floor", r.floor}, {"cells", r.cells}};
    Json v = Json::array();
    for (const auto& c : r.violations)
        v.push_back(to_json(c));
    j["violations"] = v;
    if (r.kind == "main-lemma") {
        Json e = Json::array();
        for (const auto& c : r.equality_cases)
            e.push_back(to_json(c));
        j["equality_cases"] = e;
        j["equality_set_exact"] = r.equality_set_exact;
    }
    else {
        Json ids = Json::array();
        for (const auto& i : r.identities) {
            Json x{{"name", i.name}, {"checked", i.checked}, {"exceptions", i.exceptions}, {"holds", i.holds()}};
            if (i.first_exception)
                x["first_exception"] = to_json(*i.first_exception);
            ids.push_back(x);
        }
        j["identities"] = ids;
        Json printed{{"refuted_cells", r.printed_variant_refutations}};
        if (r.printed_variant_first)
            printed["first"] = to_json(*r.printed_variant_first);
        j["printed_binom_l_2k"] = printed;
    }
    j["all_hold"] = r.all_hold();
    return j;
}

inline Json to_json(const Classification& c)
{
    return Json{{"core", to_json(c.core)},
                {"two_choosable", c.two_choosable},
                {"three_choice_critical", c.three_choice_critical},
                {"family", to_string(c.family)}};
}

inline Json to_json(const Graph& g, const ChoosabilityReport& r)
{
    Json j{{"mode", r.mode == SamplerMode::exhaustive ? "exhaustive" : "random"},
           {"a", r.a},
           {"b", r.b},
           {"palette_size", r.palette_size},
           {"seed", r.seed},
           {"assignments_checked", r.assignments_checked},
           {"choosable", r.choosable()}};
    if (r.witness)
        j["witness"] = lists_to_json(g, *r.witness)["lists"];
    if (!r.caveat.empty())
        j["caveat"] = r.caveat;
    return j;
}

inline Json to_json(const Graph& g, const SolveResult& r)
{
    Json j{{"certificate", to_string(r.certificate)}, {"colourable", r.coloring.has_value()}};
    if (r.conditions)
        j["conditions"] = to_json(*r.conditions);
    if (r.pair)
        j["pair"] = to_json(*r.pair);
    if (r.full_trim)
        j["full_trim"] = true;
    if (r.coloring)
        j["coloring"] = to_json(g, *r.coloring);
    return j;
}

} // namespace thetacol

#endif // THETACOL_JSON_IO_HPP
