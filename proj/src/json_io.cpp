#include "cdc/json_io.hpp"

namespace cdc {

namespace {

int get_int(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_integer()) throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> get_int_array(const Json& v, const std::string& what) {
    if (!v.is_array()) throw InvalidInput(what + " must be an array of integers");
    std::vector<int> out;
    for (const Json& x : v) {
        if (!x.is_number_integer()) throw InvalidInput(what + " must contain only integers");
        out.push_back(x.get<int>());
    }
    return out;
}

} // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const Instance& inst) {
    return Json{{"K", inst.nodes()}, {"Q", inst.functions()}, {"N", inst.files()},
                {"B", inst.iv_bits()}, {"F", inst.file_bits()}, {"L", inst.budgets()}};
}

Instance instance_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("instance must be a JSON object");
    if (!j.contains("L")) throw InvalidInput("missing field \"L\"");
    return Instance(get_int(j, "K"), get_int(j, "Q"), get_int(j, "N"), get_int(j, "B"), get_int(j, "F"),
                    get_int_array(j.at("L"), "\"L\""));
}

Json to_json(const Placement& p) {
    Json assigned = Json::array();
    for (const auto& files : p.assigned()) assigned.push_back(std::vector<int>(files.begin(), files.end()));
    return Json{{"assigned", assigned}};
}

Placement placement_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("assigned") || !j.at("assigned").is_array())
        throw InvalidInput("placement must be an object with an \"assigned\" array");
    std::vector<std::set<FileId>> assigned;
    for (const Json& node : j.at("assigned")) {
        auto files = get_int_array(node, "each entry of \"assigned\"");
        assigned.emplace_back(files.begin(), files.end());
    }
    return Placement(std::move(assigned));
}

Json to_json(const ShufflePlan& plan) {
    Json txs = Json::array();
    for (const auto& tx : plan.transmissions) {
        Json payload = Json::array();
        for (const auto& g : tx.payload) payload.push_back({g.owner, g.file});
        txs.push_back(Json{{"sender", tx.sender}, {"payload", payload}, {"width_iv", tx.width_iv}});
    }
    return Json{{"transmissions", txs}};
}

ShufflePlan plan_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("transmissions") || !j.at("transmissions").is_array())
        throw InvalidInput("plan must be an object with a \"transmissions\" array");
    ShufflePlan plan;
    for (const Json& t : j.at("transmissions")) {
        Transmission tx;
        tx.sender = get_int(t, "sender");
        tx.width_iv = t.contains("width_iv") ? get_int(t, "width_iv") : 1;
        if (!t.contains("payload") || !t.at("payload").is_array())
            throw InvalidInput("transmission needs a \"payload\" array");
        for (const Json& g : t.at("payload")) {
            auto pair = get_int_array(g, "payload entry");
            if (pair.size() != 2) throw InvalidInput("payload entries are [owner, file] pairs");
            tx.payload.insert({pair[0], pair[1]});
        }
        plan.transmissions.push_back(std::move(tx));
    }
    return plan;
}

Json to_json(const Rational& r) {
    if (r.denominator() == 1) return Json(r.numerator());
    return Json(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
}

Json to_json(const LoadReport& r) {
    Json norm = Json::array();
    for (const auto& x : r.per_node_egress_norm) norm.push_back(to_json(x));
    return Json{{"per_node_load", r.per_node_load},
                {"total", r.total},
                {"worst", r.worst},
                {"egress_bits", r.egress_bits},
                {"per_node_egress_norm", norm},
                {"over_budget", r.over_budget}};
}

Json to_json(const BoundReport& r) {
    Json terms = Json::array();
    for (const auto& t : r.worst_lower_terms) terms.push_back(Json{{"name", t.name}, {"value", t.value}});
    Json out;
    out["total_lower"] = r.total_lower;
    out["optimal_total"] = r.optimal_total ? Json(*r.optimal_total) : Json(nullptr);
    out["total_tag"] = r.total_tag;
    out["worst_lower"] = r.worst_lower;
    out["worst_lower_terms"] = terms;
    out["optimal_worst"] = r.optimal_worst ? Json(*r.optimal_worst) : Json(nullptr);
    out["worst_tag"] = r.worst_tag;
    return out;
}

Json to_json(const GammaDesign& d) {
    Json c = Json::object();
    for (int p = 1; p <= d.nodes; ++p) c[std::to_string(p)] = d.c(p);
    Json r = Json::object();
    for (int p = 2; p <= d.nodes - 1; ++p) r[std::to_string(p)] = d.r(p);
    return Json{{"kind", "gamma"}, {"gamma_c", c}, {"gamma_r", r}, {"objective_total", d.objective()}};
}

Json to_json(const SDesign16& d) {
    Json groups = Json::object();
    for (int i = 0; i < SDesign16::Count; ++i) groups[SDesign16::names()[i]] = d.u[i];
    return Json{{"kind", "s16"}, {"groups", groups}, {"objective_worst", d.worst()}, {"loads", d.loads()}};
}

Json to_json(const DualDesign& d) {
    Json groups = Json::array();
    for (const auto& [key, size] : d.s_c) {
        if (size == 0) continue;
        groups.push_back(Json{{"A", key.first.members()}, {"sender", key.second}, {"size", size}});
    }
    return Json{{"kind", "dual"},
                {"groups", groups},
                {"s_full", d.s_full},
                {"objective_total", d.total()},
                {"objective_worst", d.worst()},
                {"loads", d.loads()}};
}

Json to_json(const LoadPair& p) { return Json{{"total", p.total}, {"worst", p.worst}}; }

Json to_json(const Verification& v) {
    Json und = Json::array();
    for (const auto& [r, t] : v.undecodable) und.push_back(Json{{"receiver", r}, {"transmission", t}});
    Json missing = Json::array();
    for (const auto& m : v.missing) missing.push_back(Json{{"node", m.node}, {"q", m.function}, {"n", m.file}});
    Json out;
    out["feasible"] = v.feasible;
    out["load_report"] = to_json(v.report);
    out["budget_violations"] = v.budget_violations;
    out["undecodable"] = und;
    out["missing"] = missing;
    out["errors"] = v.errors;
    return out;
}

} // namespace cdc
