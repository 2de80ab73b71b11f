#include "symbreak/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace symbreak {

using nlohmann::json;

namespace {

json to_json_object(const Symmetry& g, int offset)
{
    json j;
    if (!g.label.empty())
        j["label"] = g.label;
    j["var"] = g.var.image();
    j["val"] = g.val.image();
    j["offset"] = offset;
    return j;
}

Symmetry from_json_object(const json& j)
{
    if (!j.is_object() || !j.contains("var") || !j.contains("val"))
        throw std::invalid_argument("symmetry must be an object with \"var\" and \"val\"");
    Symmetry g{Permutation(j.at("var").get<std::vector<int>>()), Permutation(j.at("val").get<std::vector<int>>()),
               j.value("label", std::string{})};
    return g;
}

} // namespace

std::string symmetry_to_json(const Symmetry& g, int offset) { return to_json_object(g, offset).dump(); }

Symmetry symmetry_from_json(const std::string& text) { return from_json_object(json::parse(text)); }

std::string generators_to_json(const SymmetryGroup& group, int offset)
{
    json j;
    j["vars"] = group.var_count();
    j["values"] = group.value_count();
    j["offset"] = offset;
    j["generators"] = json::array();
    for (const auto& g : group.generators())
        j["generators"].push_back(to_json_object(g, offset));
    return j.dump();
}

SymmetryGroup group_from_json(const std::string& text)
{
    const json j = json::parse(text);
    SymmetryGroup group(j.at("vars").get<int>(), j.at("values").get<int>());
    for (const auto& g : j.at("generators"))
        group.add_generator(from_json_object(g));
    return group;
}

} // namespace symbreak
