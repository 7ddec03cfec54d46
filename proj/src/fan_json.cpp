#include "toricmorse/fan_json.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace toricmorse {

namespace {

using nlohmann::json;

Fan fanFromJson(const json& doc, const std::string& origin) {
    if (!doc.is_object()) throw FanFormatError(origin + ": top level must be an object");
    for (const char* key : {"rank", "rays", "max_cones"})
        if (!doc.contains(key)) throw FanFormatError(origin + ": missing key \"" + key + "\"");

    if (!doc["rank"].is_number_integer())
        throw FanFormatError(origin + ": \"rank\" must be an integer");
    const int rank = doc["rank"].get<int>();
    if (rank < 1 || rank > 8) throw FanFormatError(origin + ": \"rank\" out of supported range");

    const json& rays = doc["rays"];
    if (!rays.is_array() || rays.empty())
        throw FanFormatError(origin + ": \"rays\" must be a nonempty array");
    CoordMatrix rayMatrix(rank, static_cast<Index>(rays.size()));
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const json& ray = rays[i];
        if (!ray.is_array() || static_cast<int>(ray.size()) != rank)
            throw FanFormatError(origin + ": ray " + std::to_string(i) + " must be a vector of length " +
                                 std::to_string(rank));
        for (int j = 0; j < rank; ++j) {
            if (!ray[j].is_number_integer())
                throw FanFormatError(origin + ": ray " + std::to_string(i) + " entry " +
                                     std::to_string(j) + " is not an integer");
            rayMatrix(j, static_cast<Index>(i)) = ray[j].get<Coord>();
        }
    }

    const json& cones = doc["max_cones"];
    if (!cones.is_array() || cones.empty())
        throw FanFormatError(origin + ": \"max_cones\" must be a nonempty array");
    std::vector<Cone> maxCones;
    maxCones.reserve(cones.size());
    for (std::size_t c = 0; c < cones.size(); ++c) {
        const json& cone = cones[c];
        if (!cone.is_array())
            throw FanFormatError(origin + ": cone " + std::to_string(c) + " must be an array");
        Cone out;
        for (const json& entry : cone) {
            if (!entry.is_number_integer())
                throw FanFormatError(origin + ": cone " + std::to_string(c) +
                                     " contains a non-integer index");
            out.rayIndices.push_back(entry.get<int>());
        }
        maxCones.push_back(std::move(out));
    }
    return Fan(rank, std::move(rayMatrix), std::move(maxCones));
}

}  // namespace

Fan parseFanText(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FanFormatError(origin + ": " + e.what());
    }
    return fanFromJson(doc, origin);
}

Fan parseFanFile(const std::string& path) {
    std::ifstream input(path);
    if (!input) throw FanFormatError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return parseFanText(buffer.str(), path);
}

}  // namespace toricmorse
