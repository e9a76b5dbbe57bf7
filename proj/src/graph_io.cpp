// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qwalk {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* name : allowed) {
            if (key == name) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ParseError("graph json: unknown field \"" + key + "\" in " + where);
        }
    }
}

VertexId require_int(const json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw ParseError("graph json: " + where + " must be an integer");
    }
    return value.get<VertexId>();
}

PropertyValue parse_scalar(const json& value, const std::string& where) {
    if (value.is_boolean()) {
        return value.get<bool>();
    }
    if (value.is_number_integer()) {
        return value.get<std::int64_t>();
    }
    if (value.is_number_float()) {
        return value.get<double>();
    }
    if (value.is_string()) {
        return value.get<std::string>();
    }
    throw ParseError("graph json: " + where + " must be a scalar (bool/int/double/string)");
}

json scalar_to_json(const PropertyValue& value) {
    return std::visit([](const auto& v) { return json(v); }, value);
}

}  // namespace

PropertyGraph parse_graph_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("graph json: top level must be an object");
    }
    reject_unknown_fields(doc, {"vertices", "edges", "properties"}, "top-level object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
        throw ParseError("graph json: required array field \"vertices\" missing");
    }
    if (doc["vertices"].empty()) {
        throw ParseError("graph json: \"vertices\" must contain at least one vertex");
    }

    PropertyGraph g;
    std::size_t index = 0;
    for (const auto& v : doc["vertices"]) {
        const VertexId id = require_int(v, "vertices[" + std::to_string(index) + "]");
        if (g.has_vertex(id)) {
            throw ParseError("graph json: duplicate vertex " + std::to_string(id));
        }
        try {
            g.add_vertex(id);
        } catch (const ConfigError& e) {
            throw ParseError(std::string("graph json: ") + e.what());
        }
        ++index;
    }

    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) {
            throw ParseError("graph json: \"edges\" must be an array");
        }
        index = 0;
        for (const auto& e : doc["edges"]) {
            const std::string where = "edges[" + std::to_string(index) + "]";
            if (!e.is_object()) {
                throw ParseError("graph json: " + where + " must be an object");
            }
            reject_unknown_fields(e, {"out", "label", "in"}, where);
            if (!e.contains("out") || !e.contains("label") || !e.contains("in")) {
                throw ParseError("graph json: " + where + " needs \"out\", \"label\", \"in\"");
            }
            if (!e["label"].is_string()) {
                throw ParseError("graph json: " + where + ".label must be a string");
            }
            const VertexId out = require_int(e["out"], where + ".out");
            const VertexId in = require_int(e["in"], where + ".in");
            try {
                g.add_edge(out, e["label"].get<std::string>(), in);
            } catch (const LookupError& err) {
                throw ParseError("graph json: " + where + ": " + err.what());
            }
            ++index;
        }
    }

    if (doc.contains("properties")) {
        if (!doc["properties"].is_array()) {
            throw ParseError("graph json: \"properties\" must be an array");
        }
        index = 0;
        for (const auto& p : doc["properties"]) {
            const std::string where = "properties[" + std::to_string(index) + "]";
            if (!p.is_object()) {
                throw ParseError("graph json: " + where + " must be an object");
            }
            reject_unknown_fields(p, {"element", "key", "value"}, where);
            if (!p.contains("element") || !p.contains("key") || !p.contains("value")) {
                throw ParseError("graph json: " + where + " needs \"element\", \"key\", \"value\"");
            }
            if (!p["key"].is_string()) {
                throw ParseError("graph json: " + where + ".key must be a string");
            }
            const VertexId element = require_int(p["element"], where + ".element");
            try {
                g.set_property(element, p["key"].get<std::string>(),
                               parse_scalar(p["value"], where + ".value"));
            } catch (const LookupError& err) {
                throw ParseError("graph json: " + where + ": " + err.what());
            }
            ++index;
        }
    }

    g.freeze();
    return g;
}

std::string graph_to_json(const PropertyGraph& g) {
    json doc;
    doc["vertices"] = g.vertices();
    doc["edges"] = json::array();
    for (const Edge& e : g.edges()) {
        doc["edges"].push_back({{"out", e.out}, {"label", e.label}, {"in", e.in}});
    }
    if (!g.properties().empty()) {
        json properties = json::array();
        for (const auto& [element_key, value] : g.properties()) {
            properties.push_back({{"element", element_key.first},
                                  {"key", element_key.second},
                                  {"value", scalar_to_json(value)}});
        }
        doc["properties"] = std::move(properties);
    }
    return doc.dump(2) + "\n";
}

PropertyGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("load_graph: cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_json(buffer.str());
}

void save_graph(const PropertyGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("save_graph: cannot open " + path + " for writing");
    }
    out << graph_to_json(g);
    if (!out) {
        throw IoError("save_graph: write to " + path + " failed");
    }
}

}  // namespace qwalk
