#include "chromkit/io.hpp"

#include <fstream>
#include <sstream>

namespace chromkit {

Json graph_to_json(const LabeledMultigraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.label}));
    Json j;
    j["num_vertices"] = g.num_vertices();
    j["edges"] = std::move(edges);
    return j;
}

LabeledMultigraph graph_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("graph: expected a JSON object");
    if (!j.contains("num_vertices") || !j["num_vertices"].is_number_unsigned()) {
        throw FormatError("graph: missing or non-integer \"num_vertices\"");
    }
    if (!j.contains("edges") || !j["edges"].is_array()) throw FormatError("graph: missing \"edges\" array");
    const auto n = j["num_vertices"].get<std::uint64_t>();
    std::vector<Edge> edges;
    edges.reserve(j["edges"].size());
    std::size_t index = 0;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
            !e[2].is_number_unsigned()) {
            throw FormatError("graph: edge #" + std::to_string(index) + " is not a [u, v, label] triple");
        }
        edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>(), e[2].get<Label>()});
        ++index;
    }
    try {
        return {static_cast<std::size_t>(n), std::move(edges)};
    } catch (const GraphError& err) {
        throw FormatError(std::string("graph: ") + err.what());
    }
}

std::string serialize_graph(const LabeledMultigraph& g) { return graph_to_json(g).dump(); }

Json parse_json(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& err) {
        std::size_t line = 1, column = 1;
        const std::size_t upto = std::min<std::size_t>(err.byte == 0 ? 0 : err.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::ostringstream msg;
        msg << source << ":" << line << ":" << column << " (byte " << err.byte << "): malformed JSON";
        throw FormatError(msg.str());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str(), path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path.string());
    out << j.dump() << '\n';
}

LabeledMultigraph read_graph(const std::filesystem::path& path) {
    try {
        return graph_from_json(read_json_file(path));
    } catch (const FormatError& err) {
        const std::string what = err.what();
        if (what.rfind(path.string(), 0) == 0) throw;
        throw FormatError(path.string() + ": " + what);
    }
}

void write_graph(const std::filesystem::path& path, const LabeledMultigraph& g) {
    write_json_file(path, graph_to_json(g));
}

std::vector<std::uint32_t> uint_array_from_json(const Json& j, std::string_view what) {
    if (!j.is_array()) throw FormatError(std::string(what) + ": expected an integer array");
    std::vector<std::uint32_t> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number_unsigned()) throw FormatError(std::string(what) + ": non-negative integers expected");
        out.push_back(x.get<std::uint32_t>());
    }
    return out;
}

std::vector<std::uint32_t> read_uint_array(const std::filesystem::path& path) {
    return uint_array_from_json(read_json_file(path), path.string());
}

}  // namespace chromkit
