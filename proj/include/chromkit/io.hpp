#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chromkit/graph.hpp"

namespace chromkit {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"num_vertices": N, "edges": [[u, v, label], ...]} with edges in canonical order.
Json graph_to_json(const LabeledMultigraph& g);

/// Reads the interchange fields of `j`; other keys are ignored so that
/// bundles (products, H' graphs) remain readable as plain graphs.
LabeledMultigraph graph_from_json(const Json& j);

std::string serialize_graph(const LabeledMultigraph& g);

/// Parses JSON text; syntax errors carry line and column.
Json parse_json(std::string_view text, std::string_view source = "<input>");

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

LabeledMultigraph read_graph(const std::filesystem::path& path);
void write_graph(const std::filesystem::path& path, const LabeledMultigraph& g);

std::vector<std::uint32_t> uint_array_from_json(const Json& j, std::string_view what);
std::vector<std::uint32_t> read_uint_array(const std::filesystem::path& path);

}  // namespace chromkit
