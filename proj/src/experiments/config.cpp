#include <algorithm>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "chromkit/experiments.hpp"

namespace chromkit {

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{"gadget-suite",      "rrg-spectral",     "eml-suite",
                                                "product-chromatic", "hprime-roundtrip", "localstats-convergence"};
    return names;
}

namespace {

std::string where(const YAML::Node& node, std::string_view source) {
    const auto mark = node.Mark();
    return std::string(source) + ":" + std::to_string(mark.line + 1) + ":" + std::to_string(mark.column + 1);
}

Json scalar_to_json(const YAML::Node& node) {
    const auto& text = node.Scalar();
    // Quoted scalars carry the non-specific tag "!" and stay strings.
    if (node.Tag() == "!") return text;
    if (text == "true" || text == "false") return text == "true";
    if (text == "null" || text == "~") return nullptr;
    std::uint64_t u = 0;
    if (YAML::convert<std::uint64_t>::decode(node, u) && text.find_first_not_of("0123456789") == std::string::npos) {
        return u;
    }
    std::int64_t i = 0;
    if (YAML::convert<std::int64_t>::decode(node, i)) return i;
    double x = 0;
    if (YAML::convert<double>::decode(node, x)) return x;
    return text;
}

Json to_json(const YAML::Node& node, std::string_view source) {
    switch (node.Type()) {
        case YAML::NodeType::Null:
        case YAML::NodeType::Undefined:
            return nullptr;
        case YAML::NodeType::Scalar:
            return scalar_to_json(node);
        case YAML::NodeType::Sequence: {
            Json arr = Json::array();
            for (const auto& item : node) arr.push_back(to_json(item, source));
            return arr;
        }
        case YAML::NodeType::Map: {
            Json obj = Json::object();
            for (const auto& kv : node) {
                const auto key = kv.first.as<std::string>();
                if (obj.contains(key)) throw ConfigError(where(kv.first, source) + ": duplicate key \"" + key + "\"");
                obj[key] = to_json(kv.second, source);
            }
            return obj;
        }
    }
    return nullptr;
}

std::uint64_t as_uint(const Json& j, std::string_view key, std::string_view source) {
    if (!j.is_number_unsigned()) {
        throw ConfigError(std::string(source) + ": \"" + std::string(key) + "\" must be a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

}  // namespace

ExperimentConfig parse_config(std::string_view yaml, std::string_view source) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(yaml));
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string(source) + ":" + std::to_string(e.mark.line + 1) + ":" +
                          std::to_string(e.mark.column + 1) + ": " + e.msg);
    }
    if (!root.IsMap()) throw ConfigError(std::string(source) + ": top level must be a mapping");
    const Json j = to_json(root, source);

    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "experiment") {
            if (!value.is_string()) throw ConfigError(std::string(source) + ": \"experiment\" must be a string");
            cfg.experiment = value.get<std::string>();
        } else if (key == "seed") {
            cfg.seed = as_uint(value, key, source);
        } else if (key == "output") {
            if (!value.is_string()) throw ConfigError(std::string(source) + ": \"output\" must be a string");
            cfg.output = value.get<std::string>();
        } else if (key == "budget") {
            cfg.budget = as_uint(value, key, source);
        } else if (key == "params") {
            if (!value.is_object() && !value.is_null()) {
                throw ConfigError(std::string(source) + ": \"params\" must be a mapping");
            }
            if (value.is_object()) cfg.params = value;
        } else {
            throw ConfigError(std::string(source) + ": unknown top-level key \"" + key + "\"");
        }
    }
    if (cfg.experiment.empty()) throw ConfigError(std::string(source) + ": missing \"experiment\"");
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), cfg.experiment) == names.end()) {
        throw ConfigError(std::string(source) + ": unknown experiment \"" + cfg.experiment + "\"");
    }
    if (cfg.output.empty()) cfg.output = std::filesystem::path("out") / cfg.experiment;
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.string());
}

}  // namespace chromkit
