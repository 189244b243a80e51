#include "pathcast/scene.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pathcast/errors.hpp"
#include "pathcast/raster_io.hpp"

namespace pathcast {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw InputError(where + ": unknown field '" + key + "'");
        }
    }
}

int require_int(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) {
        throw InputError(where + ": missing field '" + key + "'");
    }
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw InputError(where + "." + key + ": expected an integer");
    }
    return v.get<int>();
}

}  // namespace

SceneDescriptor load_scene(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path.string() + ": cannot open file");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    const std::string where = path.string();
    if (!doc.is_object()) {
        throw InputError(where + ": scene descriptor must be a JSON object");
    }
    reject_unknown_keys(doc, {"scene_id", "width", "height", "reward_map",
                              "obstacle_map", "objects"},
                        where);

    SceneDescriptor scene;
    if (!doc.contains("scene_id") || !doc.at("scene_id").is_string()) {
        throw InputError(where + ": missing or non-string 'scene_id'");
    }
    scene.scene_id = doc.at("scene_id").get<std::string>();
    scene.width = require_int(doc, "width", where);
    scene.height = require_int(doc, "height", where);

    if (doc.contains("reward_map")) {
        if (!doc.at("reward_map").is_string()) {
            throw InputError(where + ".reward_map: expected a file path string");
        }
        scene.reward_map_ref = doc.at("reward_map").get<std::string>();
    }
    if (doc.contains("obstacle_map")) {
        if (!doc.at("obstacle_map").is_string()) {
            throw InputError(where + ".obstacle_map: expected a file path string");
        }
        scene.obstacle_map_ref = doc.at("obstacle_map").get<std::string>();
    }

    if (!doc.contains("objects") || !doc.at("objects").is_array()) {
        throw InputError(where + ": missing 'objects' array");
    }
    const std::filesystem::path base = path.parent_path();
    int index = 0;
    for (const json& entry : doc.at("objects")) {
        const std::string owhere = where + ".objects[" + std::to_string(index) + "]";
        if (!entry.is_object()) {
            throw InputError(owhere + ": expected an object");
        }
        reject_unknown_keys(entry, {"bbox", "orientation", "trajectory"}, owhere);
        if (!entry.contains("bbox") || !entry.at("bbox").is_array() ||
            entry.at("bbox").size() != 4) {
            throw InputError(owhere + ".bbox: expected [b1, b2, w, h]");
        }
        ObjectRecord record;
        const json& bbox = entry.at("bbox");
        for (const json& v : bbox) {
            if (!v.is_number_integer()) {
                throw InputError(owhere + ".bbox: expected integers");
            }
        }
        record.box = BoundingBox{bbox[0].get<int>(), bbox[1].get<int>(),
                                 bbox[2].get<int>(), bbox[3].get<int>()};
        if (entry.contains("orientation")) {
            if (!entry.at("orientation").is_number()) {
                throw InputError(owhere + ".orientation: expected radians");
            }
            record.orientation = Angle(entry.at("orientation").get<double>());
        }
        if (entry.contains("trajectory")) {
            if (!entry.at("trajectory").is_string()) {
                throw InputError(owhere + ".trajectory: expected a file path string");
            }
            record.trajectory_ref = entry.at("trajectory").get<std::string>();
            record.trajectory = load_trajectory_csv(base / *record.trajectory_ref);
        }
        scene.objects.push_back(std::move(record));
        ++index;
    }

    if (!scene.reward_map_ref && !scene.obstacle_map_ref) {
        throw InputError(where + ": at least one of 'reward_map' or 'obstacle_map' is required");
    }
    if (scene.reward_map_ref) {
        scene.reward_field = load_scalar_field(base / *scene.reward_map_ref);
    }
    if (scene.obstacle_map_ref) {
        scene.obstacle_field = binarize(load_scalar_field(base / *scene.obstacle_map_ref));
    }

    validate_scene(scene, where);
    return scene;
}

void validate_scene(const SceneDescriptor& scene, const std::string& where) {
    if (scene.width < 1 || scene.height < 1) {
        throw InputError(where + ": non-positive scene dimensions");
    }
    auto check_dims = [&](const std::optional<ScalarField>& field, const char* what) {
        if (!field) return;
        if (field->width() != scene.width || field->height() != scene.height) {
            throw InputError(where + ": " + what + " is " +
                             std::to_string(field->width()) + "x" +
                             std::to_string(field->height()) +
                             " but the scene declares " +
                             std::to_string(scene.width) + "x" +
                             std::to_string(scene.height));
        }
    };
    check_dims(scene.reward_field, "reward map");
    check_dims(scene.obstacle_field, "obstacle map");
    if (scene.reward_field && !values_in_range(*scene.reward_field, 0.0, 1.0)) {
        throw InputError(where + ": reward map values outside [0, 1]");
    }

    int index = 0;
    for (const ObjectRecord& record : scene.objects) {
        const std::string owhere = where + ".objects[" + std::to_string(index) + "]";
        const BoundingBox& b = record.box;
        if (b.width < 1 || b.height < 1) {
            throw InputError(owhere + ".bbox: non-positive box dimensions");
        }
        if (b.left < 0 || b.top < 0 || b.left + b.width > scene.width ||
            b.top + b.height > scene.height) {
            throw InputError(owhere + ".bbox: box [" + std::to_string(b.left) +
                             ", " + std::to_string(b.top) + ", " +
                             std::to_string(b.width) + ", " +
                             std::to_string(b.height) +
                             "] exceeds the scene bounds");
        }
        if (record.trajectory) {
            const PathSeq& traj = *record.trajectory;
            if (traj.size() < 2) {
                throw InputError(owhere + ": trajectory needs at least 2 points");
            }
            for (const Position& p : traj) {
                if (p.x < 0 || p.x >= scene.width || p.y < 0 || p.y >= scene.height) {
                    throw InputError(owhere + ": trajectory point (" +
                                     std::to_string(p.x) + ", " +
                                     std::to_string(p.y) + ") outside the scene");
                }
            }
            const Position center = b.center_cell(1);
            const double dx = traj.front().x - center.x;
            const double dy = traj.front().y - center.y;
            const int d = diagonal_distance(b, 1);
            if (std::sqrt(dx * dx + dy * dy) > 2.0 * d) {
                throw InputError(owhere + ": trajectory starts more than 2*d cells from the box center");
            }
        }
        ++index;
    }
}

PathSeq load_trajectory_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path.string() + ": cannot open file");
    }
    PathSeq traj;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line_no == 1 && line == "x,y") continue;  // optional header
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw InputError(path.string() + ":" + std::to_string(line_no) +
                             ": expected 'x,y'");
        }
        auto parse_int = [&](std::string_view s) {
            int value = 0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size()) {
                throw InputError(path.string() + ":" + std::to_string(line_no) +
                                 ": malformed coordinate '" + std::string(s) + "'");
            }
            return value;
        };
        const std::string_view sv(line);
        traj.push_back(Position{parse_int(sv.substr(0, comma)),
                                parse_int(sv.substr(comma + 1))});
    }
    if (traj.empty()) {
        throw InputError(path.string() + ": empty trajectory");
    }
    return traj;
}

void write_trajectory_csv(const PathSeq& trajectory, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError(path.string() + ": cannot open for writing");
    }
    out << "x,y\n";
    for (const Position& p : trajectory) {
        out << p.x << "," << p.y << "\n";
    }
    if (!out) {
        throw InputError(path.string() + ": write failed");
    }
}

std::string scene_to_json(const SceneDescriptor& scene) {
    json objects = json::array();
    for (const ObjectRecord& record : scene.objects) {
        json entry;
        entry["bbox"] = {record.box.left, record.box.top, record.box.width,
                         record.box.height};
        if (record.orientation) {
            entry["orientation"] = record.orientation->radians();
        }
        if (record.trajectory_ref) {
            entry["trajectory"] = *record.trajectory_ref;
        }
        objects.push_back(std::move(entry));
    }
    json doc;
    doc["scene_id"] = scene.scene_id;
    doc["width"] = scene.width;
    doc["height"] = scene.height;
    if (scene.reward_map_ref) doc["reward_map"] = *scene.reward_map_ref;
    if (scene.obstacle_map_ref) doc["obstacle_map"] = *scene.obstacle_map_ref;
    doc["objects"] = std::move(objects);
    return doc.dump(2) + "\n";
}

}  // namespace pathcast
