#include "structsums/microgen.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace structsums {

namespace {

// Embedded copy of data/shape_library.json (the shipped asset must parse to
// the same structure; a test keeps the two in sync).
constexpr const char* kBuiltinLibraryJson = R"JSON(
{
  "schema": "shape-library-v1",
  "version": 1,
  "grid": "triangular",
  "disks_per_shape": 21,
  "shapes": [
    {"id": 0, "name": "hook", "offsets": [[0,0],[0,1],[0,2],[0,3],[0,4],[1,0],[1,1],[1,2],[1,3],[1,4],[2,0],[2,1],[2,2],[3,0],[3,1],[4,0],[4,1],[5,0],[5,1],[6,0],[6,1]]},
    {"id": 1, "name": "hook_mirror", "offsets": [[0,1],[1,0],[1,1],[2,0],[2,1],[2,4],[3,0],[3,1],[3,2],[3,3],[3,4],[4,0],[4,1],[4,2],[4,3],[5,0],[5,1],[5,2],[6,0],[6,1],[7,0]]},
    {"id": 2, "name": "staircase", "offsets": [[0,0],[1,0],[2,0],[2,1],[3,0],[3,1],[4,0],[4,1],[4,2],[5,1],[5,2],[6,1],[6,2],[6,3],[7,2],[7,3],[8,2],[8,3],[8,4],[9,3],[9,4]]},
    {"id": 3, "name": "staircase_mirror", "offsets": [[0,4],[1,3],[1,4],[2,3],[3,2],[3,3],[4,2],[4,3],[5,2],[6,1],[6,2],[7,1],[7,2],[8,1],[9,0],[9,1],[10,0],[10,1],[11,0],[12,0],[13,0]]},
    {"id": 4, "name": "flag", "offsets": [[0,0],[0,1],[0,2],[0,3],[1,0],[1,1],[1,2],[1,3],[2,0],[2,1],[2,2],[2,3],[3,0],[3,1],[3,2],[4,0],[5,0],[6,0],[7,0],[8,0],[9,0]]},
    {"id": 5, "name": "flag_mirror", "offsets": [[0,0],[1,0],[2,0],[3,0],[4,0],[4,2],[4,3],[5,0],[5,1],[5,2],[5,3],[6,0],[6,1],[6,2],[6,3],[7,0],[7,1],[7,2],[8,0],[8,1],[9,0]]},
    {"id": 6, "name": "hammer", "offsets": [[0,0],[1,0],[2,0],[3,0],[3,1],[4,0],[4,1],[5,0],[5,1],[6,0],[6,1],[6,2],[6,3],[7,0],[7,1],[7,2],[7,3],[8,0],[8,1],[8,2],[8,3]]},
    {"id": 7, "name": "hammer_mirror", "offsets": [[0,3],[1,2],[1,3],[2,1],[2,2],[2,3],[3,0],[3,1],[3,2],[4,0],[4,1],[5,0],[5,1],[6,0],[6,1],[7,0],[7,1],[8,0],[9,0],[10,0],[11,0]]},
    {"id": 8, "name": "curl", "offsets": [[0,4],[1,3],[1,4],[2,2],[2,3],[2,4],[3,1],[3,2],[3,3],[3,4],[4,0],[4,1],[4,2],[4,3],[5,0],[5,1],[5,2],[5,3],[6,0],[6,1],[6,2]]},
    {"id": 9, "name": "curl_mirror", "offsets": [[0,2],[0,3],[1,1],[1,2],[1,3],[1,4],[2,0],[2,1],[2,2],[2,3],[2,4],[3,0],[3,1],[3,2],[3,3],[3,4],[4,0],[4,1],[4,2],[4,3],[4,4]]}
  ]
}
)JSON";

std::vector<std::pair<int, int>> normalized(std::vector<std::pair<int, int>> pts) {
    int mi = pts.front().first, mj = pts.front().second;
    for (const auto& [i, j] : pts) {
        mi = std::min(mi, i);
        mj = std::min(mj, j);
    }
    for (auto& [i, j] : pts) {
        i -= mi;
        j -= mj;
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

} // namespace

std::vector<cplx> Shape::euclidean_offsets(double diameter) const {
    static const double kRoot3Half = std::sqrt(3.0) / 2.0;
    std::vector<cplx> out;
    out.reserve(offsets.size());
    for (const auto& [i, j] : offsets)
        out.emplace_back(diameter * (i + 0.5 * j), diameter * kRoot3Half * j);
    return out;
}

Shape Shape::mirrored() const {
    // Reflection across the vertical axis on the triangular grid.
    std::vector<std::pair<int, int>> pts;
    pts.reserve(offsets.size());
    for (const auto& [i, j] : offsets) pts.emplace_back(-i - j, j);
    return Shape{id, name + "~mirror", normalized(std::move(pts))};
}

Shape Shape::rotated60() const {
    std::vector<std::pair<int, int>> pts;
    pts.reserve(offsets.size());
    for (const auto& [i, j] : offsets) pts.emplace_back(-j, i + j);
    return Shape{id, name + "~rot60", normalized(std::move(pts))};
}

bool Shape::congruent(const Shape& other) const {
    const auto mine = normalized(offsets);
    Shape cur = other;
    for (int r = 0; r < 6; ++r) {
        if (normalized(cur.offsets) == mine) return true;
        cur = cur.rotated60();
    }
    return false;
}

ShapeLibrary ShapeLibrary::from_json_text(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    ShapeLibrary lib;
    lib.version_ = doc.at("version").get<int>();
    lib.disks_per_shape_ = doc.at("disks_per_shape").get<int>();
    for (const auto& s : doc.at("shapes")) {
        Shape shape;
        shape.id = s.at("id").get<int>();
        shape.name = s.at("name").get<std::string>();
        for (const auto& off : s.at("offsets"))
            shape.offsets.emplace_back(off.at(0).get<int>(), off.at(1).get<int>());
        if (static_cast<int>(shape.offsets.size()) != lib.disks_per_shape_)
            throw std::invalid_argument("shape library: shape " + shape.name +
                                        " has the wrong disk count");
        if (shape.id != static_cast<int>(lib.shapes_.size()))
            throw std::invalid_argument("shape library: ids must be consecutive from 0");
        lib.shapes_.push_back(std::move(shape));
    }
    return lib;
}

ShapeLibrary ShapeLibrary::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open shape library: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return from_json_text(os.str());
}

const ShapeLibrary& ShapeLibrary::builtin() {
    static const ShapeLibrary lib = from_json_text(kBuiltinLibraryJson);
    return lib;
}

const Shape& ShapeLibrary::shape(int id) const {
    if (id < 0 || id >= static_cast<int>(shapes_.size()))
        throw std::invalid_argument("shape id out of range: " + std::to_string(id));
    return shapes_[static_cast<std::size_t>(id)];
}

} // namespace structsums
