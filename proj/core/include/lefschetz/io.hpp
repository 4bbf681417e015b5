#pragma once

#include "lefschetz/arrangement.hpp"
#include "lefschetz/braided_curve.hpp"
#include "lefschetz/factorization.hpp"
#include "lefschetz/fibration.hpp"
#include "lefschetz/fukaya.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace lefschetz::io {

using Json = nlohmann::json;

// Parse errors and missing or mistyped fields become InputError.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);
// Two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);
void write_json_file(const std::filesystem::path& path, const Json& j);

// {"group": "braid", "strands": d} | {"group": "sl2z"} | {"group": "free", "rank": r}
Json to_json(const GroupContext& ctx);
GroupContext context_from_json(const Json& j);

// {"context": .., "target": "identity" | "full_twist" | {"element": w}, "factors": [w, ..]}
Json to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

// {"moves": [{"type": "hurwitz", "index": i, "direction": +-1}, {"type": "conjugate",
// "element": w}, {"type": "insert_pair", "index": i, "element": w},
// {"type": "delete_pair", "index": i}], "result": [w, ..] (optional)}
Json to_json(const MovePath& path, const GroupContext& ctx);
MovePath move_path_from_json(const Json& j, const GroupContext& ctx);

// {"genus": g, "base_points": n, "twists": [{"class": [..]} | {"separating": true, "genus_split": h}]}
Json to_json(const FibrationSpec& spec);
FibrationSpec fibration_from_json(const Json& j);

// {"degree": d, "factors": [{"conjugator": w, "base": i, "exponent": e}], "theta": branch (optional)}
Json to_json(const BraidedCurveSpec& spec);
BraidedCurveSpec curve_from_json(const Json& j);

// {"sheets": N, "transpositions": ["(1 2)", ..]}
Json to_json(const BranchData& b);
BranchData branch_from_json(const Json& j);

// {"darts": [{"id", "next", "opposite", "curve"}], "faces": [{"cycles": [[..]], "punctures": p}],
//  "curves": [[..]], "vertex_labels": [{"dart": d, "name": s}]}
Json to_json(const CurveArrangement& arr);
CurveArrangement arrangement_from_json(const Json& j);

Json to_json(const FukayaData& data);

}  // namespace lefschetz::io
