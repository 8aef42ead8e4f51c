#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "mpl/dbm.hpp"
#include "mpl/matrix.hpp"
#include "mpl/pwa.hpp"
#include "mpl/reach.hpp"

namespace mpl::io {

using json = nlohmann::json;

// Matrix:  {"n": 3, "entries": [[null,1,3],[5,null,4],[7,8,null]]}, null = eps.
// DBM:     {"n": 3, "bounds": [[0,null,...],...], "strict": [[false,...],...]}
//          index 0 is the dummy variable x_0.
// Union:   {"n": 3, "parts": [<dbm>, ...]}
//
// All parse errors are ParseError (or DimensionError / NotRowFiniteError for
// well-formed JSON with the wrong shape) and name the offending position.

json matrix_to_json(const Matrix& m);
/// `require_row_finite` additionally rejects rows without a finite entry.
Matrix matrix_from_json(const json& j, bool require_row_finite = true);

/// Emits canonical_form(d) unless `raw`.
json dbm_to_json(const Dbm& d, bool raw = false);
Dbm dbm_from_json(const json& j);

json union_to_json(const DbmUnion& u);
/// Accepts a union document or a single DBM document.
DbmUnion union_from_json(const json& j);

/// {"coefficient": [g_1..g_n], "dbm": ..., "dynamics": <n x n matrix>}
json region_to_json(const Region& r);
json pwa_to_json(const PwaSystem& pwa);

json read_json_file(const std::filesystem::path& path);
Matrix parse_matrix(const std::filesystem::path& path, bool require_row_finite = true);
Dbm parse_dbm(const std::filesystem::path& path);
DbmUnion parse_union(const std::filesystem::path& path);

}  // namespace mpl::io
