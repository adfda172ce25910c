#pragma once

// JSON file schemas for every input and output type. Nested objects such
// as "ring" or "bimodule" may be given inline or as a path relative to the
// file that references them. Malformed input raises StructureError.

#include <filesystem>

#include <json.hpp>

#include "ringext/ann.hpp"
#include "ringext/extension.hpp"
#include "ringext/factor_sets.hpp"
#include "ringext/obstruction.hpp"
#include "ringext/zlinalg.hpp"

namespace ringext::io {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

/// A parsed document and the directory relative references resolve against.
struct Document {
    Json json;
    fs::path dir;
};

Document load_file(const fs::path& path);
/// Follows a string reference to another file; objects are returned as is.
Document resolve(const Json& value, const fs::path& dir);

FinAbGroup group_from_json(const Json& j);
Json group_to_json(const FinAbGroup& g);

FinRing ring_from_json(const Json& j, const fs::path& dir = {});
Json ring_to_json(const FinRing& r);

BimoduleAction bimodule_from_json(const Json& j, const fs::path& dir = {});
Json bimodule_to_json(const BimoduleAction& m);

TwoCochain cochain_from_json(const Json& j, const fs::path& dir = {});
Json cochain_to_json(const TwoCochain& c);

/// {"ring": S, "quotient": R, "sigma": [...], "u": [...]} with optional
/// "ideal" and "chi"; without them A = ker sigma is derived.
Extension extension_from_json(const Json& j, const fs::path& dir = {});
Json extension_to_json(const Extension& e);

/// {"quotient": R, "ideal": A, "phi": [|R| tables], "psi": [...]}.
PreExtension pre_extension_from_json(const Json& j, const fs::path& dir = {});
Json pre_extension_to_json(const PreExtension& p);

/// {"bimodule": M, "xi": n^3 nested, "eta": n^2 nested, "alpha", "lambda", "rho"}.
struct FamilyFile {
    BimoduleAction module;
    TupleFamily k;
};
FamilyFile family_from_json(const Json& j, const fs::path& dir = {});
Json family_to_json(const BimoduleAction& m, const TupleFamily& k);
/// The five tables only.
Json family_tables(const TupleFamily& k);

/// {"F_plus": [[...]], "F_times": [[...]]}.
AnnFunctorData functor_from_json(const Json& j, int n);
Json functor_to_json(const AnnFunctorData& d);
Json pair_to_json(const CoboundaryPair& c);

Json table_to_json(const std::vector<int>& flat, int n);
Json report_to_json(const Report& r);
Json bigint_to_json(const zlinalg::BigInt& v);
Json formal_sum_to_json(const zlinalg::FormalSum& s);
Json matrix_to_json(const zlinalg::IntMatrix& m);

}  // namespace ringext::io
