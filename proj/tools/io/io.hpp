#ifndef LIECOH_TOOLS_IO_HPP
#define LIECOH_TOOLS_IO_HPP

#include "liecoh/mapalg/graded.hpp"
#include "liecoh/multiloop/multiloop.hpp"
#include "liecoh/semidirect/semidirect.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace liecoh::io {

using json = nlohmann::json;

inline constexpr const char* conventions_version = "liecoh-conventions/1";
inline constexpr const char* algebra_schema = "liecoh-algebra/1";
inline constexpr const char* module_schema = "liecoh-module/1";
inline constexpr const char* form_schema = "liecoh-form/1";
inline constexpr const char* multiloop_schema = "liecoh-multiloop/1";
inline constexpr const char* action_schema = "liecoh-action/1";

/// Reads and parses a JSON file; syntax errors become ParseError with the
/// byte offset.
json read_file(const std::string& path);
json parse_text(const std::string& text, const std::string& origin);

/// Pretty output with sorted keys and a trailing newline.
std::string dump(const json& j);
/// Lowercase hex SHA-256 of the compact canonical dump.
std::string digest(const json& j);
std::string sha256_hex(const std::string& bytes);

json scalar_to_json(const Scalar& s);
/// "a/b", "a" or {"order": m, "coeffs": [...]}.
Scalar scalar_from_json(const json& j, const std::string& path);
json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, const std::string& path, std::size_t size);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& path, std::size_t rows, std::size_t cols);
json index_to_json(const MultiIndex& a);

json field_to_json(const Field& f);
Field field_from_json(const json& j, const std::string& path);

/// AlgebraDoc: {"schema", "name", "field", "basis", "brackets": [{"x", "y",
/// "out": [[basis, scalar], ...]}]} or {"standard": "sl(2)"}.
json algebra_to_json(const LieAlgebra& g, const std::string& name);
LieAlgebra algebra_from_json(const json& j);
std::string algebra_name(const json& j);

/// "trivial", "trivial:d", "adjoint", "coadjoint" or a ModuleDoc
/// {"schema", "dim", "matrices": {basis name: matrix}}.
ModuleAction module_from_spec(const LieAlgebra& g, const std::string& spec, json& input_doc);
ModuleAction module_from_json(const LieAlgebra& g, const json& j);
json module_to_json(const LieAlgebra& g, const ModuleAction& v);

/// FormDoc {"schema", "gram": symmetric matrix}.
BilinearFormSym form_from_json(const LieAlgebra& g, const json& j);
json form_to_json(const LieAlgebra& g, const BilinearFormSym& k);

/// Cochain as [{"args": [names], "value": [scalars]}] over nonzero entries.
json cochain_to_json(const LieAlgebra& g, const Cochain& c);
json value_to_json(const Value& v);

/// ActionDoc {"schema", "matrices": {g basis name: dim(n) x dim(n) matrix}}.
SemidirectData semidirect_from_json(const json& n, const json& g, const json& action);

/// MultiloopDoc: {"schema", "kind": "multiloop", "base": AlgebraDoc, "r",
/// "orders", "roots", "sigmas"} or {"schema", "kind": "klein", "n"}.
FixedPointAlgebra multiloop_from_json(const json& j, int window);

}  // namespace liecoh::io

#endif
