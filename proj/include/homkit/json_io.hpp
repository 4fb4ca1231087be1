#pragma once

#include <filesystem>
#include <string>

#include "homkit/recollement.hpp"
#include "json.hpp"

namespace homkit {

using Json = nlohmann::json;

inline constexpr const char* kAlgebraFormat = "homkit-algebra/1";
inline constexpr const char* kModuleFormat = "homkit-module/1";
inline constexpr const char* kReportFormat = "homkit-report/1";

/// Matrices are arrays of rows of decimal strings ("3", "-1/2").
template <class K>
Json matrix_to_json(const Matrix<K>& m);
Json matrix_to_json(const IntMatrix& m);
template <class K>
Matrix<K> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const FieldSpec& field);

/// Basis labels with vertex tags, idempotent and radical index lists and
/// the nonzero structure constants as [x, y, z, "c"] meaning x*y has
/// coefficient c at z.
template <class K>
Json algebra_to_json(const Algebra<K>& a);
/// Rebuilds and validates.
template <class K>
AlgebraPtr<K> algebra_from_json(const Json& j);
FieldSpec field_of_json(const Json& j);

/// `algebra_ref` is stored verbatim: an inline algebra document, a path to
/// a .qa or algebra .json file, or {"bimodule": {"left": C, "right": B}}
/// for a C-B-bimodule over tensor(opposite(C), B).
template <class K>
Json module_to_json(const Module<K>& m, Json algebra_ref);
/// Reads the action matrices (one per basis label) over `algebra` and
/// validates the result.
template <class K>
Module<K> module_from_json(const Json& j, const AlgebraPtr<K>& algebra);

Json read_json_file(const std::filesystem::path& path);

/// Field named by a .qa file, algebra .json file or module file (via its
/// algebra reference).
FieldSpec field_of_file(const std::filesystem::path& path);

/// .qa (DSL) or algebra .json. `field_override` replaces the field of a
/// .qa file.
template <class K>
AlgebraPtr<K> load_algebra(const std::filesystem::path& path, std::optional<FieldSpec> field_override = {});

/// Module file; relative algebra paths resolve against the module's
/// directory.
template <class K>
Module<K> load_module(const std::filesystem::path& path, std::optional<FieldSpec> field_override = {});

Json to_json(const PdResult& p);
Json to_json(const CartanReport& c);
Json to_json(const GldimReport& g);
Json to_json(const GorensteinReport& g);
Json to_json(const SmoothReport& s);
Json to_json(const EilenbergReport& e);
Json to_json(const TwoPointReport& t);
Json to_json(const StratVerdict& s);
Json to_json(const LadderReport& l);
Json to_json(const Theorem1Report& t);
Json to_json(const TransferReport& t);
Json to_json(const GorensteinTransfer& g);
Json to_json(const SmoothnessTransfer& s);
Json to_json(const StratNode& n);

/// {"format": "homkit-report/1", "kind": kind, ...body}.
Json report_document(const std::string& kind, Json body);

}  // namespace homkit
