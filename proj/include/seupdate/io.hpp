#pragma once

#include "seupdate/alphabet.hpp"
#include "seupdate/orders.hpp"
#include "seupdate/postulates.hpp"
#include "seupdate/se_interpretation.hpp"
#include "seupdate/semantics.hpp"

#include <json.hpp>

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace seupdate {

/// [{"here": [...], "there": [...]}, ...] in canonical order.
nlohmann::json to_json(const SEModelSet& models, const Alphabet& alphabet);
SEModelSet se_models_from_json(const nlohmann::json& j, const Alphabet& alphabet);

nlohmann::json to_json(const Interpretations& interpretations, const Alphabet& alphabet);
nlohmann::json to_json(const PostulateReport& report);
PostulateReport report_from_json(const nlohmann::json& j);

/// Parses the "<{p},{p,q}>" form.
SEInterpretation parse_se_interpretation(std::string_view text, const Alphabet& alphabet);

/// Assignment table file:
///
///     alphabet p q
///     X <{},{}>
///     1 1 1 ...     (one row per Y, one column per Z: leq(X, Y, Z))
///     ...
///     X <{},{p}>
///     ...
///
/// Blocks appear in canonical order of X and rows/columns in canonical order
/// of Y/Z. Lines starting with '%' are comments.
void write_assignment_table(std::ostream& out, const PreorderAssignment& o, const Alphabet& alphabet);
/// Returns the assignment and its alphabet. Throws Error with a line number.
std::pair<std::shared_ptr<const TableAssignment>, Alphabet> read_assignment_table(std::istream& in);

} // namespace seupdate
