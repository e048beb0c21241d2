#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sl12/characters.hpp"
#include "sl12/modules.hpp"
#include "sl12/presentations.hpp"
#include "sl12/verify.hpp"

namespace sl12 {

using Json = nlohmann::json;

/// {"h1": "p/q", "h2": "r/s"}; rationals always render canonically.
Json weight_json(const Weight& w);

/// The structure-constant table: every generator (id, name, parity) and
/// every ordered pair with its bracket as [coefficient, generator] rows.
/// Zero brackets serialize as empty rows.
Json bracket_table_json();

/// Module dump: dimension, cyclic vector, optional basis labels, weights,
/// parities, and every nonzero action matrix for degrees 0..max_deg as
/// (row, col, value) triplets sorted by position.
Json module_json(const FiniteModule& m, int max_deg);

/// Sorted list [{h1, h2, mult}], or [{deg, h1, h2, mult}] when graded.
Json character_json(const FormalCharacter& f);
Json character_json(const GradedCharacter& g);

/// {suite, case, pass, failures, checks: [{suite, case, params, relation,
/// pass, witness?}]}; the witness appears only on failing rows.
Json report_json(const RelationReport& rep);

/// Verification battery outcome as {pass, criteria: [{name, suite, pass,
/// checks, summary, detail?}]}.
Json criteria_json(const std::vector<CriterionResult>& results);

/// Canonical rendering used for files and golden comparisons: two-space
/// indent, sorted keys (the map type is ordered), trailing newline.
std::string dump_json(const Json& j);

/// Writes through a temporary sibling and renames into place, so readers
/// never observe a partial file. Throws std::runtime_error on I/O failure.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace sl12
