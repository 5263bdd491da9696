#pragma once

// Text forms of partitions, permutations and degree vectors, and JSON
// records for index tuples and product expansions.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qschub/maps.hpp"
#include "qschub/oracle/coeff_table.hpp"

namespace qschub {

/// "2,2,1"; the empty string and "0" both give the empty partition.
Partition parse_partition(std::string_view text);
/// "2,3,5,1,4" or, for n <= 9, "23514".
Permutation parse_permutation(std::string_view text);
/// "0,1,0,0" or "0100".
DegreeVector parse_degree(std::string_view text);

/// An aff record may carry the m and n it was produced from.
struct AffRecord {
    AffIndex index;
    std::optional<RectContext> ctx;
};

using IndexRecord = std::variant<GrIndex, FlIndex, AffRecord>;

std::string to_json(const GrIndex& x);
std::string to_json(const FlIndex& x);
std::string to_json(const AffIndex& x, const std::optional<RectContext>& ctx = std::nullopt);
std::string to_json(const IndexRecord& rec);

/// Throws ParseError on malformed JSON or missing fields, DomainError when
/// the fields do not form a valid index.
IndexRecord parse_index_record(std::string_view json);

std::string to_json(const GrTable& table, const RectContext& ctx);
std::string to_json(const FlTable& table, int n);

/// Human-readable one-term-per-line forms.
std::string to_pretty(const GrTable& table);
std::string to_pretty(const FlTable& table);
std::string to_pretty(const IndexRecord& rec);

}  // namespace qschub
