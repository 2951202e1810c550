#pragma once

// Text interchange: sequence files (JSON) and rendered blocks of the two-way
// array.  All numbers are canonical text, never floating point.
//
// Sequence file:
//   {"name": str, "domain": "int|rational|surd5|poly", "values": [str...], "meta": {...}}

#include <string>
#include <string_view>
#include <vector>

#include "stirling_kit/sequences.hpp"
#include "stirling_kit/transform.hpp"

namespace stirling_kit {

enum class OutputFormat { json, csv, table };

/// Accepts "json", "csv", "table"; std::invalid_argument otherwise.
OutputFormat parse_output_format(std::string_view text);

/// Canonical text of every value, in order.
std::vector<std::string> render_values(const SequenceValues& values);

/// Parses canonical texts in one domain; std::invalid_argument names the bad index.
SequenceValues parse_values(const std::vector<std::string>& texts, DomainTag domain);

/// Parses `text` as a sequence file.  Throws std::invalid_argument on bad
/// JSON, missing fields, an unknown domain, an empty value list, or a value
/// that does not parse in the declared domain.
SequenceRecord parse_sequence_file(std::string_view text);
/// Pretty-printed JSON with a trailing newline; meta values are strings.
std::string render_sequence_file(const SequenceRecord& record);
/// Reads and parses a file; std::runtime_error if it cannot be opened.
SequenceRecord load_sequence_file(const std::string& path);

/// One rendering of a sequence: the JSON file, a CSV line, or one value per line.
std::string render_sequence(const SequenceRecord& record, OutputFormat format);

/// A rendered array block: canonical text per entry plus how it was built.
struct MatrixText {
    std::string name;
    DomainTag domain;
    BuiltFrom built_from;
    std::vector<std::vector<std::string>> rows;
};

template <AdditiveDomain T>
MatrixText matrix_text(const SMatrix<T>& matrix, std::string name) {
    MatrixText out{std::move(name), domain_tag_of<T>(), matrix.built_from(), {}};
    for (const auto& row : matrix.entries()) {
        auto& line = out.rows.emplace_back();
        for (const auto& v : row) line.push_back(to_string(v));
    }
    return out;
}

/// JSON: {"name", "domain", "built_from", "rows": [[str...]...]} plus a
/// trailing newline.  CSV: one line per row.  Table: right-aligned columns.
std::string render_matrix(const MatrixText& matrix, OutputFormat format);

}  // namespace stirling_kit
