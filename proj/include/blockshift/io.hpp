#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockshift/complex_matrix.hpp"
#include "blockshift/shift.hpp"

namespace blockshift {

// On-disk description of a block shift.  `dims` is kept only for documents
// with no blocks (k = 1), where the dimension is otherwise unrecoverable;
// parsing normalizes redundant dims away so serialize-then-parse is identity.
struct BlockShiftDocument {
    std::optional<std::string> name;
    std::vector<ComplexMatrix> blocks;
    std::optional<std::vector<int>> dims;
};

// Parses JSON text of the form
//   {"name": "...", "blocks": [{"rows": r, "cols": c,
//                               "entries": [[[re, im], ...], ...]}, ...],
//    "dims": [n]}
// with "name" optional and "dims" required exactly when "blocks" is empty.
// Malformed JSON throws ParseError with 1-based line/column; schema and
// shape violations throw ValidationError naming the offending block.
BlockShiftDocument parse_blockshift_document(const std::string& text);

// Reads and parses a file; unreadable paths throw IoError.
BlockShiftDocument load_blockshift_document(const std::string& path);

// Full-precision JSON rendering; parses back to an identical document.
std::string serialize_blockshift_document(const BlockShiftDocument& doc);

BlockShift to_blockshift(const BlockShiftDocument& doc);
BlockShiftDocument to_document(const BlockShift& bs,
                               std::optional<std::string> name = std::nullopt);

}  // namespace blockshift
