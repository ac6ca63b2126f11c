#include "blockshift/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "blockshift/errors.hpp"

namespace blockshift {

namespace {

using nlohmann::json;

[[noreturn]] void throw_parse_error(const std::string& text, size_t byte,
                                    const std::string& what) {
    // nlohmann reports the byte index one past the last read character.
    size_t pos = byte > 0 ? byte - 1 : 0;
    if (pos > text.size()) pos = text.size();
    int line = 1, col = 1;
    for (size_t i = 0; i < pos; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    // nlohmann's message restates its own location ("[json.exception...]
    // parse error at line L, column C: ..."); keep only the explanation.
    std::string detail = what;
    if (const size_t at = detail.find("column "); at != std::string::npos) {
        if (const size_t sep = detail.find(": ", at); sep != std::string::npos)
            detail = detail.substr(sep + 2);
    }
    throw ParseError("malformed JSON: " + detail, line, col);
}

[[noreturn]] void block_error(size_t index, const std::string& what) {
    throw ValidationError("block " + std::to_string(index + 1) + ": " + what);
}

int require_positive_int(const json& v, size_t index, const char* field) {
    if (!v.is_number_integer() || v.get<long long>() < 1)
        block_error(index, std::string(field) + " must be a positive integer");
    return static_cast<int>(v.get<long long>());
}

ComplexMatrix parse_block(const json& b, size_t index) {
    if (!b.is_object()) block_error(index, "must be an object");
    if (!b.contains("rows") || !b.contains("cols") || !b.contains("entries"))
        block_error(index, "needs rows, cols and entries");
    const int rows = require_positive_int(b["rows"], index, "rows");
    const int cols = require_positive_int(b["cols"], index, "cols");
    const json& entries = b["entries"];
    if (!entries.is_array() || entries.size() != static_cast<size_t>(rows))
        block_error(index, "entries must be an array of " + std::to_string(rows) + " rows");
    std::vector<Complex> flat;
    flat.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    for (int i = 0; i < rows; ++i) {
        const json& row = entries[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<size_t>(cols))
            block_error(index, "row " + std::to_string(i + 1) + " must have " +
                                   std::to_string(cols) + " entries");
        for (int j = 0; j < cols; ++j) {
            const json& e = row[static_cast<size_t>(j)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                block_error(index, "entry (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) +
                                       ") must be a [re, im] pair of numbers");
            const double re = e[0].get<double>();
            const double im = e[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                block_error(index, "entry (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ") must be finite");
            flat.emplace_back(re, im);
        }
    }
    return ComplexMatrix(rows, cols, flat);
}

}  // namespace

BlockShiftDocument parse_blockshift_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw_parse_error(text, e.byte, e.what());
    } catch (const json::exception& e) {
        // e.g. number overflow to infinity: bad values, not bad syntax
        throw ValidationError(e.what());
    }
    if (!doc.is_object()) throw ValidationError("document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "name" && key != "blocks" && key != "dims")
            throw ValidationError("unknown field '" + key + "'");
    }

    BlockShiftDocument out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ValidationError("name must be a string");
        out.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("blocks") || !doc["blocks"].is_array())
        throw ValidationError("document needs a 'blocks' array");
    const json& blocks = doc["blocks"];
    for (size_t j = 0; j < blocks.size(); ++j)
        out.blocks.push_back(parse_block(blocks[j], j));
    for (size_t j = 0; j + 1 < out.blocks.size(); ++j)
        if (out.blocks[j].cols() != out.blocks[j + 1].rows())
            throw ValidationError("block " + std::to_string(j + 2) + " has " +
                                  std::to_string(out.blocks[j + 1].rows()) +
                                  " rows but block " + std::to_string(j + 1) + " has " +
                                  std::to_string(out.blocks[j].cols()) + " columns");

    if (doc.contains("dims")) {
        const json& dims = doc["dims"];
        if (!dims.is_array() || dims.empty())
            throw ValidationError("dims must be a non-empty array of positive integers");
        std::vector<int> d;
        for (const json& v : dims) {
            if (!v.is_number_integer() || v.get<long long>() < 1)
                throw ValidationError("dims must be a non-empty array of positive integers");
            d.push_back(static_cast<int>(v.get<long long>()));
        }
        if (out.blocks.empty()) {
            if (d.size() != 1)
                throw ValidationError("a document with no blocks needs dims = [n]");
            out.dims = d;
        } else {
            // Redundant dims are checked against the blocks, then dropped.
            std::vector<int> inferred;
            inferred.push_back(out.blocks.front().rows());
            for (const ComplexMatrix& b : out.blocks) inferred.push_back(b.cols());
            if (d != inferred)
                throw ValidationError("dims disagree with the block shapes");
        }
    } else if (out.blocks.empty()) {
        throw ValidationError("a document with no blocks needs dims = [n]");
    }
    return out;
}

BlockShiftDocument load_blockshift_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read file: " + path);
    return parse_blockshift_document(buf.str());
}

std::string serialize_blockshift_document(const BlockShiftDocument& doc) {
    json j = json::object();
    if (doc.name) j["name"] = *doc.name;
    j["blocks"] = json::array();
    for (const ComplexMatrix& b : doc.blocks) {
        json rows = json::array();
        for (int i = 0; i < b.rows(); ++i) {
            json row = json::array();
            for (int c = 0; c < b.cols(); ++c)
                row.push_back(json::array({b(i, c).real(), b(i, c).imag()}));
            rows.push_back(std::move(row));
        }
        j["blocks"].push_back({{"rows", b.rows()}, {"cols", b.cols()},
                               {"entries", std::move(rows)}});
    }
    if (doc.blocks.empty() && doc.dims) j["dims"] = *doc.dims;
    return j.dump(2) + "\n";
}

BlockShift to_blockshift(const BlockShiftDocument& doc) {
    if (doc.blocks.empty()) return BlockShift(doc.dims->front());
    return BlockShift(doc.blocks);
}

BlockShiftDocument to_document(const BlockShift& bs, std::optional<std::string> name) {
    BlockShiftDocument doc;
    doc.name = std::move(name);
    doc.blocks = bs.blocks();
    if (doc.blocks.empty()) doc.dims = std::vector<int>{bs.total_dim()};
    return doc;
}

}  // namespace blockshift
