#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qbs/bool_expr.h"
#include "qbs/oracle.h"

namespace qbs {

/// Contents of an oracle description file:
///   { "n": int, "kind": "table"|"minterms"|"expr", "data": ... }
/// `data` is a hex string (bit j of the decoded bytes, LSB first, is f(j)),
/// an array of minterm indices, or an expression string.
struct OracleFile {
    enum class Kind { Table, Minterms, Expr };

    int n = 0;
    Kind kind = Kind::Table;
    TruthTable table;
    std::optional<BoolExpr> expr;
};

/// Thrown for unreadable or malformed oracle files.
class OracleFileError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

OracleFile parse_oracle_json(std::string_view text, int max_bits = kDefaultMaxSearchBits);
OracleFile load_oracle_file(const std::filesystem::path& path, int max_bits = kDefaultMaxSearchBits);

std::string encode_table_hex(const TruthTable& table);
TruthTable decode_table_hex(std::string_view hex, int n);

/// Serializes a table-backed oracle as `{"n":..,"kind":"table","data":"<hex>"}`.
std::string oracle_table_json(const TruthTable& table, int n);

}  // namespace qbs
