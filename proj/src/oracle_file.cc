#include "qbs/oracle_file.h"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace qbs {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

size_t table_bytes(int n) { return std::max<size_t>(1, (size_t{1} << n) / 8); }

}  // namespace

std::string encode_table_hex(const TruthTable& table) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::vector<uint8_t> bytes(std::max<size_t>(1, (table.values.size() + 7) / 8), 0);
    for (size_t j = 0; j < table.values.size(); j++) {
        bytes[j / 8] |= static_cast<uint8_t>(table.values[j] << (j % 8));
    }
    std::string out;
    for (auto b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xF]);
    }
    return out;
}

TruthTable decode_table_hex(std::string_view hex, int n) {
    size_t expected = 2 * table_bytes(n);
    if (hex.size() != expected) {
        throw OracleFileError("table hex for n = " + std::to_string(n) + " must have " + std::to_string(expected) +
                              " digits, got " + std::to_string(hex.size()));
    }
    uint64_t size = uint64_t{1} << n;
    TruthTable table;
    table.values.assign(size, 0);
    for (size_t byte = 0; byte < expected / 2; byte++) {
        int hi = hex_digit(hex[2 * byte]);
        int lo = hex_digit(hex[2 * byte + 1]);
        if (hi < 0 || lo < 0) {
            throw OracleFileError("invalid hex digit in table data");
        }
        auto value = static_cast<uint8_t>(hi << 4 | lo);
        for (size_t bit = 0; bit < 8; bit++) {
            uint64_t j = byte * 8 + bit;
            uint8_t v = (value >> bit) & 1;
            if (j < size) {
                table.values[j] = v;
            } else if (v) {
                throw OracleFileError("table data sets bit " + std::to_string(j) + " beyond 2^n entries");
            }
        }
    }
    return table;
}

std::string oracle_table_json(const TruthTable& table, int n) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["kind"] = "table";
    j["data"] = encode_table_hex(table);
    return j.dump();
}

OracleFile parse_oracle_json(std::string_view text, int max_bits) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw OracleFileError(std::string("malformed oracle JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("kind") || !j.contains("data")) {
        throw OracleFileError("oracle JSON needs keys \"n\", \"kind\" and \"data\"");
    }
    if (!j["n"].is_number_integer()) {
        throw OracleFileError("\"n\" must be an integer");
    }
    OracleFile file;
    auto n = j["n"].get<int64_t>();
    if (n < 1 || n > max_bits) {
        throw OracleFileError("\"n\" = " + std::to_string(n) + " outside [1, " + std::to_string(max_bits) + "]");
    }
    file.n = static_cast<int>(n);
    const auto& data = j["data"];
    std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    try {
        if (kind == "table") {
            if (!data.is_string()) {
                throw OracleFileError("table data must be a hex string");
            }
            file.kind = OracleFile::Kind::Table;
            file.table = decode_table_hex(data.get<std::string>(), file.n);
        } else if (kind == "minterms") {
            if (!data.is_array()) {
                throw OracleFileError("minterm data must be an array of integers");
            }
            std::vector<uint64_t> minterms;
            for (const auto& v : data) {
                if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<int64_t>() >= 0)) {
                    throw OracleFileError("minterm entries must be non-negative integers");
                }
                minterms.push_back(v.get<uint64_t>());
            }
            file.kind = OracleFile::Kind::Minterms;
            file.table = build_truth_table(minterms, file.n, max_bits).table();
        } else if (kind == "expr") {
            if (!data.is_string()) {
                throw OracleFileError("expr data must be a string");
            }
            file.kind = OracleFile::Kind::Expr;
            file.expr = parse_expression(data.get<std::string>(), file.n);
            file.table = build_truth_table(*file.expr, file.n, max_bits).table();
        } else {
            throw OracleFileError("\"kind\" must be one of table, minterms, expr");
        }
    } catch (const OracleFileError&) {
        throw;
    } catch (const std::exception& e) {
        throw OracleFileError(e.what());
    }
    return file;
}

OracleFile load_oracle_file(const std::filesystem::path& path, int max_bits) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw OracleFileError("cannot open oracle file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_oracle_json(buffer.str(), max_bits);
}

}  // namespace qbs
