#include "binstylo/disasm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

#include "binstylo/errors.hpp"
#include "binstylo/util.hpp"

using nlohmann::json;

namespace binstylo::disasm {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_hex_string(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isxdigit(c); });
}

std::optional<std::uint64_t> parse_hex(std::string_view s) {
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s.remove_prefix(2);
    if (!is_hex_string(s)) return std::nullopt;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// One listing row -> mnemonic + operands, or nothing if the row is not an
// instruction (blank, comment, section header, continuation).
std::optional<InstructionLine> parse_row(std::string_view row, Dialect dialect) {
    std::string_view line = trim(row);
    if (line.empty()) return std::nullopt;

    switch (dialect) {
        case Dialect::canonical: {
            if (line.front() == '#') return std::nullopt;
            InstructionLine ins;
            std::size_t sp = line.find_first_of(" \t");
            if (sp == std::string_view::npos) {
                ins.mnemonic = to_lower(std::string(line));
            } else {
                ins.mnemonic = to_lower(std::string(line.substr(0, sp)));
                ins.operand_text = std::string(trim(line.substr(sp + 1)));
            }
            return ins;
        }
        case Dialect::ndisasm: {
            // <hex-addr>  <hex-bytes>  <mnemonic> <operands>
            auto fields = split_ws(line);
            if (fields.size() < 3) return std::nullopt; // continuation rows carry no mnemonic
            auto addr = parse_hex(fields[0]);
            if (!addr) return std::nullopt;
            std::string_view bytes = fields[1];
            if (!bytes.empty() && bytes.back() == '-') bytes.remove_suffix(1);
            if (!is_hex_string(bytes)) return std::nullopt;
            InstructionLine ins;
            ins.address = addr;
            ins.mnemonic = to_lower(fields[2]);
            std::string rest;
            for (std::size_t i = 3; i < fields.size(); ++i) {
                if (!rest.empty()) rest += ' ';
                rest += fields[i];
            }
            ins.operand_text = rest;
            return ins;
        }
        case Dialect::radare2_text: {
            // Strip graph glyphs r2 prepends to pd rows, then expect
            // `0x<addr> <bytes> <mnemonic> <operands...>` with an optional
            // trailing `; comment`.
            std::string cleaned;
            cleaned.reserve(line.size());
            for (char c : line) {
                if (static_cast<unsigned char>(c) < 0x80 && c != '|')
                    cleaned += c;
                // multi-byte box-drawing glyphs are dropped byte-wise
            }
            std::string_view body = trim(cleaned);
            std::size_t semi = body.find(';');
            if (semi != std::string_view::npos) body = trim(body.substr(0, semi));
            auto fields = split_ws(body);
            if (fields.size() < 3) return std::nullopt;
            if (fields[0].rfind("0x", 0) != 0) return std::nullopt;
            auto addr = parse_hex(fields[0]);
            if (!addr) return std::nullopt;
            std::string_view bytes = fields[1];
            // The bytes column is even-length hex, possibly elided with dots.
            std::string bare;
            for (char c : bytes)
                if (c != '.') bare += c;
            if (bare.empty() || bare.size() % 2 != 0 || !is_hex_string(bare)) return std::nullopt;
            InstructionLine ins;
            ins.address = addr;
            ins.mnemonic = to_lower(fields[2]);
            std::string rest;
            for (std::size_t i = 3; i < fields.size(); ++i) {
                if (!rest.empty()) rest += ' ';
                rest += fields[i];
            }
            ins.operand_text = rest;
            return ins;
        }
    }
    return std::nullopt;
}

} // namespace

Dialect dialect_from_name(const std::string& name) {
    if (name == "canonical") return Dialect::canonical;
    if (name == "ndisasm") return Dialect::ndisasm;
    if (name == "radare2_text" || name == "radare2") return Dialect::radare2_text;
    throw UnrecognizedDialect(name);
}

std::vector<InstructionLine> parse_listing(const std::string& text, Dialect dialect) {
    std::vector<InstructionLine> out;
    std::istringstream in(text);
    std::string row;
    std::optional<std::uint64_t> last_address;
    while (std::getline(in, row)) {
        auto ins = parse_row(row, dialect);
        if (!ins || ins->mnemonic.empty()) continue;
        if (ins->address) {
            if (last_address && *ins->address <= *last_address) continue;
            last_address = ins->address;
        }
        out.push_back(std::move(*ins));
    }
    if (out.empty()) throw EmptyListing("no instruction rows parsed");
    return out;
}

std::string serialize_canonical(const std::vector<InstructionLine>& lines) {
    std::string out;
    for (const auto& ins : lines) {
        out += ins.mnemonic;
        if (!ins.operand_text.empty()) {
            out += ' ';
            out += ins.operand_text;
        }
        out += '\n';
    }
    return out;
}

namespace {

bool is_dec_string(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Integer literal with magnitude >= 4096, hex or decimal.
bool is_large_constant(std::string_view tok) {
    std::uint64_t v = 0;
    if (tok.rfind("0x", 0) == 0) {
        auto p = parse_hex(tok);
        if (!p) return false;
        v = *p;
    } else if (is_dec_string(tok)) {
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, 10);
        if (ec == std::errc::result_out_of_range) return true;
        if (ec != std::errc() || ptr != tok.data() + tok.size()) return false;
    } else {
        return false;
    }
    return v >= 4096;
}

constexpr std::string_view kOperandDelims = " \t,[]()+*:-";

} // namespace

TokenStream tokenize(const std::vector<InstructionLine>& lines, bool normalize_constants,
                     SourceKind source_kind) {
    TokenStream stream;
    stream.source_kind = source_kind;
    stream.lines.reserve(lines.size());
    for (const auto& ins : lines) {
        std::vector<std::string> toks;
        toks.push_back(to_lower(ins.mnemonic));
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) return;
            std::string t = to_lower(cur);
            if (normalize_constants && is_large_constant(t)) t = "IMM";
            toks.push_back(std::move(t));
            cur.clear();
        };
        for (char c : ins.operand_text) {
            if (kOperandDelims.find(c) != std::string_view::npos)
                flush();
            else
                cur += c;
        }
        flush();
        stream.lines.push_back(std::move(toks));
    }
    return stream;
}

namespace {

Cfg parse_cfg_canonical(const std::string& text) {
    Cfg cfg;
    std::set<std::string> block_ids;
    std::istringstream in(text);
    std::string row;
    while (std::getline(in, row)) {
        std::string_view line = trim(row);
        if (line.empty() || line.front() == '#') continue;
        auto fields = split_ws(line);
        if (fields[0] == "block") {
            if (fields.size() < 2 || fields[1].empty())
                throw MalformedCfg("block line without id: " + row);
            std::string id = fields[1];
            if (!id.empty() && id.back() == ':') id.pop_back();
            if (id.empty()) throw MalformedCfg("block line without id: " + row);
            if (!block_ids.insert(id).second) throw MalformedCfg("duplicate block id " + id);
            BasicBlock block;
            block.block_id = id;
            for (std::size_t i = 2; i < fields.size(); ++i)
                block.mnemonics.push_back(to_lower(fields[i]));
            cfg.blocks.push_back(std::move(block));
        } else if (fields[0] == "edge") {
            if (fields.size() != 3) throw MalformedCfg("edge line needs two ids: " + row);
            cfg.edges.emplace_back(fields[1], fields[2]);
        } else {
            throw MalformedCfg("unrecognized line: " + row);
        }
    }
    for (const auto& [from, to] : cfg.edges) {
        if (!block_ids.count(from)) throw MalformedCfg("edge from unknown block " + from);
        if (!block_ids.count(to)) throw MalformedCfg("edge to unknown block " + to);
    }
    return cfg;
}

// radare2 `agj`: an array of functions, each with a "blocks" array. A block
// has "offset", "ops" (objects with an "opcode" string), and optional "jump"
// and "fail" target offsets. Targets outside the dumped blocks (tail calls and
// the like) are dropped rather than treated as errors.
Cfg parse_cfg_radare2_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedCfg(std::string("graph JSON: ") + e.what());
    }
    if (doc.is_object()) doc = json::array({doc});
    if (!doc.is_array()) throw MalformedCfg("graph JSON: expected array of functions");

    Cfg cfg;
    std::set<std::string> block_ids;
    std::vector<std::pair<std::string, std::string>> candidate_edges;
    for (const auto& fn : doc) {
        if (!fn.is_object() || !fn.contains("blocks")) continue;
        for (const auto& jb : fn["blocks"]) {
            if (!jb.is_object() || !jb.contains("offset")) continue;
            std::string id = std::to_string(jb["offset"].get<std::uint64_t>());
            if (!block_ids.insert(id).second) throw MalformedCfg("duplicate block id " + id);
            BasicBlock block;
            block.block_id = id;
            if (jb.contains("ops") && jb["ops"].is_array()) {
                for (const auto& op : jb["ops"]) {
                    std::string opcode = op.value("opcode", op.value("disasm", std::string{}));
                    auto words = split_ws(opcode);
                    if (!words.empty()) block.mnemonics.push_back(to_lower(words[0]));
                }
            }
            cfg.blocks.push_back(std::move(block));
            for (const char* key : {"jump", "fail"})
                if (jb.contains(key) && jb[key].is_number())
                    candidate_edges.emplace_back(id, std::to_string(jb[key].get<std::uint64_t>()));
        }
    }
    for (auto& edge : candidate_edges)
        if (block_ids.count(edge.second)) cfg.edges.push_back(std::move(edge));
    return cfg;
}

} // namespace

Cfg parse_cfg(const std::string& text) {
    std::string_view body = trim(text);
    if (!body.empty() && (body.front() == '[' || body.front() == '{'))
        return parse_cfg_radare2_json(text);
    return parse_cfg_canonical(text);
}

} // namespace binstylo::disasm
