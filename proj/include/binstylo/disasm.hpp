#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace binstylo::disasm {

enum class Dialect { canonical, ndisasm, radare2_text };

struct InstructionLine {
    std::optional<std::uint64_t> address;
    std::string mnemonic;      // lowercased at parse time
    std::string operand_text;  // raw, trailing comment stripped

    bool operator==(const InstructionLine&) const = default;
};

enum class SourceKind { linear, flow };

// Per-line token lists. The first token of every line is its mnemonic.
struct TokenStream {
    std::vector<std::vector<std::string>> lines;
    SourceKind source_kind = SourceKind::linear;
};

struct BasicBlock {
    std::string block_id;
    std::vector<std::string> mnemonics;
};

struct Cfg {
    std::vector<BasicBlock> blocks;
    std::vector<std::pair<std::string, std::string>> edges; // (from, to) block ids
};

// Parses a disassembly listing into instruction rows. Comment, blank, and
// header rows are skipped. Rows whose address does not advance are dropped so
// the strictly-increasing address invariant holds on any input.
std::vector<InstructionLine> parse_listing(const std::string& text, Dialect dialect);

Dialect dialect_from_name(const std::string& name); // throws UnrecognizedDialect

// `mnemonic SP operand_text` rows; inverse of parse_listing on the canonical
// dialect.
std::string serialize_canonical(const std::vector<InstructionLine>& lines);

// Splits every line into [mnemonic] ++ operand tokens. Operands are split on
// whitespace, commas and the delimiters []()+*:- (all discarded); tokens are
// lowercased. With normalize_constants, integer literals of magnitude >= 4096
// become the placeholder "IMM" (absolute addresses are per-binary noise).
TokenStream tokenize(const std::vector<InstructionLine>& lines, bool normalize_constants,
                     SourceKind source_kind = SourceKind::linear);

// Canonical CFG dump (`block <id>: m1 m2 ...` / `edge <from> <to>`) or, when
// the text starts with '[' or '{', radare2 `agj` graph JSON. Operands inside
// blocks are dropped so block features are layout-independent.
Cfg parse_cfg(const std::string& text);

} // namespace binstylo::disasm
