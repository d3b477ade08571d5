#pragma once

#include <map>
#include <string>
#include <vector>

namespace binstylo::fuzzyc {

enum class TokenKind { identifier, keyword, number, string_lit, char_lit, punct, unknown };

struct LexToken {
    TokenKind kind = TokenKind::unknown;
    std::string text;
    int line = 1;
};

enum class NodeType {
    TranslationUnit,
    FunctionDef,
    ParameterList,
    Parameter,
    CompoundStatement,
    IfStatement,
    ElseClause,
    WhileStatement,
    DoStatement,
    ForStatement,
    SwitchStatement,
    CaseLabel,
    BreakStatement,
    ContinueStatement,
    ReturnStatement,
    GotoStatement,
    LabelStatement,
    Declaration,
    AssignmentExpr,
    ConditionalExpr,
    BinaryExpr,
    UnaryExpr,
    CallExpr,
    ArgumentList,
    IndexExpr,
    MemberExpr,
    CastExpr,
    Identifier,
    Literal,
    UnknownStatement,
    UnknownExpr,
};

constexpr int kNodeTypeCount = 31;
const char* node_type_name(NodeType t);

struct AstNode {
    NodeType type = NodeType::UnknownStatement;
    std::string token_text;        // empty when the node carries no token
    std::vector<AstNode> children;

    bool is_leaf() const { return children.empty(); }
};

struct FuzzyAst {
    AstNode root;        // always a TranslationUnit
    int node_count = 0;  // nodes reachable from root, root included
    int max_depth = 0;   // root depth is 0
};

// The fixed C++ keyword list (73 entries, shipped as data/cxx_keywords.txt).
const std::vector<std::string>& cxx_keywords();
bool is_cxx_keyword(const std::string& word);

// Total: any byte string lexes. Comments and whitespace are dropped,
// unrecognized byte runs become `unknown` tokens, `#...` lines become a
// single punct token.
std::vector<LexToken> lex_pseudo_c(const std::string& text);

// Total: any token list parses. Constructs outside the island grammar turn
// into UnknownStatement/UnknownExpr nodes; recovery resynchronizes at the
// next `;` or the `}` matching the current brace depth.
FuzzyAst parse_pseudo_c(const std::vector<LexToken>& tokens);

// Depth of every node occurrence keyed by its type (root depth 0).
std::map<NodeType, std::vector<int>> node_depths(const FuzzyAst& ast);

// Debug form for golden tests: `(Type)`, `(Type "token")`, or
// `(Type ["token"] child...)` with C-style escapes inside the quotes.
std::string dump_sexpr(const AstNode& node);

} // namespace binstylo::fuzzyc
