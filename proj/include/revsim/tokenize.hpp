// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef REVSIM_TOKENIZE_HPP
#define REVSIM_TOKENIZE_HPP

#include <string>
#include <vector>

namespace revsim {

enum class Granularity { Line, CodeToken, Character };

enum class LanguageTag { Python, JavaScript, Java, Go, Cpp, Rust, PlainText };

// Blank lines tokenize to this sentinel instead of an empty token, so
// line-level LCS can still align them.
inline const std::string kBlankLine = "⏎";  // ⏎

// A finite sequence of non-empty token atoms at one granularity; the
// universal operand of all alignment and scoring routines.
struct TokenSeq {
  std::vector<std::string> tokens;
  Granularity granularity = Granularity::CodeToken;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

struct TokenizeWarning {
  std::string message;
  std::size_t offset = 0;  // byte offset into the source text
};

// One token per line, terminators removed ("\n" and "\r\n"); a trailing
// newline yields no extra token; empty lines become kBlankLine.
TokenSeq tokenize_lines(const std::string& text);

// Lexical code tokenizer: maximal identifier/number runs (non-ASCII bytes
// count as identifier characters so UTF-8 sequences stay intact), string
// and char literals as single atoms, every other punctuation character its
// own token, whitespace separates. A literal still open at end of input is
// emitted as one token and reported through `warnings` when given.
TokenSeq tokenize_code(const std::string& text, LanguageTag lang,
                       std::vector<TokenizeWarning>* warnings = nullptr);

// One token per UTF-8 code point (whitespace included).
TokenSeq tokenize_chars(const std::string& text);

TokenSeq tokenize(const std::string& text, Granularity g, LanguageTag lang,
                  std::vector<TokenizeWarning>* warnings = nullptr);

// Removes line and block comments per language family, leaves comment
// markers inside string literals alone, right-trims lines and drops lines
// that are blank afterwards. PlainText is the identity. Block comments
// that span lines are replaced by a single newline so unrelated statements
// do not fuse.
std::string strip_comments(const std::string& text, LanguageTag lang);

// Inverse-ish of tokenization: rebuilds the normalized text form
// (lines joined with "\n" and sentinels mapped back to empty lines; code
// tokens joined with single spaces; characters concatenated).
std::string reconstruct(const TokenSeq& seq);

const char* to_string(Granularity g);
const char* to_string(LanguageTag lang);

// Accepts the CLI spellings ("line"/"token"/"char", "python", "js", ...).
// Throws BadParamsError on unknown names.
Granularity parse_granularity(const std::string& name);
LanguageTag parse_language(const std::string& name);

}  // namespace revsim

#endif  // REVSIM_TOKENIZE_HPP
