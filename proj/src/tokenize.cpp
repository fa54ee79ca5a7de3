// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "revsim/tokenize.hpp"

#include <algorithm>
#include <cctype>

#include "revsim/errors.hpp"

namespace revsim {

namespace {

bool is_ident_char(unsigned char c) {
  // Non-ASCII bytes are identifier characters so multi-byte UTF-8
  // sequences never split.
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

bool is_space_char(unsigned char c) { return std::isspace(c) != 0; }

struct QuoteRules {
  bool double_quote = true;   // "..."
  bool single_quote = true;   // '...' scanned like a string
  bool char_heuristic = false;  // '...' only when it looks like a char literal
  bool backtick = false;      // `...`
  bool backtick_raw = false;  // backtick literal without escapes (Go)
  bool triple = false;        // '''...''' and """...""" (Python)
};

QuoteRules quote_rules(LanguageTag lang) {
  QuoteRules q;
  switch (lang) {
    case LanguageTag::Python:
      q.triple = true;
      break;
    case LanguageTag::JavaScript:
      q.backtick = true;
      break;
    case LanguageTag::Go:
      q.backtick = true;
      q.backtick_raw = true;
      q.char_heuristic = true;
      break;
    case LanguageTag::Java:
    case LanguageTag::Cpp:
      q.char_heuristic = true;
      break;
    case LanguageTag::Rust:
      // ' is mostly a lifetime marker; only obvious char literals group.
      q.single_quote = false;
      q.char_heuristic = true;
      break;
    case LanguageTag::PlainText:
      // Apostrophes and quotes in prose are ordinary punctuation.
      q.double_quote = false;
      q.single_quote = false;
      break;
  }
  return q;
}

// Scans a quoted literal starting at `i` (which indexes the opening quote).
// Returns one past the closing quote, or text.size() when unterminated;
// `closed`, when given, reports whether the closing quote was found.
std::size_t scan_quoted(const std::string& text, std::size_t i, char quote,
                        bool escapes, std::size_t quote_len = 1,
                        bool* closed = nullptr) {
  std::size_t j = i + quote_len;
  while (j < text.size()) {
    if (escapes && text[j] == '\\' && j + 1 < text.size()) {
      j += 2;
      continue;
    }
    if (text[j] == quote) {
      if (quote_len == 1 ||
          text.compare(j, quote_len, std::string(quote_len, quote)) == 0) {
        if (closed) *closed = true;
        return j + quote_len;
      }
    }
    ++j;
  }
  if (closed) *closed = false;
  return text.size();
}

// True when text[i] == '\'' opens something that looks like a char literal:
// 'x' or an escape like '\n' / '\x41'.
bool looks_like_char_literal(const std::string& text, std::size_t i) {
  if (i + 2 >= text.size()) return false;
  if (text[i + 1] == '\\') {
    std::size_t j = i + 2;
    while (j < text.size() && j < i + 8 && text[j] != '\'') ++j;
    return j < text.size() && text[j] == '\'';
  }
  return text[i + 2] == '\'';
}

}  // namespace

TokenSeq tokenize_lines(const std::string& text) {
  TokenSeq seq;
  seq.granularity = Granularity::Line;
  if (text.empty()) return seq;
  std::size_t start = 0;
  auto push_line = [&](std::size_t end) {
    std::size_t len = end - start;
    if (len > 0 && text[end - 1] == '\r') --len;
    std::string line = text.substr(start, len);
    seq.tokens.push_back(line.empty() ? kBlankLine : line);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      push_line(i);
      start = i + 1;
    }
  }
  if (start < text.size()) push_line(text.size());
  return seq;
}

TokenSeq tokenize_code(const std::string& text, LanguageTag lang,
                       std::vector<TokenizeWarning>* warnings) {
  TokenSeq seq;
  seq.granularity = Granularity::CodeToken;
  const QuoteRules rules = quote_rules(lang);
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_space_char(c)) {
      ++i;
      continue;
    }
    if (is_ident_char(c)) {
      std::size_t j = i + 1;
      while (j < n && is_ident_char(static_cast<unsigned char>(text[j]))) ++j;
      seq.tokens.push_back(text.substr(i, j - i));
      i = j;
      continue;
    }
    // literal openers
    std::size_t end = 0;
    bool is_literal = false;
    bool closed = false;
    if (c == '"' && rules.double_quote) {
      if (rules.triple && text.compare(i, 3, "\"\"\"") == 0)
        end = scan_quoted(text, i, '"', true, 3, &closed);
      else
        end = scan_quoted(text, i, '"', true, 1, &closed);
      is_literal = true;
    } else if (c == '\'' && rules.triple && text.compare(i, 3, "'''") == 0) {
      end = scan_quoted(text, i, '\'', true, 3, &closed);
      is_literal = true;
    } else if (c == '\'' && rules.single_quote) {
      end = scan_quoted(text, i, '\'', true, 1, &closed);
      is_literal = true;
    } else if (c == '\'' && rules.char_heuristic &&
               looks_like_char_literal(text, i)) {
      end = scan_quoted(text, i, '\'', true, 1, &closed);
      is_literal = true;
    } else if (c == '`' && rules.backtick) {
      end = scan_quoted(text, i, '`', !rules.backtick_raw, 1, &closed);
      is_literal = true;
    }
    if (is_literal) {
      if (!closed && warnings)
        warnings->push_back({"unterminated literal", i});
      seq.tokens.push_back(text.substr(i, end - i));
      i = end;
      continue;
    }
    // any other byte is its own punctuation token
    seq.tokens.push_back(text.substr(i, 1));
    ++i;
  }
  return seq;
}

TokenSeq tokenize_chars(const std::string& text) {
  TokenSeq seq;
  seq.granularity = Granularity::Character;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (c >= 0xF0)
      len = 4;
    else if (c >= 0xE0)
      len = 3;
    else if (c >= 0xC0)
      len = 2;
    len = std::min(len, text.size() - i);
    seq.tokens.push_back(text.substr(i, len));
    i += len;
  }
  return seq;
}

TokenSeq tokenize(const std::string& text, Granularity g, LanguageTag lang,
                  std::vector<TokenizeWarning>* warnings) {
  switch (g) {
    case Granularity::Line:
      return tokenize_lines(text);
    case Granularity::CodeToken:
      return tokenize_code(text, lang, warnings);
    case Granularity::Character:
      return tokenize_chars(text);
  }
  return {};
}

namespace {

struct CommentRules {
  std::string line_a;   // "#" or "//"
  std::string block_open;
  std::string block_close;
  bool nested_blocks = false;
};

CommentRules comment_rules(LanguageTag lang) {
  CommentRules r;
  switch (lang) {
    case LanguageTag::Python:
      r.line_a = "#";
      break;
    case LanguageTag::JavaScript:
    case LanguageTag::Java:
    case LanguageTag::Go:
    case LanguageTag::Cpp:
      r.line_a = "//";
      r.block_open = "/*";
      r.block_close = "*/";
      break;
    case LanguageTag::Rust:
      r.line_a = "//";
      r.block_open = "/*";
      r.block_close = "*/";
      r.nested_blocks = true;
      break;
    case LanguageTag::PlainText:
      break;
  }
  return r;
}

std::string drop_blank_lines(const std::string& text) {
  std::vector<std::string> kept;
  std::size_t start = 0;
  auto take = [&](std::size_t end) {
    std::string line = text.substr(start, end - start);
    while (!line.empty() &&
           is_space_char(static_cast<unsigned char>(line.back())))
      line.pop_back();
    if (!line.empty()) kept.push_back(line);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      take(i);
      start = i + 1;
    }
  }
  if (start < text.size()) take(text.size());
  std::string out;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (k) out += '\n';
    out += kept[k];
  }
  return out;
}

}  // namespace

std::string strip_comments(const std::string& text, LanguageTag lang) {
  if (lang == LanguageTag::PlainText) return text;
  const CommentRules rules = comment_rules(lang);
  const QuoteRules quotes = quote_rules(lang);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    // string/char literals pass through untouched
    std::size_t lit_end = 0;
    if (c == '"' && quotes.double_quote) {
      if (quotes.triple && text.compare(i, 3, "\"\"\"") == 0)
        lit_end = scan_quoted(text, i, '"', true, 3);
      else
        lit_end = scan_quoted(text, i, '"', true);
    } else if (c == '\'' && quotes.triple && text.compare(i, 3, "'''") == 0) {
      lit_end = scan_quoted(text, i, '\'', true, 3);
    } else if (c == '\'' && quotes.single_quote) {
      lit_end = scan_quoted(text, i, '\'', true);
    } else if (c == '\'' && quotes.char_heuristic &&
               looks_like_char_literal(text, i)) {
      lit_end = scan_quoted(text, i, '\'', true);
    } else if (c == '`' && quotes.backtick) {
      lit_end = scan_quoted(text, i, '`', !quotes.backtick_raw);
    }
    if (lit_end > 0) {
      out.append(text, i, lit_end - i);
      i = lit_end;
      continue;
    }
    if (!rules.line_a.empty() && text.compare(i, rules.line_a.size(), rules.line_a) == 0) {
      while (i < n && text[i] != '\n') ++i;
      continue;  // keep the newline itself
    }
    if (!rules.block_open.empty() &&
        text.compare(i, rules.block_open.size(), rules.block_open) == 0) {
      std::size_t depth = 1;
      std::size_t j = i + rules.block_open.size();
      bool had_newline = false;
      while (j < n && depth > 0) {
        if (rules.nested_blocks &&
            text.compare(j, rules.block_open.size(), rules.block_open) == 0) {
          ++depth;
          j += rules.block_open.size();
        } else if (text.compare(j, rules.block_close.size(), rules.block_close) == 0) {
          --depth;
          j += rules.block_close.size();
        } else {
          if (text[j] == '\n') had_newline = true;
          ++j;
        }
      }
      if (had_newline) out += '\n';
      i = j;
      continue;
    }
    out += c;
    ++i;
  }
  return drop_blank_lines(out);
}

std::string reconstruct(const TokenSeq& seq) {
  std::string out;
  switch (seq.granularity) {
    case Granularity::Line:
      for (std::size_t k = 0; k < seq.tokens.size(); ++k) {
        if (k) out += '\n';
        if (seq.tokens[k] != kBlankLine) out += seq.tokens[k];
      }
      // a trailing blank line is only representable with a final newline
      if (!seq.tokens.empty() && seq.tokens.back() == kBlankLine) out += '\n';
      break;
    case Granularity::CodeToken:
      for (std::size_t k = 0; k < seq.tokens.size(); ++k) {
        if (k) out += ' ';
        out += seq.tokens[k];
      }
      break;
    case Granularity::Character:
      for (const auto& t : seq.tokens) out += t;
      break;
  }
  return out;
}

const char* to_string(Granularity g) {
  switch (g) {
    case Granularity::Line:
      return "line";
    case Granularity::CodeToken:
      return "token";
    case Granularity::Character:
      return "char";
  }
  return "?";
}

const char* to_string(LanguageTag lang) {
  switch (lang) {
    case LanguageTag::Python:
      return "python";
    case LanguageTag::JavaScript:
      return "javascript";
    case LanguageTag::Java:
      return "java";
    case LanguageTag::Go:
      return "go";
    case LanguageTag::Cpp:
      return "cpp";
    case LanguageTag::Rust:
      return "rust";
    case LanguageTag::PlainText:
      return "plain";
  }
  return "?";
}

Granularity parse_granularity(const std::string& name) {
  if (name == "line") return Granularity::Line;
  if (name == "token") return Granularity::CodeToken;
  if (name == "char" || name == "character") return Granularity::Character;
  throw BadParamsError("unknown granularity: " + name);
}

LanguageTag parse_language(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "python" || s == "py") return LanguageTag::Python;
  if (s == "javascript" || s == "js") return LanguageTag::JavaScript;
  if (s == "java") return LanguageTag::Java;
  if (s == "go") return LanguageTag::Go;
  if (s == "cpp" || s == "c++" || s == "cxx" || s == "c") return LanguageTag::Cpp;
  if (s == "rust" || s == "rs") return LanguageTag::Rust;
  if (s == "plain" || s == "plaintext" || s == "text" || s == "txt" || s.empty())
    return LanguageTag::PlainText;
  throw BadParamsError("unknown language: " + name);
}

}  // namespace revsim
