// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>
#include <vector>

#include "revsim/errors.hpp"
#include "revsim/rng.hpp"
#include "revsim/tokenize.hpp"

using namespace revsim;

namespace {

std::vector<std::string> toks(const TokenSeq& seq) { return seq.tokens; }

// Random snippet from a small code-ish grammar, always well-formed.
std::string random_snippet(Rng& rng) {
  static const char* pieces[] = {"x",  "y1",   "foo", "=", "+",  "(", ")",
                                 "{",  "}",    ";",   ",", "42", "if",
                                 "\"a b\"", "'c'", "<", ">", "."};
  std::string out;
  const std::size_t len = rng.range(1, 30);
  for (std::size_t i = 0; i < len; ++i) {
    if (i) out += rng.below(4) == 0 ? "  " : " ";
    out += pieces[rng.below(sizeof(pieces) / sizeof(pieces[0]))];
  }
  return out;
}

}  // namespace

TEST_CASE("tokenize_lines basic splits") {
  CHECK(toks(tokenize_lines("a\nb\n")) == std::vector<std::string>{"a", "b"});
  CHECK(toks(tokenize_lines("")).empty());
  CHECK(toks(tokenize_lines("x\n\ny")) ==
        std::vector<std::string>{"x", kBlankLine, "y"});
  CHECK(toks(tokenize_lines("a\r\nb")) == std::vector<std::string>{"a", "b"});
  CHECK(tokenize_lines("hi").granularity == Granularity::Line);
}

TEST_CASE("tokenize_lines round trip reproduces normalized source") {
  const std::string text = "x\n\ny";
  const TokenSeq seq = tokenize_lines(text);
  CHECK(reconstruct(seq) == text);

  // idempotent under re-tokenization
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    std::string doc;
    const std::size_t lines = rng.range(0, 8);
    for (std::size_t i = 0; i < lines; ++i) {
      if (rng.below(3) != 0) doc += random_snippet(rng);
      doc += '\n';
    }
    const TokenSeq once = tokenize_lines(doc);
    const TokenSeq twice = tokenize_lines(reconstruct(once));
    CHECK(once.tokens == twice.tokens);
  }
}

TEST_CASE("tokenize_code splits identifiers and punctuation") {
  CHECK(toks(tokenize_code("x = x+1", LanguageTag::Python)) ==
        std::vector<std::string>{"x", "=", "x", "+", "1"});
  CHECK(toks(tokenize_code("f(\"a b\")", LanguageTag::Python)) ==
        std::vector<std::string>{"f", "(", "\"a b\"", ")"});
  CHECK(toks(tokenize_code("", LanguageTag::Python)).empty());
  CHECK(toks(tokenize_code("a.b_c1", LanguageTag::Cpp)) ==
        std::vector<std::string>{"a", ".", "b_c1"});
}

TEST_CASE("tokenize_code keeps literals atomic per language") {
  CHECK(toks(tokenize_code("'a b' + x", LanguageTag::Python)) ==
        std::vector<std::string>{"'a b'", "+", "x"});
  // C-family: ' groups only when it looks like a char literal
  CHECK(toks(tokenize_code("c = 'x';", LanguageTag::Cpp)) ==
        std::vector<std::string>{"c", "=", "'x'", ";"});
  // Rust lifetimes stay split
  CHECK(toks(tokenize_code("fn f<'a>(x: &'a str)", LanguageTag::Rust)) ==
        std::vector<std::string>{"fn", "f", "<", "'", "a", ">", "(", "x", ":",
                                 "&", "'", "a", "str", ")"});
  CHECK(toks(tokenize_code("let c = 'x';", LanguageTag::Rust)) ==
        std::vector<std::string>{"let", "c", "=", "'x'", ";"});
  // Go raw strings
  CHECK(toks(tokenize_code("s := `a b`", LanguageTag::Go)) ==
        std::vector<std::string>{"s", ":", "=", "`a b`"});
  // Python triple quotes
  CHECK(toks(tokenize_code("'''doc string''' . x", LanguageTag::Python)) ==
        std::vector<std::string>{"'''doc string'''", ".", "x"});
  // plain text: quotes are punctuation
  CHECK(toks(tokenize_code("don't", LanguageTag::PlainText)) ==
        std::vector<std::string>{"don", "'", "t"});
}

TEST_CASE("tokenize_code flags unterminated literals and degrades") {
  std::vector<TokenizeWarning> warnings;
  const TokenSeq seq =
      tokenize_code("x = \"abc", LanguageTag::Python, &warnings);
  CHECK(toks(seq) == std::vector<std::string>{"x", "=", "\"abc"});
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].offset == 4);
}

TEST_CASE("tokenize_code round trip over random snippets") {
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::string snippet = random_snippet(rng);
    const TokenSeq once = tokenize_code(snippet, LanguageTag::Python);
    const TokenSeq twice =
        tokenize_code(reconstruct(once), LanguageTag::Python);
    CHECK(once.tokens == twice.tokens);
    for (const auto& t2 : once.tokens) {
      CHECK(!t2.empty());
      CHECK(t2.find_first_not_of(" \t\n") != std::string::npos);
    }
  }
}

TEST_CASE("tokenize_chars splits UTF-8 code points") {
  CHECK(toks(tokenize_chars("ab")) == std::vector<std::string>{"a", "b"});
  CHECK(toks(tokenize_chars("a⏎b")) ==
        std::vector<std::string>{"a", "⏎", "b"});
}

TEST_CASE("strip_comments python") {
  CHECK(strip_comments("x=1 # note", LanguageTag::Python) == "x=1");
  CHECK(strip_comments("s=\"#not a comment\"", LanguageTag::Python) ==
        "s=\"#not a comment\"");
  CHECK(strip_comments("x=1\n# whole line\ny=2", LanguageTag::Python) ==
        "x=1\ny=2");
  CHECK(strip_comments("s='''# in\n# docstring'''", LanguageTag::Python) ==
        "s='''# in\n# docstring'''");
}

TEST_CASE("strip_comments c family") {
  CHECK(strip_comments("a;/*c*/b;", LanguageTag::Cpp) == "a;b;");
  CHECK(strip_comments("a; // end\nb;", LanguageTag::Cpp) == "a;\nb;");
  CHECK(strip_comments("s = \"//not\";", LanguageTag::JavaScript) ==
        "s = \"//not\";");
  // block comment spanning lines keeps statements apart
  CHECK(strip_comments("a; /* x\ny */ b;", LanguageTag::Cpp) == "a;\n b;");
  // unterminated block comment strips to end of input
  CHECK(strip_comments("a; /* open\nb;", LanguageTag::Cpp) == "a;");
}

TEST_CASE("strip_comments rust nests blocks") {
  CHECK(strip_comments("a; /* x /* y */ z */ b;", LanguageTag::Rust) ==
        "a;  b;");
  // C++ does not nest; the second "*/" survives
  CHECK(strip_comments("a; /* x /* y */ z */ b;", LanguageTag::Cpp) ==
        "a;  z */ b;");
}

TEST_CASE("strip_comments fixture set per language") {
  struct Fixture {
    LanguageTag lang;
    const char* in;
    const char* out;
  };
  const Fixture fixtures[] = {
      {LanguageTag::Python, "x = 1  # trailing", "x = 1"},
      {LanguageTag::Python, "# only\n# comments", ""},
      {LanguageTag::Python, "a\n\nb", "a\nb"},
      {LanguageTag::Python, "u = 'a#b' + \"c#d\"", "u = 'a#b' + \"c#d\""},
      {LanguageTag::Python, "\"\"\"doc # keep\"\"\"\nx=1",
       "\"\"\"doc # keep\"\"\"\nx=1"},
      {LanguageTag::JavaScript, "var s = `tpl // keep`; // drop",
       "var s = `tpl // keep`;"},
      {LanguageTag::JavaScript, "f(); /* a */ g();", "f();  g();"},
      {LanguageTag::Java, "int x; // c\nint y; /* d */", "int x;\nint y;"},
      {LanguageTag::Go, "s := `raw // keep`\n// drop\nx := 1",
       "s := `raw // keep`\nx := 1"},
      {LanguageTag::Go, "ch := '/'\t// comment", "ch := '/'"},
      {LanguageTag::Cpp, "int a = b / c; // not a comment start",
       "int a = b / c;"},
      {LanguageTag::Cpp, "/*lead*/int x;", "int x;"},
      {LanguageTag::Cpp, "char c = '\"'; // quote char", "char c = '\"';"},
      {LanguageTag::Rust, "let x = 1; /// doc", "let x = 1;"},
      {LanguageTag::Rust, "//! module doc\nfn f() {}", "fn f() {}"},
      {LanguageTag::PlainText, "# not code\n// plain", "# not code\n// plain"},
  };
  for (const auto& f : fixtures) {
    CAPTURE(f.in);
    CHECK(strip_comments(f.in, f.lang) == f.out);
  }
}

TEST_CASE("strip_comments is idempotent") {
  Rng rng(31);
  const LanguageTag langs[] = {LanguageTag::Python, LanguageTag::Cpp,
                               LanguageTag::Rust, LanguageTag::Go};
  for (int t = 0; t < 100; ++t) {
    std::string doc;
    const std::size_t lines = rng.range(1, 6);
    for (std::size_t i = 0; i < lines; ++i) {
      doc += random_snippet(rng);
      if (rng.below(3) == 0) doc += " # c";
      if (rng.below(3) == 0) doc += " // c";
      if (rng.below(4) == 0) doc += " /* c */";
      doc += '\n';
    }
    for (LanguageTag lang : langs) {
      const std::string once = strip_comments(doc, lang);
      CHECK(strip_comments(once, lang) == once);
    }
  }
}

TEST_CASE("tokenizers survive arbitrary byte soup") {
  Rng rng(47);
  const LanguageTag langs[] = {LanguageTag::Python,  LanguageTag::JavaScript,
                               LanguageTag::Java,    LanguageTag::Go,
                               LanguageTag::Cpp,     LanguageTag::Rust,
                               LanguageTag::PlainText};
  for (int t = 0; t < 300; ++t) {
    std::string bytes;
    const std::size_t len = rng.below(64);
    for (std::size_t i = 0; i < len; ++i)
      bytes += static_cast<char>(rng.below(256));
    for (LanguageTag lang : langs) {
      std::vector<TokenizeWarning> warnings;
      const TokenSeq code = tokenize_code(bytes, lang, &warnings);
      for (const auto& tok : code.tokens) CHECK(!tok.empty());
      const TokenSeq lines = tokenize_lines(bytes);
      for (const auto& tok : lines.tokens) CHECK(!tok.empty());
      tokenize_chars(bytes);
      const std::string stripped = strip_comments(bytes, lang);
      CHECK(strip_comments(stripped, lang) == stripped);
    }
  }
}

TEST_CASE("granularity and language names round trip") {
  CHECK(parse_granularity("line") == Granularity::Line);
  CHECK(parse_granularity("token") == Granularity::CodeToken);
  CHECK_THROWS_AS(parse_granularity("word"), BadParamsError);
  CHECK(parse_language("python") == LanguageTag::Python);
  CHECK(parse_language("js") == LanguageTag::JavaScript);
  CHECK(parse_language("C++") == LanguageTag::Cpp);
  CHECK(parse_language("plain") == LanguageTag::PlainText);
  CHECK_THROWS_AS(parse_language("cobol"), BadParamsError);
}
