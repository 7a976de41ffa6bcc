// Copyright 2026 The CSE Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <string>
#include <vector>

#include "cse/error.hpp"
#include "cse/io.hpp"

namespace cse {
namespace {

struct Token {
  enum Kind { kWord, kString, kOpen, kClose } kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (c == '{') {
      tokens.push_back({Token::kOpen, "{"});
      ++pos;
    } else if (c == '}') {
      tokens.push_back({Token::kClose, "}"});
      ++pos;
    } else if (c == '"') {
      std::string value;
      ++pos;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
        value += text[pos++];
      }
      if (pos >= text.size()) throw ParseError("nfg", "unterminated string");
      ++pos;
      tokens.push_back({Token::kString, std::move(value)});
    } else {
      std::size_t end = pos;
      while (end < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[end])) &&
             text[end] != '{' && text[end] != '}' && text[end] != '"') {
        ++end;
      }
      tokens.push_back({Token::kWord, std::string(text.substr(pos, end - pos))});
      pos = end;
    }
  }
  return tokens;
}

// Integer, p/q, decimal, or decimal with an exponent ("1.5e-3").
Rational parse_number(const std::string& text) {
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) return parse_rational(text);
  Rational mantissa = parse_rational(text.substr(0, e));
  const long exponent = std::stol(text.substr(e + 1));
  Rational scale = boost::multiprecision::pow(
      Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mantissa / scale) : Rational(mantissa * scale);
}

class Reader {
 public:
  explicit Reader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) throw ParseError("nfg", "unexpected end of file");
    return tokens_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  void expect(Token::Kind kind, const char* what) {
    if (next().kind != kind) {
      throw ParseError("nfg token " + std::to_string(pos_), std::string("expected ") + what);
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Game import_nfg(std::string_view text) {
  Reader in(tokenize(text));
  Token magic = in.next();
  if (magic.kind != Token::kWord || magic.text != "NFG") {
    throw ParseError("nfg", "missing NFG header");
  }
  if (in.next().text != "1") throw UnsupportedNfgFeature("only NFG version 1");
  const std::string precision = in.next().text;
  if (precision != "R" && precision != "D") {
    throw ParseError("nfg", "expected R or D after the version");
  }
  Token title = in.next();
  if (title.kind != Token::kString) throw ParseError("nfg", "expected a title string");

  std::vector<std::string> players;
  in.expect(Token::kOpen, "'{' before player names");
  while (in.peek().kind != Token::kClose) {
    Token name = in.next();
    if (name.kind != Token::kString) throw ParseError("nfg", "expected a player name");
    players.push_back(name.text);
  }
  in.next();

  std::vector<std::vector<std::string>> actions;
  in.expect(Token::kOpen, "'{' before the strategy block");
  while (in.peek().kind != Token::kClose) {
    if (in.peek().kind == Token::kOpen) {
      in.next();
      std::vector<std::string> names;
      while (in.peek().kind != Token::kClose) {
        Token name = in.next();
        if (name.kind != Token::kString) {
          throw ParseError("nfg", "expected a strategy name");
        }
        names.push_back(name.text);
      }
      in.next();
      actions.push_back(std::move(names));
    } else {
      Token count = in.next();
      int m = 0;
      try {
        m = std::stoi(count.text);
      } catch (const std::exception&) {
        throw ParseError("nfg", "bad strategy count '" + count.text + "'");
      }
      if (m < 1) throw ParseError("nfg", "strategy counts must be positive");
      std::vector<std::string> names;
      for (int a = 0; a < m; ++a) names.push_back(std::to_string(a + 1));
      actions.push_back(std::move(names));
    }
  }
  in.next();
  if (actions.size() != players.size()) {
    throw ArityMismatch(std::to_string(players.size()) + " players but " +
                        std::to_string(actions.size()) + " strategy sets");
  }
  if (players.size() < 2) {
    throw ArityMismatch("a game needs at least two players, got " +
                        std::to_string(players.size()));
  }
  if (!in.done() && in.peek().kind == Token::kString) in.next();  // comment
  if (!in.done() && in.peek().kind == Token::kOpen) {
    throw UnsupportedNfgFeature("outcome-based NFG files are not supported");
  }

  const std::size_t n = players.size();
  std::vector<std::size_t> sizes;
  std::size_t total = 1;
  for (const auto& a : actions) {
    sizes.push_back(a.size());
    total *= a.size();
  }
  std::vector<PayoffVector> payoffs(total);
  // Legacy order: player 1 fastest. Native order: last player fastest.
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t entry = 0; entry < total; ++entry) {
    std::size_t native = 0;
    for (std::size_t i = 0; i < n; ++i) native = native * sizes[i] + digits[i];
    PayoffVector u;
    for (std::size_t i = 0; i < n; ++i) {
      if (in.done()) {
        throw ArityMismatch("expected " + std::to_string(total * n) +
                            " payoff values");
      }
      Token value = in.next();
      if (value.kind != Token::kWord) throw ParseError("nfg", "expected a payoff");
      try {
        u.push_back(parse_number(value.text));
      } catch (const std::exception& e) {
        throw ParseError("nfg payoff " + std::to_string(entry * n + i), e.what());
      }
    }
    payoffs[native] = std::move(u);
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < sizes[i]) break;
      digits[i] = 0;
    }
  }
  if (!in.done()) throw ArityMismatch("trailing values after the payoff list");
  return Game(std::move(players), std::move(actions), std::move(payoffs),
              title.text);
}

}  // namespace cse
