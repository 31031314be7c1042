#include "picard/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "picard/errors.hpp"
#include "picard/hashing.hpp"

namespace picard::fpgroups {

namespace {

constexpr const char* kReserved[] = {"group", "gens", "rels", "domain", "gen"};

bool is_reserved(std::string_view s) {
  return std::find(std::begin(kReserved), std::end(kReserved), s) != std::end(kReserved);
}

bool ident_start(int c) { return std::isalpha(c) || c == '_'; }
bool ident_char(int c) { return std::isalnum(c) || c == '_' || c == '.'; }

/// Pulls characters from a stream one at a time, hashing every byte and
/// tracking the position for error messages. Memory use is O(1).
class CharSource {
 public:
  explicit CharSource(std::istream& in) : in_(in) {}

  int peek() {
    if (replay_pos_ < replay_.size()) return static_cast<unsigned char>(replay_[replay_pos_]);
    fill();
    return cur_;
  }
  int get() {
    int c;
    if (replay_pos_ < replay_.size()) {
      c = static_cast<unsigned char>(replay_[replay_pos_++]);
    } else {
      fill();
      c = cur_;
      have_ = false;
    }
    if (c == '\n') {
      ++line_;
      col_ = 0;
    } else if (c >= 0) {
      ++col_;
    }
    return c;
  }
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_ + 1; }

  /// Rewinds to the start of the input by replaying the given prefix, which
  /// must be exactly the characters consumed so far. Bytes are hashed when
  /// first pulled from the stream, so replaying does not double-hash.
  void restart_with(std::string prefix) {
    replay_ = std::move(prefix);
    replay_pos_ = 0;
    line_ = 1;
    col_ = 0;
  }

  void drain() {
    while (get() >= 0) {
    }
  }
  std::string digest() { return hash_.hex_digest(); }

 private:
  void fill() {
    if (have_) return;
    const int c = in_.get();
    if (c == std::char_traits<char>::eof()) {
      cur_ = -1;
    } else {
      const char byte = static_cast<char>(c);
      hash_.update(&byte, 1);
      cur_ = c;
    }
    have_ = true;
  }

  std::istream& in_;
  hashing::Sha256 hash_;
  std::string replay_;
  std::size_t replay_pos_ = 0;
  int cur_ = -1;
  bool have_ = false;
  std::size_t line_ = 1;
  std::size_t col_ = 0;
};

struct Token {
  enum class Kind { Ident, Number, Symbol };
  Kind kind = Kind::Symbol;
  std::string text;

  bool is_sym(std::string_view s) const { return kind == Kind::Symbol && text == s; }
};

/// Splits a flat string into tokens (used for native statements, relator
/// chunks and single-word parsing).
std::vector<Token> tokenize(const std::string& text, std::size_t line = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && ident_char(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Ident, text.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Number, text.substr(i, j - i)});
      i = j;
      continue;
    }
    if (c == ':' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({Token::Kind::Symbol, ":="});
      i += 2;
      continue;
    }
    if (std::string_view("*^(),|<>;-=").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c)});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, i + 1);
  }
  return out;
}

/// Recursive-descent word parser over a token vector. Supports '*', '^n',
/// '^-n', parentheses, 'a^b' conjugation and '(a,b,...)' left-normed
/// commutators. parse_word() stops at the first token that cannot continue
/// the word, so several whitespace-separated words can be read in sequence.
class WordParser {
 public:
  WordParser(std::vector<Token> tokens, const std::vector<std::string>& gens, std::size_t line)
      : tokens_(std::move(tokens)), gens_(gens), line_(line) {}

  bool at_end() const { return pos_ >= tokens_.size(); }
  std::size_t cursor() const { return pos_; }

  Word parse_word() {
    Word w = parse_factor();
    while (!at_end() && tokens_[pos_].is_sym("*")) {
      ++pos_;
      Word f = parse_factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word parse_single_word() {
    Word w = parse_word();
    if (!at_end()) {
      throw ParseError("unexpected trailing token '" + tokens_[pos_].text + "' in word", line_, 0);
    }
    return w;
  }

 private:
  Word parse_factor() {
    Word base = parse_atom();
    if (!at_end() && tokens_[pos_].is_sym("^")) {
      ++pos_;
      if (!at_end() && (tokens_[pos_].kind == Token::Kind::Number || tokens_[pos_].is_sym("-"))) {
        return power(base, parse_int());
      }
      // Conjugation a^b = b^-1 a b.
      Word by = parse_atom();
      Word out = invert(by);
      out.insert(out.end(), base.begin(), base.end());
      out.insert(out.end(), by.begin(), by.end());
      return out;
    }
    return base;
  }

  Word parse_atom() {
    if (at_end()) throw ParseError("unexpected end of word", line_, 0);
    const Token& t = tokens_[pos_];
    if (t.kind == Token::Kind::Ident) {
      const auto it = std::find(gens_.begin(), gens_.end(), t.text);
      if (it == gens_.end()) throw ParseError("unknown generator '" + t.text + "'", line_, 0);
      ++pos_;
      return Word{static_cast<Letter>(std::distance(gens_.begin(), it) + 1)};
    }
    if (t.is_sym("(")) {
      ++pos_;
      Word w = parse_word();
      while (!at_end() && tokens_[pos_].is_sym(",")) {
        ++pos_;
        Word rhs = parse_word();
        // Commutator (a, b) = a^-1 b^-1 a b, left-normed for longer lists.
        Word out = invert(w);
        Word ri = invert(rhs);
        out.insert(out.end(), ri.begin(), ri.end());
        out.insert(out.end(), w.begin(), w.end());
        out.insert(out.end(), rhs.begin(), rhs.end());
        w = std::move(out);
      }
      if (at_end() || !tokens_[pos_].is_sym(")")) throw ParseError("missing ')' in word", line_, 0);
      ++pos_;
      return w;
    }
    throw ParseError("unexpected token '" + t.text + "' in word", line_, 0);
  }

  long parse_int() {
    bool neg = false;
    if (!at_end() && tokens_[pos_].is_sym("-")) {
      neg = true;
      ++pos_;
    }
    if (at_end() || tokens_[pos_].kind != Token::Kind::Number) {
      throw ParseError("expected integer exponent", line_, 0);
    }
    const long v = std::stol(tokens_[pos_].text);
    ++pos_;
    return neg ? -v : v;
  }

  static Word power(const Word& base, long exp) {
    const Word b = exp < 0 ? invert(base) : base;
    const auto n = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Word out;
    out.reserve(b.size() * n);
    for (unsigned long i = 0; i < n; ++i) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  std::vector<Token> tokens_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

class PresentationBuilder {
 public:
  void set_name(std::string n) { p_.name = std::move(n); }

  void add_generator(const std::string& g, std::size_t line) {
    if (is_reserved(g)) throw ParseError("'" + g + "' is a reserved word", line, 0);
    if (p_.generator_index(g)) throw ParseError("duplicate generator '" + g + "'", line, 0);
    p_.generators.push_back(g);
  }

  void add_relator(const Word& raw) {
    Word w = cyclic_reduce(raw);
    if (w.empty()) {
      ++p_.dropped_empty_relators;
      return;
    }
    if (std::find(p_.relators.begin(), p_.relators.end(), w) != p_.relators.end()) {
      ++p_.dropped_duplicate_relators;
      return;
    }
    p_.relators.push_back(std::move(w));
  }

  const std::vector<std::string>& generators() const { return p_.generators; }

  Presentation take(std::string digest) {
    p_.content_hash = std::move(digest);
    return std::move(p_);
  }

 private:
  Presentation p_;
};

// ---- native format -----------------------------------------------------

void parse_native(CharSource& src, PresentationBuilder& builder) {
  bool in_rels = false;
  bool saw_anything = false;
  while (true) {
    if (src.peek() < 0) break;
    // One statement: up to ';', newline or EOF; '#' comments run to EOL.
    std::string stmt;
    const std::size_t stmt_line = src.line();
    while (true) {
      const int c = src.get();
      if (c < 0 || c == ';' || c == '\n') break;
      if (c == '#') {
        while (src.peek() >= 0 && src.peek() != '\n') src.get();
        continue;
      }
      stmt.push_back(static_cast<char>(c));
    }
    auto tokens = tokenize(stmt, stmt_line);
    if (tokens.empty()) continue;
    saw_anything = true;

    const Token& head = tokens.front();
    if (head.kind == Token::Kind::Ident && head.text == "group") {
      if (tokens.size() != 2 || tokens[1].kind != Token::Kind::Ident) {
        throw ParseError("expected 'group <name>'", stmt_line, 0);
      }
      builder.set_name(tokens[1].text);
      continue;
    }
    if (head.kind == Token::Kind::Ident && head.text == "gens") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].kind != Token::Kind::Ident) {
          throw ParseError("generator names must be identifiers", stmt_line, 0);
        }
        builder.add_generator(tokens[i].text, stmt_line);
      }
      continue;
    }
    std::vector<Token> rest;
    if (head.kind == Token::Kind::Ident && head.text == "rels") {
      in_rels = true;
      rest.assign(tokens.begin() + 1, tokens.end());
    } else if (in_rels) {
      rest = std::move(tokens);
    } else {
      throw ParseError("unexpected statement before 'rels': '" + stmt + "'", stmt_line, 0);
    }
    // One or more whitespace-separated words; boundaries are unambiguous
    // because juxtaposition is not multiplication in this grammar.
    WordParser wp(std::move(rest), builder.generators(), stmt_line);
    while (!wp.at_end()) builder.add_relator(wp.parse_word());
  }
  if (!saw_anything) throw ParseError("empty presentation source");
}

// ---- computer-algebra subset grammar ------------------------------------

/// Token scanner over the char source; skips whitespace and '//' and
/// '/* ... */' comments.
class StreamLexer {
 public:
  explicit StreamLexer(CharSource& src) : src_(src) {}

  Token next() {
    skip_space();
    const std::size_t line = src_.line();
    const int c = src_.peek();
    if (c < 0) throw ParseError("unexpected end of input", line, src_.col());
    if (ident_start(c)) {
      std::string s;
      while (ident_char(src_.peek())) s.push_back(static_cast<char>(src_.get()));
      return {Token::Kind::Ident, std::move(s)};
    }
    if (std::isdigit(c)) {
      std::string s;
      while (std::isdigit(src_.peek())) s.push_back(static_cast<char>(src_.get()));
      return {Token::Kind::Number, std::move(s)};
    }
    src_.get();
    if (c == ':' && src_.peek() == '=') {
      src_.get();
      return {Token::Kind::Symbol, ":="};
    }
    if (std::string_view("*^(),|<>;-=").find(static_cast<char>(c)) != std::string_view::npos) {
      return {Token::Kind::Symbol, std::string(1, static_cast<char>(c))};
    }
    throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line,
                     src_.col());
  }

  bool at_eof() {
    skip_space();
    return src_.peek() < 0;
  }

  std::size_t line() const { return src_.line(); }

 private:
  void skip_space() {
    while (true) {
      int c = src_.peek();
      if (c >= 0 && std::isspace(c)) {
        src_.get();
        continue;
      }
      if (c == '/') {
        src_.get();
        const int c2 = src_.peek();
        if (c2 == '/') {
          while (src_.peek() >= 0 && src_.peek() != '\n') src_.get();
          continue;
        }
        if (c2 == '*') {
          src_.get();
          int prev = 0;
          while (src_.peek() >= 0) {
            const int cur = src_.get();
            if (prev == '*' && cur == '/') break;
            prev = cur;
          }
          continue;
        }
        throw ParseError("unexpected '/'", src_.line(), src_.col());
      }
      break;
    }
  }

  CharSource& src_;
};

void expect_sym(StreamLexer& lex, std::string_view s) {
  const Token t = lex.next();
  if (!t.is_sym(s)) {
    throw ParseError("expected '" + std::string(s) + "', got '" + t.text + "'", lex.line(), 0);
  }
}

void parse_algebra_subset(CharSource& src, PresentationBuilder& builder) {
  StreamLexer lex(src);
  const Token name = lex.next();
  if (name.kind != Token::Kind::Ident) throw ParseError("expected presentation name", lex.line(), 0);
  builder.set_name(name.text);

  // Outer generator binding: Name< g1, g2, ... > := Group< g1, ... | ... >;
  std::vector<std::string> outer;
  expect_sym(lex, "<");
  while (true) {
    const Token t = lex.next();
    if (t.kind != Token::Kind::Ident) throw ParseError("expected generator name", lex.line(), 0);
    outer.push_back(t.text);
    const Token sep = lex.next();
    if (sep.is_sym(">")) break;
    if (!sep.is_sym(",")) throw ParseError("expected ',' or '>'", lex.line(), 0);
  }
  expect_sym(lex, ":=");
  const Token kw = lex.next();
  if (kw.kind != Token::Kind::Ident || kw.text != "Group") {
    throw ParseError("expected 'Group', got '" + kw.text + "'", lex.line(), 0);
  }
  expect_sym(lex, "<");
  while (true) {
    const Token t = lex.next();
    if (t.kind != Token::Kind::Ident) throw ParseError("expected generator name", lex.line(), 0);
    builder.add_generator(t.text, lex.line());
    const Token sep = lex.next();
    if (sep.is_sym("|")) break;
    if (!sep.is_sym(",")) throw ParseError("expected ',' or '|'", lex.line(), 0);
  }
  if (outer != builder.generators()) {
    throw ParseError("generator lists of the binding and the Group<...> body differ");
  }

  // Relators: token chunks separated by top-level ',' until the closing '>'.
  std::vector<Token> chunk;
  int depth = 0;
  while (true) {
    const std::size_t line = lex.line();
    Token t = lex.next();
    if (depth == 0 && (t.is_sym(",") || t.is_sym(">"))) {
      if (chunk.empty()) throw ParseError("empty relator", line, 0);
      WordParser wp(std::move(chunk), builder.generators(), line);
      builder.add_relator(wp.parse_single_word());
      chunk.clear();
      if (t.is_sym(">")) break;
      continue;
    }
    if (t.is_sym("(")) ++depth;
    if (t.is_sym(")")) --depth;
    chunk.push_back(std::move(t));
  }
  if (!lex.at_eof()) {
    const Token t = lex.next();
    if (!t.is_sym(";")) throw ParseError("expected ';' after '>'", lex.line(), 0);
  }
}

}  // namespace

std::optional<int> Presentation::generator_index(std::string_view gen_name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == gen_name) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

Presentation parse_presentation(std::istream& in, const std::string& source_name) {
  CharSource src(in);
  PresentationBuilder builder;

  // Detect the format: skip leading whitespace and '#' comment lines; the
  // native format begins with one of its keywords, the algebra subset with
  // the presentation name. The consumed prefix is replayed afterwards.
  std::string probe;
  std::string consumed;
  while (true) {
    const int c = src.peek();
    if (c < 0) break;
    if (!probe.empty() && !ident_char(c)) break;
    if (std::isspace(c)) {
      consumed.push_back(static_cast<char>(src.get()));
      continue;
    }
    if (c == '#') {
      while (src.peek() >= 0 && src.peek() != '\n') consumed.push_back(static_cast<char>(src.get()));
      continue;
    }
    if (ident_char(c)) {
      probe.push_back(static_cast<char>(c));
      consumed.push_back(static_cast<char>(src.get()));
      continue;
    }
    break;
  }
  src.restart_with(std::move(consumed));

  if (is_reserved(probe)) {
    parse_native(src, builder);
  } else {
    parse_algebra_subset(src, builder);
  }

  src.drain();
  Presentation p = builder.take(src.digest());
  if (p.name.empty()) p.name = source_name;
  if (p.generators.empty()) throw ParseError("presentation declares no generators");
  return p;
}

Presentation parse_presentation_text(const std::string& text, const std::string& source_name) {
  std::istringstream in(text);
  return parse_presentation(in, source_name);
}

Presentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open presentation file: " + path);
  return parse_presentation(in, path);
}

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  WordParser wp(tokenize(text), generators, 0);
  return free_reduce(wp.parse_single_word());
}

Presentation normal_closure_quotient(const Presentation& p, const std::vector<Word>& ws) {
  Presentation out = p;
  const int n = static_cast<int>(p.generators.size());
  for (const Word& w : ws) {
    for (Letter l : w) {
      const int g = l > 0 ? l : -l;
      if (g < 1 || g > n) {
        throw std::out_of_range("relator word uses generator index " + std::to_string(g) +
                                " outside the presentation");
      }
    }
    Word reduced = cyclic_reduce(w);
    if (reduced.empty()) continue;
    if (std::find(out.relators.begin(), out.relators.end(), reduced) != out.relators.end()) {
      continue;
    }
    out.relators.push_back(std::move(reduced));
  }
  return out;
}

Presentation truncate_presentation(const Presentation& p, size_t k) {
  if (k > p.relators.size()) {
    throw std::out_of_range("truncation to " + std::to_string(k) + " relators, but only " +
                            std::to_string(p.relators.size()) + " present");
  }
  Presentation out = p;
  if (k == p.relators.size()) return out;
  out.relators.resize(k);
  out.truncated_from = p.truncated_from.value_or(p.relators.size());
  return out;
}

const hermitian::QuadMatrix* GeneratorMap::find_complex(std::string_view gen_name) const {
  for (const auto& [n, m] : complex_entries) {
    if (n == gen_name) return &m;
  }
  return nullptr;
}

const hermitian::QuatMatrix* GeneratorMap::find_quaternion(std::string_view gen_name) const {
  for (const auto& [n, m] : quaternion_entries) {
    if (n == gen_name) return &m;
  }
  return nullptr;
}

GeneratorMap parse_generator_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file: " + path);
  GeneratorMap map;
  bool have_domain = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "domain") {
      std::string what;
      ls >> what;
      if (what == "quaternion") {
        map.quaternion = true;
      } else if (what.rfind("d=", 0) == 0) {
        map.spec = rings::RingSpec(std::stol(what.substr(2)));
      } else {
        throw ParseError("expected 'domain d=<n>' or 'domain quaternion'", lineno, 0);
      }
      have_domain = true;
      continue;
    }
    if (kw == "gen") {
      if (!have_domain) throw ParseError("'gen' before 'domain'", lineno, 0);
      std::string gen_name;
      if (!(ls >> gen_name)) throw ParseError("expected generator name", lineno, 0);
      std::string literal;
      std::getline(ls, literal);
      if (map.quaternion) {
        map.quaternion_entries.emplace_back(gen_name, hermitian::parse_matrix_quaternion(literal));
      } else {
        map.complex_entries.emplace_back(gen_name, hermitian::parse_matrix(literal, *map.spec));
      }
      continue;
    }
    throw ParseError("unknown map-file keyword '" + kw + "'", lineno, 0);
  }
  if (!have_domain) throw ParseError("map file has no 'domain' line: " + path);
  return map;
}

}  // namespace picard::fpgroups
