#pragma once

// Text syntax: cyclic word `(a b c)`, multicyclic type `{(a b c) (d) ()}`,
// typed arity `{(a b)};1`.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nsmod/orders.hpp"

namespace nsmod::text {

namespace detail {

inline bool is_label_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '{' && c != '}' &&
         c != ';' && c != ',';
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string label() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_label_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected a label");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string rest() {
    skip_ws();
    return std::string(s_.substr(pos_));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline LinearWord parse_word(Cursor& in) {
  in.expect('(');
  LinearWord w;
  while (in.peek() != ')') {
    if (in.at_end()) in.fail("unterminated word");
    w.push_back(in.label());
  }
  in.expect(')');
  return w;
}

inline MulticyclicType parse_type(Cursor& in) {
  in.expect('{');
  std::vector<LinearWord> words;
  while (in.peek() != '}') {
    if (in.at_end()) in.fail("unterminated type");
    words.push_back(parse_word(in));
  }
  in.expect('}');
  if (words.empty()) in.fail("a type needs at least one component");
  return MulticyclicType::from_words(words);
}

}  // namespace detail

inline LinearWord parse_linear_word(std::string_view s) {
  detail::Cursor in(s);
  LinearWord w = detail::parse_word(in);
  if (!in.at_end()) in.fail("trailing input");
  return w;
}

inline CyclicWord parse_cyclic(std::string_view s) { return CyclicWord(parse_linear_word(s)); }

inline MulticyclicType parse_type(std::string_view s) {
  detail::Cursor in(s);
  MulticyclicType t = detail::parse_type(in);
  if (!in.at_end()) in.fail("trailing input");
  return t;
}

/// `{(a b) ()};1` or a bare type with genus supplied separately.
inline TypedArity parse_arity(std::string_view s, int default_genus = 0) {
  detail::Cursor in(s);
  MulticyclicType t = detail::parse_type(in);
  int g = default_genus;
  if (in.peek() == ';') {
    in.expect(';');
    std::string num = in.rest();
    try {
      std::size_t used = 0;
      g = std::stoi(num, &used);
      if (used != num.size() || g < 0) throw std::invalid_argument(num);
    } catch (const std::exception&) {
      in.fail("bad genus '" + num + "'");
    }
  } else if (!in.at_end()) {
    in.fail("trailing input");
  }
  return {std::move(t), g};
}

inline std::string format(const LinearWord& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out + ")";
}

inline std::string format(const CyclicWord& w) { return format(w.repr()); }

inline std::string format(const MulticyclicType& t) {
  std::string out = "{";
  for (std::size_t i = 0; i < t.components().size(); ++i) {
    if (i) out += ' ';
    out += format(t.components()[i]);
  }
  return out + "}";
}

inline std::string format(const TypedArity& a) { return format(a.stype) + ";" + std::to_string(a.g); }

/// Comma or whitespace separated label list: `a,b,c`.
inline std::vector<Label> parse_label_list(std::string_view s) {
  std::vector<Label> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace nsmod::text
