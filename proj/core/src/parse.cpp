#include "eqrank/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "eqrank/error.hpp"

namespace eqrank {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  bool take_times() {
    skip_space();
    if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
      ++pos_;
      return true;
    }
    return false;
  }

  SimpleType factor() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ == text_.size()) throw ParseError("expected a simple factor such as A1 or E8, found end of input", pos_);
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_])));
    if (c < 'A' || c > 'G')
      throw ParseError(std::string("expected a family letter A-G, found '") + text_[pos_] + "'", pos_);
    ++pos_;
    skip_space();
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError(std::string("expected a rank after '") + c + "'", pos_);
    if (pos_ - digits > 6) throw ParseError("rank is too large", digits);
    const int rank = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
    static constexpr Family families[] = {Family::A, Family::B, Family::C, Family::D,
                                          Family::E, Family::F, Family::G};
    try {
      return SimpleType(families[c - 'A'], rank);
    } catch (const InvalidType& e) {
      throw InvalidType(std::string(e.what()) + " (at byte " + std::to_string(start) + ")");
    }
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SemisimpleAlgebra parse_algebra(std::string_view text) {
  Reader r(text);
  std::vector<SimpleType> factors{r.factor()};
  while (r.take_times()) factors.push_back(r.factor());
  if (!r.at_end()) throw ParseError(std::string("expected 'x' or end of input, found '") + text[r.pos()] + "'", r.pos());
  return SemisimpleAlgebra(std::move(factors));
}

SimpleType parse_simple_type(std::string_view text) {
  Reader r(text);
  const SimpleType t = r.factor();
  if (!r.at_end()) throw ParseError("expected a single simple factor", r.pos());
  return t;
}

}  // namespace eqrank
