// Licensed under the Apache License, Version 2.0 (the 'License');
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an 'AS IS' BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LTRGEN_SRC_SCANNER_HPP_
#define LTRGEN_SRC_SCANNER_HPP_

#include <cctype>
#include <string>
#include <string_view>

#include "ltrgen/model.hpp"

namespace ltrgen::detail {

// Character cursor over one line of text. Columns are 1-based bytes.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char current() const { return text_[pos_]; }
  int column() const { return static_cast<int>(pos_) + 1; }
  std::string_view rest() const { return text_.substr(pos_); }

  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  void advance(std::size_t n = 1) { pos_ += n; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(current())))
      ++pos_;
  }

  template <typename Pred>
  std::string take_while(Pred pred) {
    std::size_t start = pos_;
    while (!at_end() && pred(current())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    return take_while([](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  // Accepts `<->` or the UTF-8 double arrow.
  bool consume_arrow() {
    for (std::string_view arrow : {std::string_view("<->"),
                                   std::string_view("\xE2\x86\x94")}) {
      if (rest().substr(0, arrow.size()) == arrow) {
        pos_ += arrow.size();
        return true;
      }
    }
    return false;
  }

  bool consume(std::string_view token) {
    if (rest().substr(0, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  [[noreturn]] void fail(const std::string &message) const {
    throw SyntaxError(message, 0, column());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace ltrgen::detail

#endif  // LTRGEN_SRC_SCANNER_HPP_
