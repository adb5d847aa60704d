#include "starmon/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <system_error>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "starmon/errors.hpp"

namespace starmon {

  namespace {

    bool is_name_char(char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    }

    class WordParser {
     public:
      WordParser(Presentation const& p, std::string_view text) : _p(p), _text(text) {}

      Word parse() {
        auto w = sequence();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected character");
        }
        return w;
      }

     private:
      static constexpr std::size_t max_exponent = 1'000'000;

      Word sequence() {
        Word out;
        while (true) {
          skip_space();
          if (_pos == _text.size() || _text[_pos] == ')') {
            return out;
          }
          Word item;
          if (_text[_pos] == '(') {
            ++_pos;
            item = sequence();
            skip_space();
            if (_pos == _text.size() || _text[_pos] != ')') {
              fail("missing ')'");
            }
            ++_pos;
          } else {
            auto start = _pos;
            while (_pos < _text.size() && is_name_char(_text[_pos])) {
              ++_pos;
            }
            if (start == _pos) {
              fail("expected a letter");
            }
            auto token = _text.substr(start, _pos - start);
            if (token != "1") {
              item.push_back(_p.letter(token));
            }
          }
          skip_space();
          std::size_t exponent = 1;
          if (_pos < _text.size() && _text[_pos] == '^') {
            ++_pos;
            skip_space();
            auto start = _pos;
            while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
              ++_pos;
            }
            if (start == _pos) {
              fail("expected an exponent");
            }
            auto [_, ec] = std::from_chars(_text.data() + start, _text.data() + _pos, exponent);
            if (ec != std::errc{} || exponent > max_exponent) {
              fail("exponent out of range");
            }
          }
          for (std::size_t i = 0; i < exponent; ++i) {
            out.insert(out.end(), item.begin(), item.end());
          }
        }
      }

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      [[noreturn]] void fail(std::string_view what) const {
        throw InvalidArgument(fmt::format("malformed word '{}': {} at offset {}", _text, what, _pos));
      }

      Presentation const& _p;
      std::string_view    _text;
      std::size_t         _pos = 0;
    };

  }  // namespace

  Presentation::Presentation(std::vector<std::string> alphabet) : _alphabet(std::move(alphabet)) {
    for (std::size_t i = 0; i < _alphabet.size(); ++i) {
      auto const& a = _alphabet[i];
      if (a.empty() || !std::all_of(a.begin(), a.end(), is_name_char) || a == "1") {
        throw InvalidArgument(fmt::format("invalid letter name '{}'", a));
      }
      if (std::find(_alphabet.begin(), _alphabet.begin() + i, a) != _alphabet.begin() + i) {
        throw InvalidArgument(fmt::format("duplicate letter '{}'", a));
      }
    }
  }

  Letter Presentation::letter(std::string_view name) const {
    auto it = std::find(_alphabet.begin(), _alphabet.end(), name);
    if (it == _alphabet.end()) {
      throw InvalidArgument(fmt::format("'{}' is not in the alphabet", name));
    }
    return static_cast<Letter>(it - _alphabet.begin());
  }

  Word Presentation::parse_word(std::string_view text) const {
    return WordParser(*this, text).parse();
  }

  std::vector<std::string> Presentation::letter_names(Word const& w) const {
    check_word(w);
    std::vector<std::string> out;
    out.reserve(w.size());
    for (auto x : w) {
      out.push_back(_alphabet[x]);
    }
    return out;
  }

  std::string Presentation::to_string(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    return fmt::format("{}", fmt::join(letter_names(w), " "));
  }

  void Presentation::check_word(Word const& w) const {
    for (auto x : w) {
      if (x >= _alphabet.size()) {
        throw InvalidArgument(fmt::format("letter index {} outside an alphabet of size {}", x,
                                          _alphabet.size()));
      }
    }
  }

  bool Presentation::add_relation(Word lhs, Word rhs) {
    check_word(lhs);
    check_word(rhs);
    Relation r{std::move(lhs), std::move(rhs)};
    if (std::find(_relations.begin(), _relations.end(), r) != _relations.end()) {
      return false;
    }
    _relations.push_back(std::move(r));
    return true;
  }

  bool Presentation::add_relation(std::string_view lhs, std::string_view rhs) {
    return add_relation(parse_word(lhs), parse_word(rhs));
  }

  void Presentation::add_chain(std::vector<std::string_view> const& words) {
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      add_relation(words[i], words[i + 1]);
    }
  }

  Presentation Presentation::relabeled(std::map<std::string, std::string> const& names) const {
    auto alphabet = _alphabet;
    for (auto& a : alphabet) {
      if (auto it = names.find(a); it != names.end()) {
        a = it->second;
      }
    }
    Presentation out(std::move(alphabet));
    out._relations = _relations;
    return out;
  }

  Presentation Presentation::without_relation(std::size_t index) const {
    if (index >= _relations.size()) {
      throw InvalidArgument(fmt::format("no relation with index {}", index));
    }
    auto out = *this;
    out._relations.erase(out._relations.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
  }

  std::string to_json(Presentation const& p) {
    nlohmann::ordered_json doc;
    doc["alphabet"]  = p.alphabet();
    doc["relations"] = nlohmann::ordered_json::array();
    for (auto const& r : p.relations()) {
      // explicit array: a pair of two-letter words would otherwise read as an object
      doc["relations"].push_back(
          nlohmann::ordered_json::array({p.letter_names(r.lhs), p.letter_names(r.rhs)}));
    }
    return doc.dump(2) + "\n";
  }

  Presentation presentation_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw InvalidArgument(fmt::format("presentation is not valid JSON: {}", e.what()));
    }
    try {
      Presentation p(doc.at("alphabet").get<std::vector<std::string>>());
      for (auto const& rel : doc.at("relations")) {
        if (!rel.is_array() || rel.size() != 2) {
          throw InvalidArgument("each relation must be a two-element list of words");
        }
        Word sides[2];
        for (std::size_t s = 0; s < 2; ++s) {
          for (auto const& name : rel[s].get<std::vector<std::string>>()) {
            sides[s].push_back(p.letter(name));
          }
        }
        if (!p.add_relation(sides[0], sides[1])) {
          throw InvalidArgument("duplicate relation in presentation");
        }
      }
      return p;
    } catch (nlohmann::json::exception const& e) {
      throw InvalidArgument(fmt::format("malformed presentation: {}", e.what()));
    }
  }

}  // namespace starmon
