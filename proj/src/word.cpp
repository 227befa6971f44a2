#include "quadembed/word.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "quadembed/error.hpp"

namespace quadembed {

  Letter Letter::make(Sort sort, std::uint32_t index, bool inverted) {
    if (index < 1 || index > max_index) {
      throw InputError("letter index out of range: " + std::to_string(index));
    }
    if (sort == Sort::H && index > 2) {
      throw InputError("h-generator index must be 1 or 2, found "
                       + std::to_string(index));
    }
    return Letter(sort, index, inverted);
  }

  std::string to_string(Letter l) {
    std::string out;
    switch (l.sort()) {
      case Letter::Sort::A:
        out = "a";
        break;
      case Letter::Sort::X:
        out = "x";
        break;
      case Letter::Sort::H:
        out = "h";
        break;
    }
    out += std::to_string(l.index());
    if (l.inverted()) {
      out += "^-1";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  std::size_t Word::x_length() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(begin(), end(), [](Letter l) { return l.is_x(); }));
  }

  bool Word::has_sort(Letter::Sort s) const noexcept {
    return std::any_of(begin(), end(), [s](Letter l) { return l.sort() == s; });
  }

  bool Word::is_reduced() const noexcept {
    for (std::size_t i = 1; i < size(); ++i) {
      if (_letters[i] == _letters[i - 1].inverse()) {
        return false;
      }
    }
    return true;
  }

  bool Word::is_cyclically_reduced() const noexcept {
    return is_reduced() && (size() < 2 || front() != back().inverse());
  }

  std::strong_ordering Word::operator<=>(Word const& other) const {
    return std::lexicographical_compare_three_way(
        begin(), end(), other.begin(), other.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Free group arithmetic
  ////////////////////////////////////////////////////////////////////////

  Word reduce(Word const& w) {
    Word::container_type stack;
    stack.reserve(w.size());
    for (Letter l : w) {
      if (!stack.empty() && stack.back() == l.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  CyclicReduction cyclic_reduce(Word const& w) {
    Word        r     = reduce(w);
    std::size_t first = 0;
    std::size_t last  = r.size();
    while (last - first >= 2 && r[first] == r[last - 1].inverse()) {
      ++first;
      --last;
    }
    auto const& ls = r.letters();
    return {Word({ls.begin() + first, ls.begin() + last}),
            Word({ls.begin(), ls.begin() + first})};
  }

  Word invert(Word const& w) {
    Word::container_type out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  Word concat(Word const& u, Word const& v) {
    Word out;
    out.reserve(u.size() + v.size());
    out.append(u);
    out.append(v);
    return out;
  }

  Word power(Word const& w, std::size_t k) {
    Word out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.append(w);
    }
    return out;
  }

  Word rotate(Word const& w, std::size_t start) {
    if (w.empty()) {
      return w;
    }
    start %= w.size();
    Word::container_type out(w.letters());
    std::rotate(out.begin(), out.begin() + start, out.end());
    return Word(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subword search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // runs[p] = number of consecutive letters equal to w[p] starting at p.
    std::vector<std::size_t> run_lengths(Word const& w) {
      std::vector<std::size_t> runs(w.size());
      for (std::size_t p = w.size(); p-- > 0;) {
        runs[p] = (p + 1 < w.size() && w[p + 1] == w[p]) ? runs[p + 1] + 1 : 1;
      }
      return runs;
    }
  }  // namespace

  std::vector<SubwordOccurrence>
  common_subword_occurrences(Word const& u, Word const& v, std::size_t min_len) {
    std::vector<SubwordOccurrence> out;
    min_len = std::max<std::size_t>(min_len, 1);
    if (u.empty() || v.empty()) {
      return out;
    }
    auto const ru = run_lengths(u);
    auto const rv = run_lengths(v);

    // Diagonal d starts at (p, q) = (d - |v| + 1, 0) or (0, |v| - 1 - d).
    std::size_t const diagonals = u.size() + v.size() - 1;
    for (std::size_t d = 0; d < diagonals; ++d) {
      std::size_t       p    = d < v.size() ? 0 : d - (v.size() - 1);
      std::size_t       q    = d < v.size() ? v.size() - 1 - d : 0;
      std::size_t const span = std::min(u.size() - p, v.size() - q);
      if (span < min_len) {
        continue;
      }
      std::size_t const p_end = p + span;
      std::size_t       len   = 0;
      while (p < p_end) {
        // Both words are constant on [p, p + step) and [q, q + step).
        std::size_t const step = std::min({ru[p], rv[q], p_end - p});
        if (u[p] == v[q]) {
          len += step;
        } else {
          if (len >= min_len) {
            out.push_back({p - len, q - len, len});
          }
          len = 0;
        }
        p += step;
        q += step;
      }
      if (len >= min_len) {
        out.push_back({p - len, q - len, len});
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return std::tie(x.pos_u, x.pos_v) < std::tie(y.pos_u, y.pos_v);
    });
    return out;
  }

  std::size_t find_subword(Word const& text, Word const& pattern) {
    if (pattern.empty()) {
      return 0;
    }
    if (pattern.size() > text.size()) {
      return npos;
    }
    std::vector<std::size_t> fail(pattern.size(), 0);
    for (std::size_t i = 1, k = 0; i < pattern.size(); ++i) {
      while (k > 0 && pattern[i] != pattern[k]) {
        k = fail[k - 1];
      }
      if (pattern[i] == pattern[k]) {
        ++k;
      }
      fail[i] = k;
    }
    for (std::size_t i = 0, k = 0; i < text.size(); ++i) {
      while (k > 0 && text[i] != pattern[k]) {
        k = fail[k - 1];
      }
      if (text[i] == pattern[k]) {
        ++k;
      }
      if (k == pattern.size()) {
        return i + 1 - k;
      }
    }
    return npos;
  }

  bool is_cyclic_permutation(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return false;
    }
    if (u.empty()) {
      return true;
    }
    Word doubled = concat(u, u);
    doubled.pop_back();
    return find_subword(doubled, v) != npos;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Letter parse_token(std::string_view token, std::size_t offset) {
      if (token.empty()) {
        throw ParseError("empty token", offset);
      }
      bool inverted = false;
      if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
        inverted = true;
        token.remove_suffix(3);
      }
      Letter::Sort sort;
      switch (token[0]) {
        case 'a':
          sort = Letter::Sort::A;
          break;
        case 'x':
          sort = Letter::Sort::X;
          break;
        case 'h':
          sort = Letter::Sort::H;
          break;
        default:
          throw ParseError("expected a generator name (a, x or h)", offset);
      }
      auto digits = token.substr(1);
      if (digits.empty() || digits[0] == '0') {
        throw ParseError("expected a positive index without leading zeros",
                         offset + 1);
      }
      std::uint32_t index = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
      if (ec != std::errc() || ptr != digits.data() + digits.size()
          || index > Letter::max_index) {
        throw ParseError("malformed index", offset + 1);
      }
      if (sort == Letter::Sort::H && index > 2) {
        throw ParseError("h-generator index must be 1 or 2", offset + 1);
      }
      return Letter(sort, index, inverted);
    }
  }  // namespace

  Word parse_word(std::string_view text) {
    if (text == "e") {
      return Word();
    }
    if (text.empty()) {
      throw ParseError("empty word text (use \"e\" for the empty word)", 0);
    }
    Word        out;
    std::size_t start = 0;
    while (true) {
      std::size_t dot = text.find('.', start);
      std::size_t end = dot == std::string_view::npos ? text.size() : dot;
      out.push_back(parse_token(text.substr(start, end - start), start));
      if (dot == std::string_view::npos) {
        break;
      }
      start = dot + 1;
    }
    return out;
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    out.reserve(w.size() * 3);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += '.';
      }
      out += to_string(w[i]);
    }
    return out;
  }

}  // namespace quadembed
