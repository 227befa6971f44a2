#ifndef QUADEMBED_WORD_HPP_
#define QUADEMBED_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace quadembed {

  // A signed generator letter over one of three alphabets: the group
  // generators a_j, the variables x_j and the two generators h_1, h_2 of the
  // target group. Packed into a single int32 so that the very long words
  // over {h1, h2} stay cheap.
  class Letter {
   public:
    enum class Sort : std::uint8_t { A = 0, X = 1, H = 2 };

    static constexpr std::uint32_t max_index = (1u << 28) - 1;

    constexpr Letter() noexcept = default;

    // No range checks here; use make() for untrusted input.
    constexpr Letter(Sort sort, std::uint32_t index, bool inverted = false) noexcept
        : _code(static_cast<std::int32_t>((index << 2) | static_cast<std::uint32_t>(sort))
                * (inverted ? -1 : 1)) {}

    // Validating constructor: index >= 1, index <= 2 for H.
    static Letter make(Sort sort, std::uint32_t index, bool inverted = false);

    static constexpr Letter a(std::uint32_t i, bool inverted = false) noexcept {
      return Letter(Sort::A, i, inverted);
    }
    static constexpr Letter x(std::uint32_t i, bool inverted = false) noexcept {
      return Letter(Sort::X, i, inverted);
    }
    static constexpr Letter h(std::uint32_t i, bool inverted = false) noexcept {
      return Letter(Sort::H, i, inverted);
    }

    constexpr Sort sort() const noexcept {
      return static_cast<Sort>(magnitude() & 3u);
    }
    constexpr std::uint32_t index() const noexcept {
      return magnitude() >> 2;
    }
    constexpr bool inverted() const noexcept {
      return _code < 0;
    }
    constexpr int sign() const noexcept {
      return _code < 0 ? -1 : 1;
    }
    constexpr bool is_a() const noexcept {
      return sort() == Sort::A;
    }
    constexpr bool is_x() const noexcept {
      return sort() == Sort::X;
    }
    constexpr bool is_h() const noexcept {
      return sort() == Sort::H;
    }

    constexpr Letter inverse() const noexcept {
      Letter l;
      l._code = -_code;
      return l;
    }

    constexpr bool operator==(Letter const&) const noexcept = default;

    // Canonical letter order: a1 < a1^-1 < a2 < ... < x1 < x1^-1 < ... < h1 < ...
    constexpr std::strong_ordering operator<=>(Letter const& other) const noexcept {
      if (auto c = sort() <=> other.sort(); c != 0) {
        return c;
      }
      if (auto c = index() <=> other.index(); c != 0) {
        return c;
      }
      return inverted() <=> other.inverted();
    }

   private:
    constexpr std::uint32_t magnitude() const noexcept {
      return static_cast<std::uint32_t>(_code < 0 ? -_code : _code);
    }

    std::int32_t _code = 0;
  };

  std::string to_string(Letter l);

  // A finite, not necessarily reduced, sequence of letters.
  class Word {
   public:
    using value_type     = Letter;
    using container_type = std::vector<Letter>;
    using const_iterator = container_type::const_iterator;

    Word() = default;
    explicit Word(container_type letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    Letter front() const noexcept {
      return _letters.front();
    }
    Letter back() const noexcept {
      return _letters.back();
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }
    container_type const& letters() const noexcept {
      return _letters;
    }

    void push_back(Letter l) {
      _letters.push_back(l);
    }
    void pop_back() {
      _letters.pop_back();
    }
    void reserve(std::size_t n) {
      _letters.reserve(n);
    }
    void append(Word const& w) {
      _letters.insert(_letters.end(), w.begin(), w.end());
    }

    // Number of occurrences of variable letters, |W|_X.
    std::size_t x_length() const noexcept;
    bool has_sort(Letter::Sort s) const noexcept;

    bool is_reduced() const noexcept;
    bool is_cyclically_reduced() const noexcept;

    bool operator==(Word const&) const = default;
    // Plain lexicographic comparison on letters (shorter prefix first).
    std::strong_ordering operator<=>(Word const& other) const;

   private:
    container_type _letters;
  };

  Word reduce(Word const& w);

  struct CyclicReduction {
    Word core;
    Word conjugator;
  };

  // w == conjugator * core * conjugator^-1 freely, core cyclically reduced.
  CyclicReduction cyclic_reduce(Word const& w);

  Word invert(Word const& w);
  Word concat(Word const& u, Word const& v);
  Word power(Word const& w, std::size_t k);
  // The cyclic permutation starting at position `start`.
  Word rotate(Word const& w, std::size_t start);

  struct SubwordOccurrence {
    std::size_t pos_u;
    std::size_t pos_v;
    std::size_t length;

    bool operator==(SubwordOccurrence const&) const = default;
  };

  // All maximal literal common subwords of u and v of length >= min_len,
  // sorted by (pos_u, pos_v). Scans every alignment diagonal, skipping
  // whole runs of repeated letters at a time.
  std::vector<SubwordOccurrence>
  common_subword_occurrences(Word const& u, Word const& v, std::size_t min_len);

  inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // First occurrence of `pattern` in `text` (Knuth-Morris-Pratt), or npos.
  std::size_t find_subword(Word const& text, Word const& pattern);

  // True iff v is a cyclic permutation of u (as literal words).
  bool is_cyclic_permutation(Word const& u, Word const& v);

  // Text form: tokens joined by '.', token = name or name^-1, names a<k>,
  // x<k>, h1, h2; the empty word is "e".
  Word parse_word(std::string_view text);
  std::string to_string(Word const& w);

}  // namespace quadembed

#endif  // QUADEMBED_WORD_HPP_
