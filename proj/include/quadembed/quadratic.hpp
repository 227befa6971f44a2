#ifndef QUADEMBED_QUADRATIC_HPP_
#define QUADEMBED_QUADRATIC_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "quadembed/group.hpp"
#include "quadembed/word.hpp"

namespace quadembed {

  // A cyclically reduced word over A and X in which every variable occurs
  // (counting both signs) exactly twice or not at all.
  class QuadraticEquation {
   public:
    Word const& word() const noexcept {
      return _word;
    }
    // pairing()[p] is the other occurrence of the variable at position p;
    // npos for positions holding an A-letter.
    std::vector<std::size_t> const& pairing() const noexcept {
      return _pairing;
    }
    // Distinct variable indices occurring in the word, ascending.
    std::vector<std::uint32_t> const& variables() const noexcept {
      return _variables;
    }
    std::size_t x_length() const noexcept {
      return 2 * _variables.size();
    }

    bool operator==(QuadraticEquation const& other) const {
      return _word == other._word;
    }

   private:
    friend QuadraticEquation recognize_quadratic(Word const& w);

    Word                       _word;
    std::vector<std::size_t>   _pairing;
    std::vector<std::uint32_t> _variables;
  };

  // Throws InputError if w is not a quadratic equation over A and X.
  QuadraticEquation recognize_quadratic(Word const& w);

  using SolutionValue = std::variant<Element, Word>;

  struct SolutionTuple {
    struct Entry {
      std::uint32_t variable;
      SolutionValue value;

      bool operator==(Entry const&) const = default;
    };
    // Sorted by variable index.
    std::vector<Entry> entries;

    // Sum of the word lengths (0 for group elements).
    std::size_t length() const noexcept;
    SolutionValue const* find(std::uint32_t variable) const noexcept;

    bool operator==(SolutionTuple const&) const = default;
  };

  // Replace each variable of w by its value in the tuple (word values only).
  Word substitute(Word const& w, SolutionTuple const& tuple);

  // Exhaustive search over all |G|^k assignments, odometer order with the
  // smallest variable most significant; the first hit is returned, so the
  // result is the lexicographically least solution.
  std::optional<SolutionTuple> solve_finite(QuadraticEquation const& eq, CayleyTable const& table);

  // T with reduce(T u1 T^-1 u2) empty, i.e. x u1 x^-1 u2 = 1 solvable in the
  // free group on the A-letters.
  std::optional<Word> decide_conjugacy_free(Word const& u1, Word const& u2);

  // T with reduce(T T) == reduce(v).
  std::optional<Word> decide_square_free(Word const& v);

  enum class Verdict { solvable, unsolvable, inconclusive };

  struct Decision {
    Verdict                      verdict;
    std::optional<SolutionTuple> solution;
  };

  // One-variable equations x U1 x^e U2 are decided exactly through the two
  // cases above; everything else is a bounded witness search of the given
  // radius, returning inconclusive when nothing is found.
  Decision solve_free(QuadraticEquation const& eq, FreeGroup const& group);

  // Dispatch on the backend. For an OracleList, solvable means listed.
  Decision decide(QuadraticEquation const& eq, GroupBackend const& backend);

  // Throws InputError if the tuple's variables differ from eq's, or if the
  // value kinds do not match the backend (elements for tables, words for
  // free groups).
  bool verify_solution(QuadraticEquation const& eq,
                       SolutionTuple const&     tuple,
                       GroupBackend const&      backend);

  struct SolvedEquation {
    QuadraticEquation equation;
    // Absent only for OracleList backends.
    std::optional<SolutionTuple> solution;
  };

  // Calls f on every cyclically reduced quadratic word over a_1..a_{a_count},
  // x_1..x_n with 1 <= |W|_X <= n and |W| <= total_len_cap, ordered by total
  // length and then by the canonical letter order. f returns false to stop.
  template <typename F>
  void for_each_quadratic_word(std::uint32_t a_count,
                               std::uint32_t n,
                               std::size_t   total_len_cap,
                               F&&           f);

  // The first `count` solvable equations in the canonical order. Throws
  // UndecidableError when the backend cannot decide a candidate.
  std::vector<SolvedEquation> enumerate_solvable(GroupBackend const& backend,
                                                 std::uint32_t       n,
                                                 std::size_t         total_len_cap,
                                                 std::size_t         count);

  // Reduced words over a_1..a_rank of length at most radius, shortlex order.
  std::vector<Word> reduced_words_up_to(std::uint32_t rank, std::size_t radius);

  ////////////////////////////////////////////////////////////////////////
  // Implementation of templates
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename F>
    struct QuadraticWordWalker {
      std::vector<Letter>        alphabet;
      std::uint32_t              n;
      std::size_t                target;
      std::vector<Letter>        letters;
      std::vector<std::uint8_t>  count;  // occurrences per variable, 1-based
      std::size_t                x_len = 0;
      std::size_t                open  = 0;  // variables seen exactly once
      F&                         f;
      bool                       stopped = false;

      void run() {
        letters.clear();
        step();
      }

      void step() {
        if (stopped) {
          return;
        }
        if (letters.size() == target) {
          if (open == 0 && x_len > 0 && letters.front() != letters.back().inverse()) {
            if (!f(Word(letters))) {
              stopped = true;
            }
          }
          return;
        }
        std::size_t const remaining = target - letters.size();
        for (Letter l : alphabet) {
          if (!letters.empty() && letters.back() == l.inverse()) {
            continue;
          }
          if (l.is_x()) {
            auto c = count[l.index()];
            if (c == 2 || x_len == n || (c == 0 && x_len + open + 2 > n)) {
              continue;
            }
            std::size_t const open_after = c == 0 ? open + 1 : open - 1;
            if (open_after > remaining - 1) {
              continue;
            }
            ++count[l.index()];
            ++x_len;
            open = open_after;
            letters.push_back(l);
            step();
            letters.pop_back();
            open = c == 0 ? open - 1 : open + 1;
            --x_len;
            --count[l.index()];
          } else {
            if (open > remaining - 1) {
              continue;
            }
            letters.push_back(l);
            step();
            letters.pop_back();
          }
          if (stopped) {
            return;
          }
        }
      }
    };
  }  // namespace detail

  template <typename F>
  void for_each_quadratic_word(std::uint32_t a_count,
                               std::uint32_t n,
                               std::size_t   total_len_cap,
                               F&&           f) {
    std::vector<Letter> alphabet;
    for (std::uint32_t j = 1; j <= a_count; ++j) {
      alphabet.push_back(Letter::a(j));
      alphabet.push_back(Letter::a(j, true));
    }
    for (std::uint32_t t = 1; t <= n; ++t) {
      alphabet.push_back(Letter::x(t));
      alphabet.push_back(Letter::x(t, true));
    }
    for (std::size_t len = 2; len <= total_len_cap; ++len) {
      detail::QuadraticWordWalker<std::remove_reference_t<F>> walker{
          alphabet, n, len, {}, std::vector<std::uint8_t>(n + 1, 0), 0, 0, f};
      walker.run();
      if (walker.stopped) {
        return;
      }
    }
  }

}  // namespace quadembed

#endif  // QUADEMBED_QUADRATIC_HPP_
