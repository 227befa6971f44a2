#include "quadembed/quadratic.hpp"

#include <algorithm>
#include <map>

#include "quadembed/error.hpp"

namespace quadembed {

  QuadraticEquation recognize_quadratic(Word const& w) {
    if (w.has_sort(Letter::Sort::H)) {
      throw InputError("equation " + to_string(w) + " contains h-letters");
    }
    if (w.x_length() == 0) {
      throw InputError("equation " + to_string(w) + " has no variables");
    }
    if (!w.is_cyclically_reduced()) {
      throw InputError("equation " + to_string(w) + " is not cyclically reduced");
    }
    std::map<std::uint32_t, std::vector<std::size_t>> occurrences;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p].is_x()) {
        occurrences[w[p].index()].push_back(p);
      }
    }
    QuadraticEquation eq;
    eq._word = w;
    eq._pairing.assign(w.size(), npos);
    for (auto const& [var, pos] : occurrences) {
      if (pos.size() != 2) {
        throw InputError("variable x" + std::to_string(var) + " occurs "
                         + std::to_string(pos.size()) + " times in " + to_string(w)
                         + "; a quadratic equation needs exactly 2");
      }
      eq._pairing[pos[0]] = pos[1];
      eq._pairing[pos[1]] = pos[0];
      eq._variables.push_back(var);
    }
    return eq;
  }

  std::size_t SolutionTuple::length() const noexcept {
    std::size_t total = 0;
    for (auto const& e : entries) {
      if (auto const* w = std::get_if<Word>(&e.value)) {
        total += w->size();
      }
    }
    return total;
  }

  SolutionValue const* SolutionTuple::find(std::uint32_t variable) const noexcept {
    for (auto const& e : entries) {
      if (e.variable == variable) {
        return &e.value;
      }
    }
    return nullptr;
  }

  Word substitute(Word const& w, SolutionTuple const& tuple) {
    Word out;
    for (Letter l : w) {
      if (!l.is_x()) {
        out.push_back(l);
        continue;
      }
      auto const* value = tuple.find(l.index());
      if (value == nullptr) {
        throw InputError("variable " + to_string(l) + " is not assigned");
      }
      auto const* word = std::get_if<Word>(value);
      if (word == nullptr) {
        throw InputError("variable " + to_string(l) + " is assigned a group element, not a word");
      }
      out.append(l.inverted() ? invert(*word) : *word);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite groups
  ////////////////////////////////////////////////////////////////////////

  std::optional<SolutionTuple> solve_finite(QuadraticEquation const& eq, CayleyTable const& table) {
    auto const& vars = eq.variables();
    // Each position becomes either a constant element or a variable slot.
    struct Op {
      bool          is_var;
      bool          inverted;
      std::uint32_t value;  // element, or slot into `vars`
    };
    std::vector<Op> ops;
    ops.reserve(eq.word().size());
    for (Letter l : eq.word()) {
      if (l.is_a()) {
        if (l.index() > table.a_count()) {
          throw InputError("letter " + to_string(l) + " has no image in the table");
        }
        Element g = table.generator(l.index());
        ops.push_back({false, false, l.inverted() ? table.inverse(g) : g});
      } else {
        auto slot = std::lower_bound(vars.begin(), vars.end(), l.index()) - vars.begin();
        ops.push_back({true, l.inverted(), static_cast<std::uint32_t>(slot)});
      }
    }

    std::vector<Element> values(vars.size(), 0);
    std::vector<Element> inverses(vars.size(), table.inverse(0));
    auto const           m = table.order();
    while (true) {
      for (std::size_t s = 0; s < vars.size(); ++s) {
        inverses[s] = table.inverse(values[s]);
      }
      Element acc = table.identity();
      for (auto const& op : ops) {
        Element v = op.is_var ? (op.inverted ? inverses[op.value] : values[op.value]) : op.value;
        acc       = table.multiply(acc, v);
      }
      if (acc == table.identity()) {
        SolutionTuple tuple;
        for (std::size_t s = 0; s < vars.size(); ++s) {
          tuple.entries.push_back({vars[s], values[s]});
        }
        return tuple;
      }
      // Odometer: the last variable moves fastest.
      std::size_t s = vars.size();
      while (s > 0) {
        --s;
        if (++values[s] < m) {
          break;
        }
        values[s] = 0;
        if (s == 0) {
          return std::nullopt;
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Free groups
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_a_only(Word const& w, char const* what) {
      for (Letter l : w) {
        if (!l.is_a()) {
          throw InputError(std::string(what) + " must be a word over the a-generators, found "
                           + to_string(l));
        }
      }
    }

    Word slice(Word const& w, std::size_t first, std::size_t last) {
      return Word({w.letters().begin() + static_cast<std::ptrdiff_t>(first),
                   w.letters().begin() + static_cast<std::ptrdiff_t>(last)});
    }
  }  // namespace

  std::optional<Word> decide_conjugacy_free(Word const& u1, Word const& u2) {
    require_a_only(u1, "u1");
    require_a_only(u2, "u2");
    // x u1 x^-1 = u2^-1: compare the cyclic words of u1 and u2^-1.
    auto const c1 = cyclic_reduce(u1);
    auto const c2 = cyclic_reduce(invert(u2));
    if (c1.core.size() != c2.core.size()) {
      return std::nullopt;
    }
    std::size_t r = 0;
    if (!c1.core.empty()) {
      r = find_subword(concat(c1.core, c1.core), c2.core);
      if (r == npos) {
        return std::nullopt;
      }
    }
    // c2.core = A^-1 c1.core A with A the first r letters of c1.core.
    Word const prefix = slice(c1.core, 0, r);
    Word const t = reduce(concat(concat(c2.conjugator, invert(prefix)), invert(c1.conjugator)));
    return t;
  }

  std::optional<Word> decide_square_free(Word const& v) {
    require_a_only(v, "v");
    auto const  c    = cyclic_reduce(v);
    std::size_t half = c.core.size() / 2;
    if (c.core.size() % 2 != 0
        || !std::equal(c.core.begin(), c.core.begin() + static_cast<std::ptrdiff_t>(half),
                       c.core.begin() + static_cast<std::ptrdiff_t>(half))) {
      return std::nullopt;
    }
    return reduce(concat(concat(c.conjugator, slice(c.core, 0, half)), invert(c.conjugator)));
  }

  std::vector<Word> reduced_words_up_to(std::uint32_t rank, std::size_t radius) {
    std::vector<Word> out{Word()};
    std::size_t       layer_begin = 0;
    for (std::size_t len = 1; len <= radius; ++len) {
      std::size_t const layer_end = out.size();
      for (std::size_t k = layer_begin; k < layer_end; ++k) {
        for (std::uint32_t j = 1; j <= rank; ++j) {
          for (bool inv : {false, true}) {
            Letter l = Letter::a(j, inv);
            if (!out[k].empty() && out[k].back() == l.inverse()) {
              continue;
            }
            Word w = out[k];
            w.push_back(l);
            out.push_back(std::move(w));
          }
        }
      }
      layer_begin = layer_end;
    }
    return out;
  }

  Decision solve_free(QuadraticEquation const& eq, FreeGroup const& group) {
    for (Letter l : eq.word()) {
      if (l.is_a() && l.index() > group.rank) {
        throw InputError("letter " + to_string(l) + " exceeds the free group rank");
      }
    }
    auto const& vars = eq.variables();
    auto        free = GroupBackend(group);

    if (vars.size() == 1) {
      // Rotate (conjugate) and possibly invert to the shape x U1 x^e U2.
      Word w = eq.word();
      auto first_x = [](Word const& u) {
        return static_cast<std::size_t>(
            std::find_if(u.begin(), u.end(), [](Letter l) { return l.is_x(); }) - u.begin());
      };
      w = rotate(w, first_x(w));
      if (w[0].inverted()) {
        w = invert(w);
        w = rotate(w, first_x(w));
      }
      std::size_t second = 1;
      while (!w[second].is_x()) {
        ++second;
      }
      Word const u1 = slice(w, 1, second);
      Word const u2 = slice(w, second + 1, w.size());

      std::optional<Word> x;
      if (w[second].inverted()) {
        x = decide_conjugacy_free(u1, u2);
      } else if (auto y = decide_square_free(concat(invert(u2), u1))) {
        // (x u1)^2 = u2^-1 u1.
        x = reduce(concat(*y, invert(u1)));
      }
      if (!x) {
        return {Verdict::unsolvable, std::nullopt};
      }
      SolutionTuple tuple{{{vars[0], *x}}};
      if (!verify_solution(eq, tuple, free)) {
        throw VerificationError("free-group witness failed for " + to_string(eq.word()));
      }
      return {Verdict::solvable, std::move(tuple)};
    }

    auto const          candidates = reduced_words_up_to(group.rank, group.radius);
    std::vector<std::size_t> odometer(vars.size(), 0);
    while (true) {
      SolutionTuple tuple;
      for (std::size_t s = 0; s < vars.size(); ++s) {
        tuple.entries.push_back({vars[s], candidates[odometer[s]]});
      }
      if (reduce(substitute(eq.word(), tuple)).empty()) {
        return {Verdict::solvable, std::move(tuple)};
      }
      std::size_t s = vars.size();
      while (s > 0) {
        --s;
        if (++odometer[s] < candidates.size()) {
          break;
        }
        odometer[s] = 0;
        if (s == 0) {
          return {Verdict::inconclusive, std::nullopt};
        }
      }
    }
  }

  Decision decide(QuadraticEquation const& eq, GroupBackend const& backend) {
    if (auto const* table = std::get_if<CayleyTable>(&backend)) {
      auto tuple = solve_finite(eq, *table);
      return {tuple ? Verdict::solvable : Verdict::unsolvable, std::move(tuple)};
    }
    if (auto const* free = std::get_if<FreeGroup>(&backend)) {
      return solve_free(eq, *free);
    }
    auto const& list = std::get<OracleList>(backend).equations;
    bool listed = std::find(list.begin(), list.end(), eq.word()) != list.end();
    return {listed ? Verdict::solvable : Verdict::inconclusive, std::nullopt};
  }

  bool verify_solution(QuadraticEquation const& eq,
                       SolutionTuple const&     tuple,
                       GroupBackend const&      backend) {
    std::vector<std::uint32_t> assigned;
    for (auto const& e : tuple.entries) {
      assigned.push_back(e.variable);
    }
    std::sort(assigned.begin(), assigned.end());
    if (assigned != eq.variables()) {
      throw InputError("solution tuple does not cover exactly the variables of "
                       + to_string(eq.word()));
    }
    if (auto const* table = std::get_if<CayleyTable>(&backend)) {
      Assignment a;
      for (auto const& e : tuple.entries) {
        auto const* g = std::get_if<Element>(&e.value);
        if (g == nullptr || *g >= table->order()) {
          throw InputError("a finite-group solution must assign group elements");
        }
        a[e.variable] = *g;
      }
      return evaluate(eq.word(), *table, a) == table->identity();
    }
    if (auto const* free = std::get_if<FreeGroup>(&backend)) {
      for (auto const& e : tuple.entries) {
        auto const* w = std::get_if<Word>(&e.value);
        if (w == nullptr) {
          throw InputError("a free-group solution must assign words");
        }
        require_a_only(*w, "solution value");
        for (Letter l : *w) {
          if (l.index() > free->rank) {
            throw InputError("solution value exceeds the free group rank");
          }
        }
      }
      return reduce(substitute(eq.word(), tuple)).empty();
    }
    throw InputError("solutions cannot be verified against an oracle list");
  }

  std::vector<SolvedEquation> enumerate_solvable(GroupBackend const& backend,
                                                 std::uint32_t       n,
                                                 std::size_t         total_len_cap,
                                                 std::size_t         count) {
    if (n < 2 || n % 2 != 0) {
      throw InputError("n must be an even integer >= 2 (got " + std::to_string(n) + ")");
    }
    std::vector<SolvedEquation> out;
    if (count == 0) {
      return out;
    }
    std::uint32_t const ac = a_count(backend);

    if (auto const* oracle = std::get_if<OracleList>(&backend)) {
      for (auto const& w : oracle->equations) {
        auto eq = recognize_quadratic(w);
        bool in_range = eq.x_length() <= n && w.size() <= total_len_cap
                        && std::all_of(w.begin(), w.end(), [&](Letter l) {
                             return l.is_a() ? l.index() <= ac : l.index() <= n;
                           });
        if (in_range) {
          out.push_back({std::move(eq), std::nullopt});
          if (out.size() == count) {
            break;
          }
        }
      }
      return out;
    }

    for_each_quadratic_word(ac, n, total_len_cap, [&](Word const& w) {
      auto eq = recognize_quadratic(w);
      auto d  = decide(eq, backend);
      if (d.verdict == Verdict::inconclusive) {
        throw UndecidableError("cannot decide " + to_string(w) + " within the search radius");
      }
      if (d.verdict == Verdict::solvable) {
        out.push_back({std::move(eq), std::move(d.solution)});
      }
      return out.size() < count;
    });
    return out;
  }

}  // namespace quadembed
