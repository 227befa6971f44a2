#include "quadembed/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "quadembed/error.hpp"
#include "quadembed/parallel.hpp"

namespace quadembed {

  EmbeddingParams EmbeddingParams::make(std::uint32_t n, std::size_t N) {
    if (n < 2 || n % 2 != 0) {
      throw InputError("n must be an even integer >= 2 (got " + std::to_string(n)
                       + "; try " + std::to_string(n < 2 ? 2 : n + 1) + ")");
    }
    return EmbeddingParams{n, 24 * n, N};
  }

  ////////////////////////////////////////////////////////////////////////
  // Coding words
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t v_word_length(std::uint64_t i, std::uint32_t M) {
    std::uint64_t const m = M;
    return m * m * i + (m + 1) * (m + 2) / 2;
  }

  Word v_word(std::uint64_t i, std::uint32_t M) {
    if (i < 1) {
      throw InputError("V_i needs i >= 1");
    }
    if (M < 48) {
      throw InputError("V_i needs M >= 48 (M = 24n with n >= 2)");
    }
    Word w;
    w.reserve(v_word_length(i, M));
    std::uint64_t const m = M;
    for (std::uint64_t k = m * i + 1; k <= m * (i + 1); ++k) {
      w.push_back(Letter::h(1));
      for (std::uint64_t r = 0; r < k; ++r) {
        w.push_back(Letter::h(2));
      }
    }
    w.push_back(Letter::h(1));
    return w;
  }

  VWordStats v_word_stats(Word const& w) {
    VWordStats s{w.size(), 0, 0, 0, {}};
    std::uint64_t run = 0;
    for (Letter l : w) {
      if (l == Letter::h(2)) {
        ++run;
        continue;
      }
      if (run > 0) {
        s.runs.push_back(run);
        run = 0;
      }
      if (l == Letter::h(1)) {
        ++s.h1_count;
      }
    }
    if (run > 0) {
      s.runs.push_back(run);
    }
    if (!s.runs.empty()) {
      s.min_run = *std::min_element(s.runs.begin(), s.runs.end());
      s.max_run = *std::max_element(s.runs.begin(), s.runs.end());
    }
    return s;
  }

  namespace {
    // Longest subword of V containing at most one h1, i.e. no full block
    // h1 h2^k h1.
    std::uint64_t longest_blockfree(VWordStats const& s) {
      std::uint64_t best = 0;
      for (std::size_t r = 0; r < s.runs.size(); ++r) {
        std::uint64_t next = r + 1 < s.runs.size() ? s.runs[r + 1] : 0;
        best               = std::max(best, s.runs[r] + 1 + next);
      }
      return best;
    }

    // Exponents k of the blocks h1 h2^k h1 inside w[first, first + len).
    std::vector<std::uint64_t> blocks_in(Word const& w, std::size_t first, std::size_t len) {
      std::vector<std::uint64_t> out;
      bool                       seen_h1 = false;
      std::uint64_t              run     = 0;
      for (std::size_t p = first; p < first + len; ++p) {
        if (w[p] == Letter::h(1)) {
          if (seen_h1) {
            out.push_back(run);
          }
          seen_h1 = true;
          run     = 0;
        } else {
          ++run;
        }
      }
      return out;
    }
  }  // namespace

  SmallCancellationReport check_small_cancellation(std::uint64_t i, std::uint64_t j, std::uint32_t M) {
    Word const vi = v_word(i, M);
    Word const vj = v_word(j, M);

    SmallCancellationReport r;
    r.i         = i;
    r.j         = j;
    r.M         = M;
    r.length_i  = vi.size();
    r.length_j  = vj.size();
    auto const shortest = std::min(vi.size(), vj.size());
    r.threshold = (4 * shortest + M - 1) / M;
    r.occurrences = common_subword_occurrences(vi, vj, r.threshold);

    r.occurrences_ok = true;
    for (auto const& o : r.occurrences) {
      if (i != j || o.pos_u != o.pos_v) {
        r.occurrences_ok = false;
        r.failures.push_back("common subword of length " + std::to_string(o.length)
                             + " at V_" + std::to_string(i) + "[" + std::to_string(o.pos_u)
                             + "], V_" + std::to_string(j) + "[" + std::to_string(o.pos_v) + "]");
      }
    }

    std::uint64_t const m = M;
    auto in_range = [m](std::uint64_t idx, std::uint64_t k) {
      return m * idx + 1 <= k && k <= m * (idx + 1);
    };

    r.blocks_ok = true;
    auto const si = v_word_stats(vi);
    auto const sj = v_word_stats(vj);
    // The block exponents of each V are exactly its own range, each once.
    for (auto const& [idx, s] : {std::pair{i, &si}, std::pair{j, &sj}}) {
      for (std::size_t k = 0; k < s->runs.size(); ++k) {
        if (s->runs[k] != m * idx + 1 + k) {
          r.blocks_ok = false;
          r.failures.push_back("V_" + std::to_string(idx) + " has unexpected run "
                               + std::to_string(s->runs[k]));
          break;
        }
      }
    }
    // Any subword of the shorter word at least as long as the threshold
    // contains a full block.
    auto const& shorter = vi.size() <= vj.size() ? si : sj;
    if (r.threshold <= longest_blockfree(shorter)) {
      r.blocks_ok = false;
      r.failures.push_back("threshold " + std::to_string(r.threshold)
                           + " does not force a full block");
    }
    for (auto const& o : r.occurrences) {
      auto const ks = blocks_in(vi, o.pos_u, o.length);
      bool       ok = !ks.empty();
      for (auto k : ks) {
        ok = ok && in_range(i, k) && in_range(j, k);
      }
      if (!ok) {
        r.blocks_ok = false;
        r.failures.push_back("occurrence at " + std::to_string(o.pos_u)
                             + " has no block pinning its index");
      }
    }

    r.inequality_ok = true;
    for (auto idx : {i, j}) {
      std::uint64_t const len = v_word_length(idx, M);
      // (4/M)|V| > 4(M idx + 2) > 2M(idx + 1) + 2
      bool const first  = 4 * len > 4 * m * (m * idx + 2);
      bool const second = 4 * (m * idx + 2) > 2 * m * (idx + 1) + 2;
      if (!first || !second) {
        r.inequality_ok = false;
        r.failures.push_back("length inequality fails for V_" + std::to_string(idx));
      }
    }
    std::uint64_t const lo = std::min(i, j);
    if (r.threshold <= 2 * m * (lo + 1) + 2) {
      r.inequality_ok = false;
      r.failures.push_back("threshold " + std::to_string(r.threshold) + " <= 2M(i+1)+2");
    }
    return r;
  }

  std::vector<SmallCancellationReport>
  small_cancellation_sweep(std::uint32_t M, std::uint64_t max_i, unsigned threads) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t i = 1; i <= max_i; ++i) {
      for (std::uint64_t j = i; j <= max_i; ++j) {
        pairs.emplace_back(i, j);
      }
    }
    std::vector<SmallCancellationReport> reports(pairs.size());
    std::atomic<std::size_t>             next{0};
    auto work = [&] {
      for (std::size_t k = next++; k < pairs.size(); k = next++) {
        reports[k] = check_small_cancellation(pairs[k].first, pairs[k].second, M);
      }
    };
    unsigned const workers = std::max(1u, std::min<unsigned>(threads == 0 ? worker_count() : threads,
                                                             static_cast<unsigned>(pairs.size())));
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 1; t < workers; ++t) {
        pool.emplace_back(work);
      }
      work();
    }
    return reports;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t global_variable(std::size_t i, std::uint32_t t, std::uint32_t n) {
    return static_cast<std::uint64_t>(i - 1) * n + t;
  }

  Word copy_variables(Word const& w, std::size_t i, std::uint32_t n) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
      if (!l.is_x()) {
        out.push_back(l);
        continue;
      }
      if (l.index() > n) {
        throw InputError("variable " + to_string(l) + " exceeds the budget n = " + std::to_string(n));
      }
      auto const k = global_variable(i, l.index(), n);
      if (k > Letter::max_index) {
        throw InputError("global variable index overflow");
      }
      out.push_back(Letter::x(static_cast<std::uint32_t>(k), l.inverted()));
    }
    return out;
  }

  Presentation build_g1(Presentation const&                   g,
                        std::vector<QuadraticEquation> const& equations,
                        std::uint32_t                         n) {
    Presentation g1 = g;
    g1.x_count      = static_cast<std::uint32_t>(equations.size() * n);
    for (std::size_t i = 1; i <= equations.size(); ++i) {
      if (equations[i - 1].variables().size() > n) {
        throw InputError("equation " + std::to_string(i) + " has more than n variables");
      }
      g1.relators.push_back(copy_variables(equations[i - 1].word(), i, n));
    }
    return g1;
  }

  Presentation build_g2(Presentation const& g1, std::uint32_t n) {
    std::uint32_t const M  = EmbeddingParams::make(n).M;
    Presentation        g2 = g1;
    g2.uses_h              = true;
    for (std::uint32_t j = 1; j <= g1.a_count; ++j) {
      Word r{Letter::a(j)};
      r.append(invert(v_word(2 * std::uint64_t{j} + 1, M)));
      g2.relators.push_back(std::move(r));
    }
    for (std::uint32_t k = 1; k <= g1.x_count; ++k) {
      Word r{Letter::x(k)};
      r.append(invert(v_word(2 * std::uint64_t{k}, M)));
      g2.relators.push_back(std::move(r));
    }
    return g2;
  }

  namespace {
    // Substitute a_j -> V_{2j+1}; variables too when `variables` is set.
    Word substitute_codes(Word const& w, std::uint32_t M, bool variables) {
      Word out;
      for (Letter l : w) {
        if (l.is_h() || (l.is_x() && !variables)) {
          out.push_back(l);
          continue;
        }
        std::uint64_t const idx = l.is_a() ? 2 * std::uint64_t{l.index()} + 1
                                           : 2 * std::uint64_t{l.index()};
        Word v = v_word(idx, M);
        out.append(l.inverted() ? invert(v) : v);
      }
      return reduce(out);
    }
  }  // namespace

  Word rewrite_word(Word const& w, std::uint32_t n) {
    return substitute_codes(w, EmbeddingParams::make(n).M, true);
  }

  Presentation rewrite_to_two_generators(Presentation const& g2, std::uint32_t n) {
    Presentation prh;
    prh.uses_h = true;
    for (auto const& r : g2.relators) {
      if (r.has_sort(Letter::Sort::H)) {
        continue;
      }
      Word core = cyclic_reduce(rewrite_word(r, n)).core;
      if (core.empty()) {
        throw VerificationError("relator " + to_string(r) + " became trivial after rewriting");
      }
      prh.relators.push_back(std::move(core));
    }
    return prh;
  }

  Word mu_n(QuadraticEquation const& eq, std::uint32_t n) {
    return substitute_codes(eq.word(), EmbeddingParams::make(n).M, false);
  }

  TransportedSolution transport_solution(std::size_t i, QuadraticEquation const& eq, std::uint32_t n) {
    auto const          params = EmbeddingParams::make(n);
    std::uint64_t const M      = params.M;
    TransportedSolution out;
    out.equation_index = i;
    out.length         = 0;
    for (auto t : eq.variables()) {
      auto const k = global_variable(i, t, n);
      if (t > n || k > std::uint64_t{n} * i) {
        throw VerificationError("variable x" + std::to_string(t) + " of equation "
                                + std::to_string(i) + " has global index " + std::to_string(k)
                                + " > n i");
      }
      Word v = v_word(2 * k, params.M);
      out.length += v.size();
      out.global_indices.push_back(k);
      out.tuple.entries.push_back({t, std::move(v)});
    }
    std::uint64_t const nn = n;
    out.proof_bound        = nn * M * (M * (2 * nn * i + 1) + 1);
    out.final_bound        = EmbeddingParams::C * nn * nn * nn * nn * i;
    if (out.length > out.proof_bound || out.proof_bound > out.final_bound) {
      throw VerificationError("transported solution of equation " + std::to_string(i)
                              + " violates the length bound");
    }
    return out;
  }

  bool verify_transport(std::size_t              i,
                        QuadraticEquation const& eq,
                        SolutionTuple const&     tuple,
                        Presentation const&      prh,
                        std::size_t              base_relators,
                        std::uint32_t            n) {
    std::vector<std::uint32_t> assigned;
    for (auto const& e : tuple.entries) {
      assigned.push_back(e.variable);
    }
    std::sort(assigned.begin(), assigned.end());
    if (assigned != eq.variables()) {
      throw InputError("transported tuple does not match the variables of equation "
                       + std::to_string(i));
    }
    if (i < 1 || base_relators + i > prh.relators.size()) {
      throw InputError("equation index " + std::to_string(i) + " has no relator in prh");
    }
    Word const  lhs = cyclic_reduce(substitute(mu_n(eq, n), tuple)).core;
    Word const& rel = prh.relators[base_relators + i - 1];
    return is_cyclic_permutation(rel, lhs) || is_cyclic_permutation(invert(rel), lhs);
  }

  SolutionValue retract_psi_infinity(Word const&                       w,
                                     std::vector<SolutionTuple> const& solutions,
                                     GroupBackend const&               backend,
                                     std::uint32_t                     n) {
    if (w.has_sort(Letter::Sort::H)) {
      throw InputError("the retraction is defined on words over a- and x-letters");
    }
    if (std::holds_alternative<OracleList>(backend)) {
      throw InputError("an oracle backend carries no solution values to retract with");
    }
    bool const table = std::holds_alternative<CayleyTable>(backend);
    // Rebuild a tuple over the global variables of w.
    SolutionTuple global;
    for (Letter l : w) {
      if (!l.is_x() || global.find(l.index()) != nullptr) {
        continue;
      }
      std::size_t const   k = l.index();
      std::size_t const   i = (k - 1) / n + 1;
      std::uint32_t const t = static_cast<std::uint32_t>((k - 1) % n + 1);
      if (i > solutions.size()) {
        throw InputError("variable " + to_string(l) + " belongs to equation " + std::to_string(i)
                         + ", which was not materialised");
      }
      auto const* value = solutions[i - 1].find(t);
      SolutionValue v   = table ? SolutionValue(std::get<CayleyTable>(backend).identity())
                                : SolutionValue(Word());
      if (value != nullptr) {
        v = *value;
      }
      global.entries.push_back({l.index(), std::move(v)});
    }
    if (table) {
      auto const& tab = std::get<CayleyTable>(backend);
      Assignment  a;
      for (auto const& e : global.entries) {
        a[e.variable] = std::get<Element>(e.value);
      }
      return evaluate(w, tab, a);
    }
    return reduce(substitute(w, global));
  }

  EmbeddingOutput build_embedding(Presentation const&     g,
                                  GroupBackend const&     backend,
                                  std::uint32_t           n,
                                  std::size_t             count,
                                  std::size_t             total_len_cap,
                                  EmbeddingOptions const& options) {
    EmbeddingOutput out;
    out.params        = EmbeddingParams::make(n);
    out.total_len_cap = total_len_cap;
    if (g.x_count != 0 || g.uses_h) {
      throw InputError("the group presentation must only use a-generators");
    }
    if (g.a_count != a_count(backend)) {
      throw InputError("presentation has " + std::to_string(g.a_count)
                       + " generators but the backend has " + std::to_string(a_count(backend)));
    }
    if (auto const* table = std::get_if<CayleyTable>(&backend)) {
      auto report = validate_table(*table);
      if (!report.passed()) {
        throw InputError("invalid Cayley table: " + report.first_failure());
      }
      if (!check_relators(g, *table)) {
        throw InputError("a relator of the presentation is not trivial in the table");
      }
    }
    if (std::holds_alternative<FreeGroup>(backend) && !g.relators.empty()) {
      throw InputError("a free-group backend takes a presentation without relators");
    }

    for (auto const& report : small_cancellation_sweep(out.params.M, options.sc_horizon)) {
      if (!report.passed()) {
        throw VerificationError("small cancellation fails for (" + std::to_string(report.i) + ", "
                                + std::to_string(report.j) + "): " + report.failures.front());
      }
    }

    out.equations = enumerate_solvable(backend, n, total_len_cap, count);
    out.params.N  = out.equations.size();
    for (auto const& s : out.equations) {
      if (s.solution && !verify_solution(s.equation, *s.solution, backend)) {
        throw VerificationError("solution of " + to_string(s.equation.word()) + " fails");
      }
    }

    std::vector<QuadraticEquation> eqs;
    for (auto const& s : out.equations) {
      eqs.push_back(s.equation);
    }
    out.base_relators = g.relators.size();
    out.g1            = build_g1(g, eqs, n);
    if (options.build_g2) {
      out.g2  = build_g2(out.g1, n);
      out.prh = rewrite_to_two_generators(out.g2, n);
    } else {
      out.prh = rewrite_to_two_generators(out.g1, n);
    }
    if (out.prh.relators.size() != out.base_relators + out.params.N) {
      throw VerificationError("two-generator presentation has the wrong number of relators");
    }
    return out;
  }

}  // namespace quadembed
