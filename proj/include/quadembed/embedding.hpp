#ifndef QUADEMBED_EMBEDDING_HPP_
#define QUADEMBED_EMBEDDING_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quadembed/group.hpp"
#include "quadembed/quadratic.hpp"
#include "quadembed/word.hpp"

namespace quadembed {

  // n is the variable budget (even, >= 2), M = 24n is the run-length step of
  // the coding words, N the number of enumerated equations materialised and
  // C = 3 * 24^2 the constant of the solution-length bound C n^4 i.
  struct EmbeddingParams {
    static constexpr std::uint64_t C = 3 * 24 * 24;

    std::uint32_t n = 2;
    std::uint32_t M = 48;
    std::size_t   N = 0;

    // Throws InputError for odd n or n < 2.
    static EmbeddingParams make(std::uint32_t n, std::size_t N = 0);
  };

  ////////////////////////////////////////////////////////////////////////
  // Coding words
  ////////////////////////////////////////////////////////////////////////

  // V_i = h1 h2^{Mi+1} h1 h2^{Mi+2} ... h1 h2^{M(i+1)} h1. Requires i >= 1
  // and M >= 48.
  Word v_word(std::uint64_t i, std::uint32_t M);

  // M^2 i + (M+1)(M+2)/2.
  std::uint64_t v_word_length(std::uint64_t i, std::uint32_t M);

  struct VWordStats {
    std::size_t   length;
    std::size_t   h1_count;
    std::uint64_t min_run;
    std::uint64_t max_run;
    // Maximal h2-runs in order.
    std::vector<std::uint64_t> runs;
  };

  VWordStats v_word_stats(Word const& w);

  struct SmallCancellationReport {
    std::uint64_t i;
    std::uint64_t j;
    std::uint32_t M;
    std::size_t   length_i;
    std::size_t   length_j;
    // ceil(4 min(|V_i|, |V_j|) / M)
    std::size_t threshold;
    // Every maximal common subword of length >= threshold.
    std::vector<SubwordOccurrence> occurrences;
    // Every qualifying occurrence is the identity overlap (i = j, same place).
    bool occurrences_ok = false;
    // Every qualifying occurrence contains a block h1 h2^k h1 with
    // Mi+1 <= k <= M(i+1), and that block occurs exactly once in V_i.
    bool blocks_ok = false;
    // 4|V_i|/M > 4(Mi+2) > 2M(i+1)+2 for both indices.
    bool inequality_ok = false;
    std::vector<std::string> failures;

    bool passed() const noexcept {
      return occurrences_ok && blocks_ok && inequality_ok;
    }
  };

  SmallCancellationReport check_small_cancellation(std::uint64_t i, std::uint64_t j, std::uint32_t M);

  // All pairs 1 <= i <= j <= max_i, in (i, j) order. Pairs are checked on up
  // to `threads` workers (0 = worker_count()).
  std::vector<SmallCancellationReport>
  small_cancellation_sweep(std::uint32_t M, std::uint64_t max_i, unsigned threads = 0);

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  // Global index (i-1)n + t of the t-th variable of the i-th equation.
  std::uint64_t global_variable(std::size_t i, std::uint32_t t, std::uint32_t n);

  // W_i with every variable x_t renamed to its global copy.
  Word copy_variables(Word const& w, std::size_t i, std::uint32_t n);

  // Relators of g followed by W_1(X_1), ..., W_N(X_N); x_count = N n.
  Presentation build_g1(Presentation const&                   g,
                        std::vector<QuadraticEquation> const& equations,
                        std::uint32_t                         n);

  // g1 plus h1, h2 and the relators a_j V_{2j+1}^-1 (all j), then
  // x_k V_{2k}^-1 (all k).
  Presentation build_g2(Presentation const& g1, std::uint32_t n);

  // a_j^e -> V_{2j+1}^e and x_k^e -> V_{2k}^e, freely reduced.
  Word rewrite_word(Word const& w, std::uint32_t n);

  // The presentation on h1, h2: every relator of g2 without h-letters is
  // rewritten and cyclically reduced, the identifying relators are dropped.
  Presentation rewrite_to_two_generators(Presentation const& g2, std::uint32_t n);

  // Replace a_j by V_{2j+1}; variables are kept.
  Word mu_n(QuadraticEquation const& eq, std::uint32_t n);

  struct TransportedSolution {
    std::size_t   equation_index;
    // Global indices k_1 < ... < k_l of the equation's variables.
    std::vector<std::uint64_t> global_indices;
    // Local variable x_t -> V_{2 k_t}.
    SolutionTuple tuple;
    std::uint64_t length;
    std::uint64_t proof_bound;  // n M (M (2 n i + 1) + 1)
    std::uint64_t final_bound;  // C n^4 i
  };

  // The solution of mu_n(W_i) = 1 over H induced by the identifying
  // relators. Throws VerificationError if a global index exceeds n i or the
  // length bounds fail.
  TransportedSolution transport_solution(std::size_t i, QuadraticEquation const& eq, std::uint32_t n);

  // Substitute the tuple into mu_n(eq), reduce cyclically and compare with
  // relator base_relators + i - 1 of prh up to cyclic permutation and
  // inversion.
  bool verify_transport(std::size_t              i,
                        QuadraticEquation const& eq,
                        SolutionTuple const&     tuple,
                        Presentation const&      prh,
                        std::size_t              base_relators,
                        std::uint32_t            n);

  // psi_inf: x_{(i-1)n+t} -> value of x_t in solutions[i-1] (identity when
  // x_t does not occur in W_i), a_j fixed. Returns the element (table) or
  // the reduced word (free group).
  SolutionValue retract_psi_infinity(Word const&                       w,
                                     std::vector<SolutionTuple> const& solutions,
                                     GroupBackend const&               backend,
                                     std::uint32_t                     n);

  struct EmbeddingOutput {
    EmbeddingParams             params;
    std::size_t                 total_len_cap = 0;
    std::size_t                 base_relators = 0;
    std::vector<SolvedEquation> equations;
    Presentation                g1;
    Presentation                g2;
    Presentation                prh;
  };

  struct EmbeddingOptions {
    // Pairs (i, j) with i, j <= horizon are checked before anything is built.
    std::uint64_t sc_horizon = 10;
    bool          build_g2   = true;
  };

  // Enumerate, verify the small-cancellation property up to the horizon,
  // then build g1, g2 and the two-generator presentation.
  EmbeddingOutput build_embedding(Presentation const&     g,
                                  GroupBackend const&     backend,
                                  std::uint32_t           n,
                                  std::size_t             count,
                                  std::size_t             total_len_cap,
                                  EmbeddingOptions const& options = {});

}  // namespace quadembed

#endif  // QUADEMBED_EMBEDDING_HPP_
