// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "quadembed/embedding.hpp"
#include "quadembed/error.hpp"
#include "quadembed/quadratic.hpp"
#include "quadembed/surface_map.hpp"

using namespace quadembed;

namespace {
  std::string const data = QUADEMBED_TEST_DATA;

  int failures = 0;

  void report(int id, char const* title, bool ok, std::string const& detail,
              std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << "criterion " << id << " [" << title << "]: " << (ok ? "PASS" : "FAIL") << " - " << detail << " ("
              << ms.count() << " ms)" << std::endl;
    failures += !ok;
  }

  std::string slurp(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("missing " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  // Free reduction with an explicit stack, written independently of reduce().
  bool trivial_in_free_group(std::vector<Word> const& parts) {
    std::vector<Letter> stack;
    for (auto const& p : parts) {
      for (Letter l : p) {
        if (!stack.empty() && stack.back() == l.inverse()) {
          stack.pop_back();
        } else {
          stack.push_back(l);
        }
      }
    }
    return stack.empty();
  }

  // Reduced words of rank 2 up to the radius, built by extension.
  std::vector<Word> ball(std::size_t radius) {
    std::vector<Letter> letters{Letter::a(1), Letter::a(1, true), Letter::a(2), Letter::a(2, true)};
    std::vector<Word>   out{Word{}};
    std::size_t         begin = 0;
    for (std::size_t len = 1; len <= radius; ++len) {
      std::size_t const end = out.size();
      for (std::size_t k = begin; k < end; ++k) {
        for (Letter l : letters) {
          if (!out[k].empty() && out[k].back() == l.inverse()) {
            continue;
          }
          Word w = out[k];
          w.push_back(l);
          out.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return out;
  }

  struct RunChecks {
    bool        bound_ok     = true;
    bool        transport_ok = true;
    bool        mutation_ok  = true;
    bool        retract_ok   = true;
    std::size_t N            = 0;
    std::uint64_t max_ratio_num = 0;
    std::string first_problem;
  };

  RunChecks check_run(std::string const& name, Presentation const& g, CayleyTable const& table) {
    RunChecks       rc;
    std::uint32_t const n = 2;
    std::uint64_t const M = 48;
    GroupBackend    backend = table;
    auto out = build_embedding(g, backend, n, 50, 6, EmbeddingOptions{1, false});
    rc.N     = out.params.N;
    if (rc.N != 50) {
      rc.bound_ok = rc.transport_ok = rc.retract_ok = false;
      rc.first_problem = name + ": only " + std::to_string(rc.N) + " equations";
      return rc;
    }
    std::vector<SolutionTuple> sols;
    for (std::size_t i = 1; i <= rc.N; ++i) {
      auto const& eq = out.equations[i - 1].equation;
      auto        t  = transport_solution(i, eq, n);
      // Expected length: sum of |V_{2k}| over the global copies k.
      std::uint64_t expected = 0;
      for (auto v : eq.variables()) {
        std::uint64_t const k = (i - 1) * n + v;
        expected += M * M * (2 * k) + (M + 1) * (M + 2) / 2;
      }
      std::uint64_t const proof = n * M * (M * (2 * n * i + 1) + 1);
      std::uint64_t const final = 1728ULL * n * n * n * n * i;
      if (t.length != expected || !(t.length <= proof && proof <= final)) {
        rc.bound_ok = false;
        if (rc.first_problem.empty()) {
          rc.first_problem = name + ": bound fails at i = " + std::to_string(i);
        }
      }
      if (!verify_transport(i, eq, t.tuple, out.prh, out.base_relators, n)) {
        rc.transport_ok = false;
        if (rc.first_problem.empty()) {
          rc.first_problem = name + ": transport fails at i = " + std::to_string(i);
        }
      }
      auto bad             = t.tuple;
      bad.entries[0].value = v_word(2 * t.global_indices[0] + 1, static_cast<std::uint32_t>(M));
      if (verify_transport(i, eq, bad, out.prh, out.base_relators, n)) {
        rc.mutation_ok = false;
        if (rc.first_problem.empty()) {
          rc.first_problem = name + ": mutation accepted at i = " + std::to_string(i);
        }
      }
      sols.push_back(*out.equations[i - 1].solution);
    }
    for (auto const& r : out.g1.relators) {
      auto image = retract_psi_infinity(r, sols, backend, n);
      if (std::get<Element>(image) != table.identity()) {
        rc.retract_ok = false;
        if (rc.first_problem.empty()) {
          rc.first_problem = name + ": retraction leaves " + to_string(r);
        }
      }
    }
    return rc;
  }

  // Table walk written independently of evaluate().
  Element walk(Word const& w, CayleyTable const& t, std::vector<Element> const& x) {
    Element acc = t.identity();
    for (Letter l : w) {
      Element g = l.is_a() ? t.generator(l.index()) : x[l.index()];
      if (l.inverted()) {
        Element inv = 0;
        while (t.multiply(g, inv) != t.identity()) {
          ++inv;
        }
        g = inv;
      }
      acc = t.multiply(acc, g);
    }
    return acc;
  }
}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  {
    auto        start = clock::now();
    bool        ok    = true;
    std::size_t pairs = 0;
    std::string detail;
    for (std::uint32_t n : {2u, 4u}) {
      for (auto const& r : small_cancellation_sweep(24 * n, 10)) {
        ++pairs;
        if (!r.passed()) {
          ok = false;
          if (detail.empty()) {
            detail = "M=" + std::to_string(r.M) + " (" + std::to_string(r.i) + "," + std::to_string(r.j)
                     + "): " + r.failures.front();
          }
        }
      }
    }
    report(1, "small cancellation sweep", ok && pairs == 110,
           detail.empty() ? std::to_string(pairs) + " pairs, M in {48, 96}, i <= j <= 10" : detail, start);
  }

  {
    auto start = clock::now();
    bool ok    = true;
    for (std::uint64_t M : {48u, 96u}) {
      for (std::uint64_t i = 1; i <= 20; ++i) {
        std::uint64_t literal = 1;
        for (std::uint64_t k = M * i + 1; k <= M * (i + 1); ++k) {
          literal += k + 1;
        }
        std::uint64_t const closed = M * M * i + (M + 1) * (M + 2) / 2;
        auto const          built  = v_word(i, static_cast<std::uint32_t>(M)).size();
        ok = ok && literal == closed && built == closed && v_word_length(i, static_cast<std::uint32_t>(M)) == closed
             && closed <= (M * (i + 1) + 1) * M;
      }
    }
    ok = ok && v_word(1, 48).size() == 3529;
    report(2, "length arithmetic", ok, "i <= 20, M in {48, 96}; |V_1| at M = 48 is 3529", start);
  }

  RunChecks z2, s3;
  {
    auto start = clock::now();
    try {
      z2 = check_run("Z/2", parse_presentation(slurp(data + "/z2.pres")),
                     CayleyTable::from_json(slurp(data + "/z2.json")));
      s3 = check_run("S3", parse_presentation(slurp(data + "/s3.pres")),
                     CayleyTable::from_json(slurp(data + "/s3.json")));
    } catch (std::exception const& e) {
      z2.bound_ok = s3.bound_ok = false;
      z2.first_problem          = e.what();
    }
    std::string problem = !z2.first_problem.empty() ? z2.first_problem : s3.first_problem;
    report(3, "solution length bound", z2.bound_ok && s3.bound_ok,
           problem.empty() ? "Z/2 and S3, n = 2, N = 50: |tuple| <= nM(M(2ni+1)+1) <= 1728 n^4 i" : problem, start);
    start = clock::now();
    report(4, "transport triviality", z2.transport_ok && s3.transport_ok && z2.mutation_ok && s3.mutation_ok,
           problem.empty() ? "100 transported tuples match prh; every off-by-one V index is rejected" : problem,
           start);
  }

  {
    auto        start   = clock::now();
    bool        ok      = true;
    std::size_t checked = 0;
    std::size_t solvable = 0;
    std::string detail;
    std::vector<QuadraticEquation> eqs;
    for_each_quadratic_word(1, 2, 6, [&](Word const& w) {
      eqs.push_back(recognize_quadratic(w));
      return true;
    });
    std::mt19937_64 rng(11);
    for (auto const& group : fixtures::small_groups()) {
      for (Element a = 0; a < group.table.order(); ++a) {
        auto const table = fixtures::with_generators(group.table, {a});
        GroupBackend backend = table;
        for (auto const& eq : eqs) {
          auto got = solve_finite(eq, table);
          if (got && !verify_solution(eq, *got, backend)) {
            ok = false;
            detail = group.name + ": bad witness for " + to_string(eq.word());
          }
          // Shuffled exhaustive search over all assignments.
          auto const& vars = eq.variables();
          std::size_t total = 1;
          for (std::size_t k = 0; k < vars.size(); ++k) {
            total *= table.order();
          }
          std::vector<std::size_t> order(total);
          for (std::size_t k = 0; k < total; ++k) {
            order[k] = k;
          }
          std::shuffle(order.begin(), order.end(), rng);
          bool found = false;
          std::vector<Element> x(3, table.identity());
          for (std::size_t code : order) {
            for (std::size_t k = 0; k < vars.size(); ++k) {
              x[vars[k]] = static_cast<Element>(code % table.order());
              code /= table.order();
            }
            if (walk(eq.word(), table, x) == table.identity()) {
              found = true;
              break;
            }
          }
          if (found != got.has_value()) {
            ok = false;
            detail = group.name + ": verdicts differ on " + to_string(eq.word());
          }
          solvable += found;
          ++checked;
        }
      }
    }
    report(5, "oracle consistency", ok,
           detail.empty() ? std::to_string(eqs.size()) + " equations x 14 groups x every a1 image = "
                                + std::to_string(checked) + " checks, " + std::to_string(solvable) + " solvable"
                          : detail,
           start);
  }

  {
    auto            start = clock::now();
    auto const      words = ball(8);
    std::mt19937_64 rng(6);
    FreeGroup const free2{2, 3};
    bool            ok = true;
    std::size_t     conj_yes = 0, conj_no = 0, sq_yes = 0, sq_no = 0;
    std::string     detail;
    auto rand_word = [&](std::size_t max_len) { return fixtures::random_reduced_word(rng, 2, rng() % (max_len + 1)); };
    for (int trial = 0; trial < 1000; ++trial) {
      if (trial % 2 == 0) {
        // x u1 x^-1 u2 = 1 with |u1| + |u2| <= 8, half of them built solvable.
        Word u1, u2;
        do {
          u1 = rand_word(4);
          if (rng() % 2 == 0) {
            Word t = rand_word(2);
            u2     = reduce(concat(concat(t, invert(u1)), invert(t)));
          } else {
            u2 = rand_word(4);
          }
        } while (u1.size() + u2.size() > 8);
        auto got = decide_conjugacy_free(u1, u2);
        bool brute = false;
        for (auto const& t : words) {
          if (trivial_in_free_group({t, u1, invert(t), u2})) {
            brute = true;
            break;
          }
        }
        if (got.has_value() != brute) {
          ok     = false;
          detail = "conjugacy verdicts differ on " + to_string(u1) + ", " + to_string(u2);
        }
        if (got) {
          ++conj_yes;
          bool valid = trivial_in_free_group({*got, u1, invert(*got), u2});
          if (!u1.empty() && !u2.empty()) {
            auto eq = recognize_quadratic(concat(concat(Word{Letter::x(1)}, u1), concat(Word{Letter::x(1, true)}, u2)));
            valid   = valid && verify_solution(eq, SolutionTuple{{{1, *got}}}, free2);
          }
          if (!valid) {
            ok     = false;
            detail = "bad conjugator for " + to_string(u1) + ", " + to_string(u2);
          }
        } else {
          ++conj_no;
        }
      } else {
        Word v;
        if (rng() % 2 == 0) {
          do {
            v = reduce(power(rand_word(4), 2));
          } while (v.size() > 8);
        } else {
          v = rand_word(8);
        }
        auto got   = decide_square_free(v);
        bool brute = false;
        for (auto const& t : words) {
          if (trivial_in_free_group({t, t, invert(v)})) {
            brute = true;
            break;
          }
        }
        if (got.has_value() != brute) {
          ok     = false;
          detail = "square verdicts differ on " + to_string(v);
        }
        if (got) {
          ++sq_yes;
          bool valid = trivial_in_free_group({*got, *got, invert(v)});
          if (!v.empty()) {
            auto eq = recognize_quadratic(concat(Word{Letter::x(1), Letter::x(1)}, invert(v)));
            valid   = valid && verify_solution(eq, SolutionTuple{{{1, *got}}}, free2);
          }
          if (!valid) {
            ok     = false;
            detail = "bad root for " + to_string(v);
          }
        } else {
          ++sq_no;
        }
      }
    }
    report(6, "free-group decisions", ok,
           detail.empty() ? "1000 instances vs radius-8 search: conjugacy " + std::to_string(conj_yes) + " yes / "
                                + std::to_string(conj_no) + " no, square " + std::to_string(sq_yes) + " yes / "
                                + std::to_string(sq_no) + " no"
                          : detail,
           start);
  }

  {
    auto start = clock::now();
    auto sweep = edge_bound_sweep(1, 10000);
    auto k4    = CombinatorialMap::from_oriented_faces({{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}});
    std::vector<std::vector<std::uint32_t>> faces;
    for (std::uint32_t k = 0; k < 5; ++k) {
      std::uint32_t const u = 1 + k, u1 = 1 + (k + 1) % 5, l = 6 + k, l1 = 6 + (k + 1) % 5;
      faces.push_back({0, u, u1});
      faces.push_back({u, l, u1});
      faces.push_back({u1, l, l1});
      faces.push_back({11, l1, l});
    }
    auto ico  = CombinatorialMap::from_oriented_faces(faces);
    auto rk4  = verify_edge_bound(k4);
    auto rico = verify_edge_bound(ico);
    bool ok   = sweep.accepted == 10000 && sweep.failures == 0 && rk4.slack == 0 && rico.slack == 0
              && rico.edges == 30;
    report(7, "edge bound sweep", ok,
           std::to_string(sweep.accepted) + " B2 maps of " + std::to_string(sweep.generated) + " generated, "
               + std::to_string(sweep.failures) + " violations, " + std::to_string(sweep.tight)
               + " tight, min chi " + std::to_string(sweep.min_chi) + "; K4 slack " + std::to_string(rk4.slack)
               + ", icosahedron slack " + std::to_string(rico.slack),
           start);
  }

  {
    auto start = clock::now();
    report(8, "retraction", z2.retract_ok && s3.retract_ok,
           "every relator of g1 maps to the identity for Z/2 and S3 (N = 50)", start);
  }

  std::cout << (failures == 0 ? "all acceptance criteria pass" : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
