#ifndef QUADEMBED_TESTS_FIXTURES_HPP_
#define QUADEMBED_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "quadembed/group.hpp"
#include "quadembed/word.hpp"

namespace fixtures {

  using Perm = std::vector<int>;

  // (p * q)(k) = p(q(k)): apply q first.
  inline Perm compose(Perm const& p, Perm const& q) {
    Perm r(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
      r[k] = p[q[k]];
    }
    return r;
  }

  inline Perm cycle_perm(int points, std::vector<std::vector<int>> const& cycles) {
    Perm p(points);
    for (int k = 0; k < points; ++k) {
      p[k] = k;
    }
    for (auto const& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        p[c[k]] = c[(k + 1) % c.size()];
      }
    }
    return p;
  }

  // Cayley table of the permutation group generated by `gens`, elements in
  // breadth-first order from the identity. a_j maps to gens[j-1].
  inline quadembed::CayleyTable permutation_group(int points, std::vector<Perm> const& gens) {
    Perm id = cycle_perm(points, {});
    std::vector<Perm>       elems{id};
    std::map<Perm, quadembed::Element> index{{id, 0}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (auto const& g : gens) {
        Perm p = compose(elems[k], g);
        if (index.emplace(p, static_cast<quadembed::Element>(elems.size())).second) {
          elems.push_back(p);
        }
      }
    }
    std::vector<quadembed::Element> product;
    for (auto const& p : elems) {
      for (auto const& q : elems) {
        product.push_back(index.at(compose(p, q)));
      }
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      names.push_back(k == 0 ? "e" : "g" + std::to_string(k));
    }
    std::vector<quadembed::Element> gen_map;
    for (auto const& g : gens) {
      gen_map.push_back(index.at(g));
    }
    return quadembed::CayleyTable(names, product, 0, gen_map);
  }

  inline quadembed::CayleyTable cyclic(int n) {
    std::vector<int> c(n);
    for (int k = 0; k < n; ++k) {
      c[k] = k;
    }
    return permutation_group(n, {cycle_perm(n, {c})});
  }

  struct NamedGroup {
    std::string            name;
    quadembed::CayleyTable table;
  };

  // The 14 groups of order at most 8, each with a single generator a1
  // (the first listed generator; closure is not required of the tests that
  // use this list).
  inline std::vector<NamedGroup> small_groups() {
    auto c = [](int points, std::vector<std::vector<int>> cycles) { return cycle_perm(points, cycles); };
    // Q8 acts regularly on {±1, ±i, ±j, ±k} = 0..7 by left multiplication.
    // Points: 0=1 1=i 2=j 3=k 4=-1 5=-i 6=-j 7=-k.
    Perm qi = {1, 4, 3, 6, 5, 0, 7, 2};  // i*1=i, i*i=-1, i*j=k, i*k=-j
    Perm qj = {2, 7, 4, 1, 6, 3, 0, 5};  // j*1=j, j*i=-k, j*j=-1, j*k=i
    return {
        {"trivial", cyclic(1)},
        {"Z2", cyclic(2)},
        {"Z3", cyclic(3)},
        {"Z4", cyclic(4)},
        {"Z2xZ2", permutation_group(4, {c(4, {{0, 1}}), c(4, {{2, 3}})})},
        {"Z5", cyclic(5)},
        {"Z6", cyclic(6)},
        {"S3", permutation_group(3, {c(3, {{0, 1, 2}}), c(3, {{0, 1}})})},
        {"Z7", cyclic(7)},
        {"Z8", cyclic(8)},
        {"Z4xZ2", permutation_group(6, {c(6, {{0, 1, 2, 3}}), c(6, {{4, 5}})})},
        {"Z2^3", permutation_group(6, {c(6, {{0, 1}}), c(6, {{2, 3}}), c(6, {{4, 5}})})},
        {"D4", permutation_group(4, {c(4, {{0, 1, 2, 3}}), c(4, {{0, 2}})})},
        {"Q8", permutation_group(8, {qi, qj})},
    };
  }

  // Same table with every a_j sent to the given elements.
  inline quadembed::CayleyTable with_generators(quadembed::CayleyTable const& t,
                                                std::vector<quadembed::Element> gens) {
    return quadembed::CayleyTable(t.element_names(), t.product(), t.identity(), std::move(gens));
  }

  // Free reduction by repeatedly deleting the leftmost cancelling pair.
  inline quadembed::Word naive_reduce(quadembed::Word const& w) {
    std::vector<quadembed::Letter> v(w.begin(), w.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        if (v[k + 1] == v[k].inverse()) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(k), v.begin() + static_cast<std::ptrdiff_t>(k) + 2);
          changed = true;
          break;
        }
      }
    }
    return quadembed::Word(v);
  }

  inline quadembed::Word random_word(std::mt19937_64& rng, std::uint32_t a_count, std::uint32_t x_count,
                                     std::size_t length) {
    std::vector<quadembed::Letter> letters;
    std::uint32_t const            names = a_count + x_count;
    for (std::size_t k = 0; k < length; ++k) {
      std::uint32_t const pick = static_cast<std::uint32_t>(rng() % names);
      bool const          inv  = rng() % 2 == 1;
      letters.push_back(pick < a_count ? quadembed::Letter::a(pick + 1, inv)
                                       : quadembed::Letter::x(pick - a_count + 1, inv));
    }
    return quadembed::Word(letters);
  }

  inline quadembed::Word random_reduced_word(std::mt19937_64& rng, std::uint32_t rank, std::size_t length) {
    std::vector<quadembed::Letter> letters;
    while (letters.size() < length) {
      auto l = quadembed::Letter::a(static_cast<std::uint32_t>(rng() % rank + 1), rng() % 2 == 1);
      if (!letters.empty() && letters.back() == l.inverse()) {
        continue;
      }
      letters.push_back(l);
    }
    return quadembed::Word(letters);
  }

}  // namespace fixtures

#endif  // QUADEMBED_TESTS_FIXTURES_HPP_
