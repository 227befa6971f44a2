#include "quadembed/surface_map.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>
#include <utility>

#include "json.hpp"

#include "quadembed/error.hpp"
#include "quadembed/parallel.hpp"

namespace quadembed {

  namespace {
    using Dart = CombinatorialMap::Dart;

    bool is_permutation_of_range(std::vector<Dart> const& p) {
      std::vector<bool> seen(p.size(), false);
      for (Dart d : p) {
        if (d >= p.size() || seen[d]) {
          return false;
        }
        seen[d] = true;
      }
      return true;
    }

    // Sizes of the orbits of `perm`.
    std::vector<std::size_t> orbit_sizes(std::vector<Dart> const& perm) {
      std::vector<bool>        seen(perm.size(), false);
      std::vector<std::size_t> out;
      for (Dart d = 0; d < perm.size(); ++d) {
        if (seen[d]) {
          continue;
        }
        std::size_t len = 0;
        for (Dart e = d; !seen[e]; e = perm[e]) {
          seen[e] = true;
          ++len;
        }
        out.push_back(len);
      }
      return out;
    }

    // Uniform in [0, bound); mt19937_64 is fully specified, so maps are
    // identical across standard libraries.
    std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
      return rng() % bound;
    }
  }  // namespace

  CombinatorialMap::CombinatorialMap(std::vector<Dart> rotation, std::vector<Dart> pairing)
      : _rotation(std::move(rotation)), _pairing(std::move(pairing)) {
    if (_rotation.empty() || _rotation.size() % 2 != 0) {
      throw InputError("a map needs a positive even number of darts");
    }
    if (_pairing.size() != _rotation.size()) {
      throw InputError("rotation and pairing must act on the same darts");
    }
    if (!is_permutation_of_range(_rotation)) {
      throw InputError("rotation is not a permutation of the darts");
    }
    if (!is_permutation_of_range(_pairing)) {
      throw InputError("pairing is not a permutation of the darts");
    }
    for (Dart d = 0; d < _pairing.size(); ++d) {
      if (_pairing[d] == d || _pairing[_pairing[d]] != d) {
        throw InputError("pairing must be a fixed-point-free involution (dart "
                         + std::to_string(d) + ")");
      }
    }
    // Connectivity under rotation and pairing.
    std::vector<bool> seen(_rotation.size(), false);
    std::vector<Dart> stack{0};
    seen[0]           = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      for (Dart e : {_rotation[d], _pairing[d]}) {
        if (!seen[e]) {
          seen[e] = true;
          ++count;
          stack.push_back(e);
        }
      }
    }
    if (count != _rotation.size()) {
      throw InputError("the map is not connected");
    }

    _vertex_count = orbit_sizes(_rotation).size();
    std::vector<Dart> face(_rotation.size());
    for (Dart d = 0; d < face.size(); ++d) {
      face[d] = _rotation[_pairing[d]];
    }
    _face_degrees = orbit_sizes(face);
  }

  CombinatorialMap
  CombinatorialMap::from_oriented_faces(std::vector<std::vector<std::uint32_t>> const& faces) {
    // One dart per directed edge u -> w; next[d] follows d along its face.
    std::map<std::pair<std::uint32_t, std::uint32_t>, Dart> dart_of;
    std::vector<Dart>                                       next;
    for (auto const& f : faces) {
      if (f.empty()) {
        throw InputError("empty face");
      }
      Dart const first = static_cast<Dart>(next.size());
      for (std::size_t k = 0; k < f.size(); ++k) {
        auto key = std::pair{f[k], f[(k + 1) % f.size()]};
        if (!dart_of.emplace(key, static_cast<Dart>(next.size())).second) {
          throw InputError("directed edge " + std::to_string(key.first) + "->"
                           + std::to_string(key.second) + " appears twice");
        }
        next.push_back(k + 1 < f.size() ? static_cast<Dart>(next.size() + 1) : first);
      }
    }
    std::vector<Dart> pairing(next.size());
    for (auto const& [key, d] : dart_of) {
      auto it = dart_of.find({key.second, key.first});
      if (it == dart_of.end() || it->second == d) {
        throw InputError("directed edge " + std::to_string(key.first) + "->"
                         + std::to_string(key.second) + " has no reverse");
      }
      pairing[d] = it->second;
    }
    // face = rotation o pairing, so rotation = face o pairing.
    std::vector<Dart> rotation(next.size());
    for (Dart d = 0; d < next.size(); ++d) {
      rotation[d] = next[pairing[d]];
    }
    return CombinatorialMap(std::move(rotation), std::move(pairing));
  }

  CombinatorialMap CombinatorialMap::from_json(std::string_view text) {
    using nlohmann::json;
    try {
      json doc      = json::parse(text);
      auto darts    = doc.at("darts").get<std::size_t>();
      auto rotation = doc.at("rotation").get<std::vector<Dart>>();
      auto pairing  = doc.at("pairing").get<std::vector<Dart>>();
      if (rotation.size() != darts || pairing.size() != darts) {
        throw InputError("\"darts\" disagrees with the permutation sizes");
      }
      return CombinatorialMap(std::move(rotation), std::move(pairing));
    } catch (json::exception const& e) {
      throw InputError(std::string("malformed map JSON: ") + e.what());
    }
  }

  std::string CombinatorialMap::to_json() const {
    nlohmann::ordered_json doc;
    doc["darts"]    = _rotation.size();
    doc["rotation"] = _rotation;
    doc["pairing"]  = _pairing;
    return doc.dump() + "\n";
  }

  std::int64_t euler_characteristic(CombinatorialMap const& m) {
    return static_cast<std::int64_t>(m.vertex_count()) - static_cast<std::int64_t>(m.edge_count())
           + static_cast<std::int64_t>(m.face_count());
  }

  bool check_property_B2(CombinatorialMap const& m) {
    return std::none_of(m.face_degrees().begin(), m.face_degrees().end(),
                        [](std::size_t d) { return d <= 2; });
  }

  EdgeBoundReport verify_edge_bound(CombinatorialMap const& m) {
    if (!check_property_B2(m)) {
      throw InputError("the edge bound needs a map without faces of degree 1 or 2");
    }
    EdgeBoundReport r;
    r.vertices             = m.vertex_count();
    r.edges                = m.edge_count();
    r.faces                = m.face_count();
    r.euler_characteristic = euler_characteristic(m);
    r.bound                = 3 * (static_cast<std::int64_t>(r.vertices) - r.euler_characteristic);
    r.slack                = r.bound - static_cast<std::int64_t>(r.edges);
    return r;
  }

  CombinatorialMap random_map(std::uint64_t seed, std::size_t vertex_count, std::size_t edge_count) {
    if (vertex_count == 0 || edge_count == 0 || edge_count + 1 < vertex_count) {
      throw InputError("infeasible map size: V = " + std::to_string(vertex_count)
                       + ", E = " + std::to_string(edge_count));
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 1; v < vertex_count; ++v) {
      edges.emplace_back(draw(rng, v), v);
    }
    while (edges.size() < edge_count) {
      edges.emplace_back(draw(rng, vertex_count), draw(rng, vertex_count));
    }
    std::vector<Dart>              pairing(2 * edge_count);
    std::vector<std::vector<Dart>> at(vertex_count);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      Dart const d = static_cast<Dart>(2 * e);
      pairing[d]     = d + 1;
      pairing[d + 1] = d;
      at[edges[e].first].push_back(d);
      at[edges[e].second].push_back(d + 1);
    }
    std::vector<Dart> rotation(2 * edge_count);
    for (auto& darts : at) {
      for (std::size_t k = darts.size(); k > 1; --k) {
        std::swap(darts[k - 1], darts[draw(rng, k)]);
      }
      for (std::size_t k = 0; k < darts.size(); ++k) {
        rotation[darts[k]] = darts[(k + 1) % darts.size()];
      }
    }
    return CombinatorialMap(std::move(rotation), std::move(pairing));
  }

  MapSweepResult edge_bound_sweep(std::uint64_t base_seed, std::size_t target, unsigned threads) {
    struct Outcome {
      bool         accepted;
      bool         failed;
      bool         tight;
      std::int64_t chi;
    };
    auto run_one = [](std::uint64_t seed) {
      std::mt19937_64   sizes(seed ^ 0x9e3779b97f4a7c15ULL);
      std::size_t const v = 1 + draw(sizes, 10);
      std::size_t const lo = std::max<std::size_t>(1, v - 1);
      std::size_t const e  = lo + draw(sizes, 3 * v + 4 - lo);
      auto const        m  = random_map(seed, v, e);
      Outcome           o{check_property_B2(m), false, false, euler_characteristic(m)};
      if (o.accepted) {
        auto r  = verify_edge_bound(m);
        o.failed = !r.passed();
        o.tight  = r.slack == 0;
      }
      return o;
    };

    unsigned const workers = std::max(1u, threads == 0 ? worker_count() : threads);
    MapSweepResult result;
    std::size_t const batch = 4096;
    std::uint64_t     seed  = base_seed;
    while (result.accepted < target) {
      std::vector<Outcome>     outcomes(batch);
      std::atomic<std::size_t> next{0};
      auto work = [&] {
        for (std::size_t k = next++; k < batch; k = next++) {
          outcomes[k] = run_one(seed + k);
        }
      };
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t) {
          pool.emplace_back(work);
        }
        work();
      }
      // Sequential scan keeps the result independent of the schedule.
      for (std::size_t k = 0; k < batch && result.accepted < target; ++k) {
        auto const& o = outcomes[k];
        ++result.generated;
        result.min_chi = std::min(result.min_chi, o.chi);
        if (!o.accepted) {
          continue;
        }
        ++result.accepted;
        if (o.tight) {
          ++result.tight;
        }
        if (o.failed && result.failures++ == 0) {
          result.first_failing_seed = seed + k;
        }
      }
      seed += batch;
    }
    return result;
  }

}  // namespace quadembed
