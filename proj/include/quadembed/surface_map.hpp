#ifndef QUADEMBED_SURFACE_MAP_HPP_
#define QUADEMBED_SURFACE_MAP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quadembed {

  // A graph cellularly embedded in a closed orientable surface. Darts are
  // 0..2E-1; `rotation` is the cyclic order of darts around each vertex and
  // `pairing` the fixed-point-free involution joining the two darts of an
  // edge. Faces are the orbits of rotation o pairing.
  class CombinatorialMap {
   public:
    using Dart = std::uint32_t;

    CombinatorialMap() = default;
    // Throws InputError unless both are permutations of the same even size,
    // pairing is a fixed-point-free involution and the map is connected.
    CombinatorialMap(std::vector<Dart> rotation, std::vector<Dart> pairing);

    // Faces given as closed vertex cycles, all oriented consistently; every
    // directed edge must appear exactly once, together with its reverse.
    static CombinatorialMap from_oriented_faces(std::vector<std::vector<std::uint32_t>> const& faces);

    static CombinatorialMap from_json(std::string_view text);
    std::string             to_json() const;

    std::size_t dart_count() const noexcept {
      return _rotation.size();
    }
    std::size_t edge_count() const noexcept {
      return _rotation.size() / 2;
    }
    std::size_t vertex_count() const noexcept {
      return _vertex_count;
    }
    std::size_t face_count() const noexcept {
      return _face_degrees.size();
    }
    std::vector<std::size_t> const& face_degrees() const noexcept {
      return _face_degrees;
    }
    std::vector<Dart> const& rotation() const noexcept {
      return _rotation;
    }
    std::vector<Dart> const& pairing() const noexcept {
      return _pairing;
    }

    bool operator==(CombinatorialMap const& other) const {
      return _rotation == other._rotation && _pairing == other._pairing;
    }

   private:
    std::vector<Dart>        _rotation;
    std::vector<Dart>        _pairing;
    std::size_t              _vertex_count = 0;
    std::vector<std::size_t> _face_degrees;
  };

  // V - E + F.
  std::int64_t euler_characteristic(CombinatorialMap const& m);

  // No face of degree 1 or 2.
  bool check_property_B2(CombinatorialMap const& m);

  struct EdgeBoundReport {
    std::size_t  vertices;
    std::size_t  edges;
    std::size_t  faces;
    std::int64_t euler_characteristic;
    std::int64_t bound;  // 3 (V - chi)
    std::int64_t slack;  // bound - E

    bool passed() const noexcept {
      return slack >= 0;
    }
  };

  // E <= 3 (V - chi). Throws InputError if the map violates property B2.
  EdgeBoundReport verify_edge_bound(CombinatorialMap const& m);

  // A connected map with the given numbers of vertices and edges and random
  // rotations, deterministic in the seed. Needs edge_count >= vertex_count - 1,
  // edge_count >= 1 and vertex_count >= 1.
  CombinatorialMap random_map(std::uint64_t seed, std::size_t vertex_count, std::size_t edge_count);

  struct MapSweepResult {
    std::size_t generated = 0;
    std::size_t accepted  = 0;  // property B2 held
    std::size_t failures  = 0;  // accepted maps violating the edge bound
    std::size_t tight     = 0;  // accepted maps with slack 0
    std::int64_t min_chi  = 2;
    std::uint64_t first_failing_seed = 0;
  };

  // Generates maps from seeds base_seed, base_seed + 1, ... until `target`
  // of them satisfy property B2, checking the edge bound on each. Sizes are
  // drawn from the seed as well. Runs on up to `threads` workers.
  MapSweepResult edge_bound_sweep(std::uint64_t base_seed, std::size_t target, unsigned threads = 0);

}  // namespace quadembed

#endif  // QUADEMBED_SURFACE_MAP_HPP_
