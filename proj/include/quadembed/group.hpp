#ifndef QUADEMBED_GROUP_HPP_
#define QUADEMBED_GROUP_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quadembed/word.hpp"

namespace quadembed {

  // A finite truncation of a group presentation. Generators are a_1..a_k,
  // optionally x_1..x_m (for the intermediate presentations carrying copied
  // variables) and optionally h_1, h_2.
  struct Presentation {
    std::uint32_t     a_count = 0;
    std::uint32_t     x_count = 0;
    bool              uses_h  = false;
    std::vector<Word> relators;

    bool operator==(Presentation const&) const = default;
  };

  // Throws InputError unless every relator is nonempty, cyclically reduced
  // and uses only declared generators.
  void validate_presentation(Presentation const& p);

  // Grammar:
  //   presentation := header (";" clause)* [";"]
  //   header       := "gens a:<k>" [" x:<m>"] [" h"]
  //   clause       := "rel " word
  // Whitespace (including newlines) around clauses is ignored, as are lines
  // starting with '#'.
  Presentation parse_presentation(std::string_view text);

  // Inverse of parse_presentation; `comments` are emitted as leading '#'
  // lines.
  std::string serialize(Presentation const&                 p,
                        std::vector<std::string> const& comments = {});

  using Element = std::uint32_t;

  // A finite group given by its full multiplication table together with the
  // images of the generators a_1, ..., a_k.
  class CayleyTable {
   public:
    CayleyTable() = default;

    // `product` is row-major: product[x * order + y] = x * y.
    CayleyTable(std::vector<std::string> element_names,
                std::vector<Element>     product,
                Element                  identity,
                std::vector<Element>     generator_map);

    static CayleyTable from_json(std::string_view text);
    std::string        to_json() const;

    std::uint32_t order() const noexcept {
      return static_cast<std::uint32_t>(_names.size());
    }
    Element identity() const noexcept {
      return _identity;
    }
    Element multiply(Element x, Element y) const noexcept {
      return _product[static_cast<std::size_t>(x) * order() + y];
    }
    // Valid only when the table passes validate_table.
    Element inverse(Element x) const noexcept {
      return _inverse[x];
    }
    std::string const& name(Element x) const {
      return _names[x];
    }
    std::vector<std::string> const& element_names() const noexcept {
      return _names;
    }
    std::vector<Element> const& product() const noexcept {
      return _product;
    }
    std::uint32_t a_count() const noexcept {
      return static_cast<std::uint32_t>(_generators.size());
    }
    // Image of a_j, j >= 1.
    Element generator(std::uint32_t j) const {
      return _generators.at(j - 1);
    }
    std::vector<Element> const& generator_map() const noexcept {
      return _generators;
    }

    // Overwrites one product entry; used to build corrupted tables in tests.
    void set_product(Element x, Element y, Element value);

   private:
    void compute_inverses();

    std::vector<std::string> _names;
    std::vector<Element>     _product;
    Element                  _identity = 0;
    std::vector<Element>     _generators;
    std::vector<Element>     _inverse;
  };

  struct TableCheck {
    std::string name;
    bool        passed;
    std::string detail;
  };

  struct TableReport {
    std::vector<TableCheck> checks;

    bool passed() const noexcept;
    // The first failing check, as text; empty when everything passed.
    std::string first_failure() const;
  };

  // Full scans: associativity over all triples, two-sided identity, two-sided
  // inverses and closure of the generator images.
  TableReport validate_table(CayleyTable const& table);

  // Values for the variables x_k, keyed by k.
  using Assignment = std::map<std::uint32_t, Element>;

  // The image of w under a_j -> generator(j), x_k -> assignment[k]. Throws
  // InputError for unmapped letters or h-letters.
  Element evaluate(Word const& w, CayleyTable const& table, Assignment const& assignment = {});

  // True iff every relator of p (over A only) evaluates to the identity.
  bool check_relators(Presentation const& p, CayleyTable const& table);

  struct FreeGroup {
    std::uint32_t rank = 0;
    // Bounded witness search radius for equations outside the decided shapes.
    std::uint32_t radius = 3;
  };

  // Externally supplied list of solvable equations, in enumeration order.
  struct OracleList {
    std::uint32_t     a_count = 0;
    std::vector<Word> equations;
  };

  OracleList parse_oracle_list(std::string_view text, std::uint32_t a_count);

  using GroupBackend = std::variant<CayleyTable, FreeGroup, OracleList>;

  std::uint32_t    a_count(GroupBackend const& backend);
  std::string_view backend_name(GroupBackend const& backend);

  // 64-bit FNV-1a, used as a stable digest of input files.
  std::uint64_t fnv1a(std::string_view bytes);
  std::string   hex_digest(std::string_view bytes);

}  // namespace quadembed

#endif  // QUADEMBED_GROUP_HPP_
