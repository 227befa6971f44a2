#include "quadembed/group.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "quadembed/error.hpp"

namespace quadembed {

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  void validate_presentation(Presentation const& p) {
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      Word const& w      = p.relators[r];
      auto        prefix = "relator " + std::to_string(r + 1) + ": ";
      if (w.empty()) {
        throw InputError(prefix + "relators must be nonempty");
      }
      if (!w.is_cyclically_reduced()) {
        throw InputError(prefix + "relator " + to_string(w) + " is not cyclically reduced");
      }
      for (Letter l : w) {
        bool ok = true;
        switch (l.sort()) {
          case Letter::Sort::A:
            ok = l.index() <= p.a_count;
            break;
          case Letter::Sort::X:
            ok = l.index() <= p.x_count;
            break;
          case Letter::Sort::H:
            ok = p.uses_h;
            break;
        }
        if (!ok) {
          throw InputError(prefix + "letter " + to_string(l) + " is out of the declared range");
        }
      }
    }
  }

  namespace {
    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    // Blank out '#' comment lines so that offsets stay meaningful.
    std::string strip_comments(std::string_view text) {
      std::string out(text);
      bool        line_start = true;
      bool        in_comment = false;
      for (char& c : out) {
        if (c == '\n') {
          line_start = true;
          in_comment = false;
          continue;
        }
        if (line_start && c == '#') {
          in_comment = true;
        }
        if (!is_space(c)) {
          line_start = false;
        }
        if (in_comment) {
          c = ' ';
        }
      }
      return out;
    }

    struct Token {
      std::string_view text;
      std::size_t      offset;
    };

    std::vector<Token> split_ws(std::string_view s, std::size_t base) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j])) {
          ++j;
        }
        if (j > i) {
          out.push_back({s.substr(i, j - i), base + i});
        }
        i = j;
      }
      return out;
    }

    std::uint32_t parse_count(std::string_view digits, std::size_t offset) {
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()
          || (digits.size() > 1 && digits[0] == '0') || value > Letter::max_index) {
        throw ParseError("expected a generator count", offset);
      }
      return value;
    }

    void parse_header(std::vector<Token> const& tokens, std::size_t offset, Presentation& p) {
      if (tokens.empty() || tokens[0].text != "gens") {
        throw ParseError("presentation must start with \"gens\"",
                         tokens.empty() ? offset : tokens[0].offset);
      }
      std::size_t k = 1;
      if (k >= tokens.size() || tokens[k].text.substr(0, 2) != "a:") {
        throw ParseError("expected \"a:<count>\"", k < tokens.size() ? tokens[k].offset : offset);
      }
      p.a_count = parse_count(tokens[k].text.substr(2), tokens[k].offset + 2);
      ++k;
      if (k < tokens.size() && tokens[k].text.substr(0, 2) == "x:") {
        p.x_count = parse_count(tokens[k].text.substr(2), tokens[k].offset + 2);
        ++k;
      }
      if (k < tokens.size() && tokens[k].text == "h") {
        p.uses_h = true;
        ++k;
      }
      if (k < tokens.size()) {
        throw ParseError("unexpected token in header", tokens[k].offset);
      }
    }
  }  // namespace

  Presentation parse_presentation(std::string_view raw) {
    std::string const text = strip_comments(raw);
    std::string_view  view(text);

    Presentation p;
    std::size_t  start  = 0;
    bool         header = true;
    while (start <= view.size()) {
      std::size_t semi   = view.find(';', start);
      std::size_t end    = semi == std::string_view::npos ? view.size() : semi;
      auto        tokens = split_ws(view.substr(start, end - start), start);
      if (header) {
        parse_header(tokens, start, p);
        header = false;
      } else if (tokens.empty()) {
        if (semi != std::string_view::npos) {
          throw ParseError("empty clause", start);
        }
      } else {
        if (tokens[0].text != "rel") {
          throw ParseError("expected \"rel <word>\"", tokens[0].offset);
        }
        if (tokens.size() != 2) {
          throw ParseError("expected exactly one word after \"rel\"",
                           tokens.size() > 2 ? tokens[2].offset : tokens[0].offset);
        }
        try {
          p.relators.push_back(parse_word(tokens[1].text));
        } catch (ParseError const& e) {
          throw ParseError("bad relator word", tokens[1].offset + e.position());
        }
      }
      if (semi == std::string_view::npos) {
        break;
      }
      start = semi + 1;
    }
    validate_presentation(p);
    return p;
  }

  std::string serialize(Presentation const& p, std::vector<std::string> const& comments) {
    std::string out;
    for (auto const& c : comments) {
      out += "# " + c + "\n";
    }
    out += "gens a:" + std::to_string(p.a_count);
    if (p.x_count > 0) {
      out += " x:" + std::to_string(p.x_count);
    }
    if (p.uses_h) {
      out += " h";
    }
    for (auto const& r : p.relators) {
      out += ";\nrel ";
      out += to_string(r);
    }
    out += "\n";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // CayleyTable
  ////////////////////////////////////////////////////////////////////////

  CayleyTable::CayleyTable(std::vector<std::string> element_names,
                           std::vector<Element>     product,
                           Element                  identity,
                           std::vector<Element>     generator_map)
      : _names(std::move(element_names)),
        _product(std::move(product)),
        _identity(identity),
        _generators(std::move(generator_map)) {
    std::size_t const m = _names.size();
    if (m == 0) {
      throw InputError("a Cayley table needs at least one element");
    }
    if (_product.size() != m * m) {
      throw InputError("the product table must be " + std::to_string(m) + "x"
                       + std::to_string(m));
    }
    for (Element e : _product) {
      if (e >= m) {
        throw InputError("product entry " + std::to_string(e) + " is not an element");
      }
    }
    if (_identity >= m) {
      throw InputError("identity is not an element");
    }
    for (std::size_t j = 0; j < _generators.size(); ++j) {
      if (_generators[j] >= m) {
        throw InputError("image of a" + std::to_string(j + 1) + " is not an element");
      }
    }
    compute_inverses();
  }

  void CayleyTable::compute_inverses() {
    _inverse.assign(order(), order());
    for (Element x = 0; x < order(); ++x) {
      for (Element y = 0; y < order(); ++y) {
        if (multiply(x, y) == _identity) {
          _inverse[x] = y;
          break;
        }
      }
    }
  }

  void CayleyTable::set_product(Element x, Element y, Element value) {
    _product.at(static_cast<std::size_t>(x) * order() + y) = value;
    compute_inverses();
  }

  CayleyTable CayleyTable::from_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
      auto const order = doc.at("order").get<std::uint32_t>();
      auto       names = doc.contains("elements")
                             ? doc.at("elements").get<std::vector<std::string>>()
                             : std::vector<std::string>{};
      if (names.empty()) {
        for (std::uint32_t i = 0; i < order; ++i) {
          names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
        }
      }
      if (names.size() != order) {
        throw InputError("\"elements\" must list exactly \"order\" names");
      }
      auto rows = doc.at("table").get<std::vector<std::vector<Element>>>();
      if (rows.size() != order) {
        throw InputError("\"table\" must have \"order\" rows");
      }
      std::vector<Element> product;
      product.reserve(static_cast<std::size_t>(order) * order);
      for (auto const& row : rows) {
        if (row.size() != order) {
          throw InputError("every row of \"table\" must have \"order\" entries");
        }
        product.insert(product.end(), row.begin(), row.end());
      }
      auto const identity = doc.value("identity", Element{0});

      std::map<std::uint32_t, Element> images;
      for (auto const& [key, value] : doc.at("generators").items()) {
        Word w;
        try {
          w = parse_word(key);
        } catch (ParseError const&) {
          throw InputError("bad generator name \"" + key + "\"");
        }
        if (w.size() != 1 || !w[0].is_a() || w[0].inverted()) {
          throw InputError("generator names must be a1, a2, ...; found \"" + key + "\"");
        }
        images[w[0].index()] = value.get<Element>();
      }
      std::vector<Element> generators;
      for (auto const& [index, image] : images) {
        if (index != generators.size() + 1) {
          throw InputError("generators must be a1..ak without gaps");
        }
        generators.push_back(image);
      }
      return CayleyTable(std::move(names), std::move(product), identity, std::move(generators));
    } catch (json::exception const& e) {
      throw InputError(std::string("malformed Cayley table: ") + e.what());
    }
  }

  std::string CayleyTable::to_json() const {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["order"]    = order();
    doc["elements"] = _names;
    doc["identity"] = _identity;
    auto rows       = ordered_json::array();
    for (Element x = 0; x < order(); ++x) {
      rows.push_back(std::vector<Element>(_product.begin() + static_cast<std::ptrdiff_t>(x) * order(),
                                          _product.begin() + static_cast<std::ptrdiff_t>(x + 1) * order()));
    }
    doc["table"] = rows;
    ordered_json gens;
    for (std::size_t j = 0; j < _generators.size(); ++j) {
      gens["a" + std::to_string(j + 1)] = _generators[j];
    }
    doc["generators"] = gens;
    return doc.dump(2) + "\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation and evaluation
  ////////////////////////////////////////////////////////////////////////

  bool TableReport::passed() const noexcept {
    for (auto const& c : checks) {
      if (!c.passed) {
        return false;
      }
    }
    return true;
  }

  std::string TableReport::first_failure() const {
    for (auto const& c : checks) {
      if (!c.passed) {
        return c.name + ": " + c.detail;
      }
    }
    return {};
  }

  TableReport validate_table(CayleyTable const& t) {
    TableReport  report;
    auto const   m = t.order();
    Element const e = t.identity();

    {
      TableCheck c{"associativity", true, ""};
      for (Element x = 0; x < m && c.passed; ++x) {
        for (Element y = 0; y < m && c.passed; ++y) {
          Element const xy = t.multiply(x, y);
          for (Element z = 0; z < m; ++z) {
            if (t.multiply(xy, z) != t.multiply(x, t.multiply(y, z))) {
              c.passed = false;
              c.detail = "(" + t.name(x) + " " + t.name(y) + ") " + t.name(z) + " != "
                         + t.name(x) + " (" + t.name(y) + " " + t.name(z) + ")";
              break;
            }
          }
        }
      }
      report.checks.push_back(std::move(c));
    }
    {
      TableCheck c{"identity", true, ""};
      for (Element x = 0; x < m; ++x) {
        if (t.multiply(e, x) != x || t.multiply(x, e) != x) {
          c.passed = false;
          c.detail = t.name(e) + " is not a two-sided identity for " + t.name(x);
          break;
        }
      }
      report.checks.push_back(std::move(c));
    }
    {
      TableCheck c{"inverses", true, ""};
      for (Element x = 0; x < m && c.passed; ++x) {
        bool found = false;
        for (Element y = 0; y < m; ++y) {
          if (t.multiply(x, y) == e && t.multiply(y, x) == e) {
            found = true;
            break;
          }
        }
        if (!found) {
          c.passed = false;
          c.detail = t.name(x) + " has no two-sided inverse";
        }
      }
      report.checks.push_back(std::move(c));
    }
    {
      // Positive words suffice: every element of a finite group has finite order.
      TableCheck        c{"generator closure", true, ""};
      std::vector<bool> seen(m, false);
      std::vector<Element> frontier{e};
      seen[e] = true;
      while (!frontier.empty()) {
        Element x = frontier.back();
        frontier.pop_back();
        for (Element g : t.generator_map()) {
          Element y = t.multiply(x, g);
          if (!seen[y]) {
            seen[y] = true;
            frontier.push_back(y);
          }
        }
      }
      for (Element x = 0; x < m; ++x) {
        if (!seen[x]) {
          c.passed = false;
          c.detail = t.name(x) + " is not reachable from the generator images";
          break;
        }
      }
      report.checks.push_back(std::move(c));
    }
    return report;
  }

  Element evaluate(Word const& w, CayleyTable const& table, Assignment const& assignment) {
    Element acc = table.identity();
    for (Letter l : w) {
      Element value;
      switch (l.sort()) {
        case Letter::Sort::A:
          if (l.index() > table.a_count()) {
            throw InputError("letter " + to_string(l) + " has no image in the table");
          }
          value = table.generator(l.index());
          break;
        case Letter::Sort::X: {
          auto it = assignment.find(l.index());
          if (it == assignment.end()) {
            throw InputError("variable " + to_string(l) + " is not assigned");
          }
          value = it->second;
          break;
        }
        default:
          throw InputError("h-letters cannot be evaluated in a Cayley table");
      }
      if (l.inverted()) {
        value = table.inverse(value);
        if (value >= table.order()) {
          throw InputError("table element without inverse");
        }
      }
      acc = table.multiply(acc, value);
    }
    return acc;
  }

  bool check_relators(Presentation const& p, CayleyTable const& table) {
    for (auto const& r : p.relators) {
      if (evaluate(r, table) != table.identity()) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Backends
  ////////////////////////////////////////////////////////////////////////

  OracleList parse_oracle_list(std::string_view text, std::uint32_t a_count) {
    OracleList  out{a_count, {}};
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t nl   = text.find('\n', start);
      std::size_t end  = nl == std::string_view::npos ? text.size() : nl;
      auto        line = text.substr(start, end - start);
      while (!line.empty() && is_space(line.back())) {
        line.remove_suffix(1);
      }
      while (!line.empty() && is_space(line.front())) {
        line.remove_prefix(1);
      }
      if (!line.empty() && line.front() != '#') {
        Word w;
        try {
          w = parse_word(line);
        } catch (ParseError const& e) {
          throw ParseError("bad oracle equation", start + e.position());
        }
        for (Letter l : w) {
          if (l.is_h() || (l.is_a() && l.index() > a_count)) {
            throw InputError("oracle equation \"" + std::string(line) + "\" uses " + to_string(l)
                             + ", outside the group's generators");
          }
        }
        out.equations.push_back(std::move(w));
      }
      if (nl == std::string_view::npos) {
        break;
      }
      start = nl + 1;
    }
    return out;
  }

  std::uint32_t a_count(GroupBackend const& backend) {
    return std::visit(
        [](auto const& b) -> std::uint32_t {
          using T = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<T, CayleyTable>) {
            return b.a_count();
          } else if constexpr (std::is_same_v<T, FreeGroup>) {
            return b.rank;
          } else {
            return b.a_count;
          }
        },
        backend);
  }

  std::string_view backend_name(GroupBackend const& backend) {
    switch (backend.index()) {
      case 0:
        return "table";
      case 1:
        return "free";
      default:
        return "oracle";
    }
  }

  std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::string hex_digest(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
  }

}  // namespace quadembed
