#include "quadembed/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "quadembed/embedding.hpp"
#include "quadembed/error.hpp"
#include "quadembed/group.hpp"
#include "quadembed/quadratic.hpp"
#include "quadembed/surface_map.hpp"
#include "quadembed/word.hpp"

#ifndef QUADEMBED_VERSION
#define QUADEMBED_VERSION "0.0.0"
#endif

namespace quadembed::cli {

  namespace {
    using nlohmann::ordered_json;
    namespace fs = std::filesystem;

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw InputError("cannot read " + path);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    void write_file(fs::path const& path, std::string const& content) {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) {
        throw InputError("cannot write " + path.string());
      }
      out << content;
    }

    struct GroupOptions {
      std::string   backend = "table";
      std::string   group;
      std::string   pres;
      std::string   oracle;
      std::uint32_t rank   = 0;
      std::uint32_t radius = 3;
    };

    void add_group_options(CLI::App* cmd, GroupOptions& o, bool group_required) {
      auto* g = cmd->add_option("--group", o.group,
                                "Cayley table JSON (table) or presentation file (free, oracle)");
      if (group_required) {
        g->required();
      }
      cmd->add_option("--backend", o.backend, "Group backend")
          ->check(CLI::IsMember({"table", "free", "oracle"}));
      cmd->add_option("--pres", o.pres, "Presentation of the group (table backend)");
      cmd->add_option("--oracle", o.oracle, "List of solvable equations (oracle backend)");
      cmd->add_option("--rank", o.rank, "Rank of the free group when no --group is given");
      cmd->add_option("--radius", o.radius, "Witness search radius for the free backend");
    }

    struct LoadedGroup {
      Presentation g;
      GroupBackend backend;
      std::string  digest;
    };

    LoadedGroup load_group(GroupOptions const& o) {
      if (o.backend == "table") {
        if (o.group.empty()) {
          throw InputError("the table backend needs --group <table.json>");
        }
        std::string text  = read_file(o.group);
        auto        table = CayleyTable::from_json(text);
        auto        report = validate_table(table);
        if (!report.passed()) {
          throw InputError("invalid Cayley table: " + report.first_failure());
        }
        Presentation g{table.a_count(), 0, false, {}};
        if (!o.pres.empty()) {
          std::string ptext = read_file(o.pres);
          g                 = parse_presentation(ptext);
          text += ptext;
          if (g.a_count != table.a_count()) {
            throw InputError("presentation and table disagree on the number of generators");
          }
          if (!check_relators(g, table)) {
            throw InputError("a relator of the presentation is not trivial in the table");
          }
        }
        return {std::move(g), std::move(table), hex_digest(text)};
      }
      if (o.backend == "free") {
        Presentation g;
        std::string  text;
        if (!o.group.empty()) {
          text = read_file(o.group);
          g    = parse_presentation(text);
          if (!g.relators.empty() || g.x_count != 0 || g.uses_h) {
            throw InputError("a free group is given by \"gens a:<k>\" without relators");
          }
        } else {
          g.a_count = o.rank;
          text      = "free:" + std::to_string(o.rank);
        }
        return {g, FreeGroup{g.a_count, o.radius}, hex_digest(text)};
      }
      if (o.group.empty() || o.oracle.empty()) {
        throw InputError("the oracle backend needs --group <pres> and --oracle <list>");
      }
      std::string text  = read_file(o.group);
      auto        g     = parse_presentation(text);
      std::string otext = read_file(o.oracle);
      auto        list  = parse_oracle_list(otext, g.a_count);
      return {std::move(g), std::move(list), hex_digest(text + otext)};
    }

    std::string value_text(SolutionValue const& v, GroupBackend const& backend) {
      if (auto const* w = std::get_if<Word>(&v)) {
        return to_string(*w);
      }
      auto const e = std::get<Element>(v);
      if (auto const* t = std::get_if<CayleyTable>(&backend)) {
        return t->name(e);
      }
      return std::to_string(e);
    }

    ordered_json tuple_json(SolutionTuple const& t, GroupBackend const& backend) {
      ordered_json out = ordered_json::object();
      for (auto const& e : t.entries) {
        out["x" + std::to_string(e.variable)] = value_text(e.value, backend);
      }
      return out;
    }

    // Serialised form inside solutions.json: element index or word text.
    ordered_json stored_tuple_json(SolutionTuple const& t) {
      ordered_json out = ordered_json::object();
      for (auto const& e : t.entries) {
        auto key = "x" + std::to_string(e.variable);
        if (auto const* w = std::get_if<Word>(&e.value)) {
          out[key] = to_string(*w);
        } else {
          out[key] = std::get<Element>(e.value);
        }
      }
      return out;
    }

    SolutionTuple stored_tuple_from_json(nlohmann::json const& j) {
      SolutionTuple t;
      for (auto const& [key, value] : j.items()) {
        Word name = parse_word(key);
        if (name.size() != 1 || !name[0].is_x()) {
          throw InputError("bad variable name \"" + key + "\" in solutions");
        }
        if (value.is_string()) {
          t.entries.push_back({name[0].index(), parse_word(value.get<std::string>())});
        } else {
          t.entries.push_back({name[0].index(), value.get<Element>()});
        }
      }
      std::sort(t.entries.begin(), t.entries.end(),
                [](auto const& a, auto const& b) { return a.variable < b.variable; });
      return t;
    }

    ////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////

    struct SolveOptions {
      GroupOptions group;
      std::string  eq;
      bool         json = false;
    };

    int cmd_solve(SolveOptions const& o, std::ostream& out) {
      auto loaded = load_group(o.group);
      auto eq     = recognize_quadratic(parse_word(o.eq));
      auto d      = decide(eq, loaded.backend);
      std::string status = d.verdict == Verdict::solvable     ? "solvable"
                           : d.verdict == Verdict::unsolvable ? "unsolvable"
                                                              : "inconclusive";
      if (d.solution && !verify_solution(eq, *d.solution, loaded.backend)) {
        throw VerificationError("returned solution does not satisfy the equation");
      }
      if (o.json) {
        ordered_json j;
        j["equation"] = to_string(eq.word());
        j["status"]   = status;
        if (d.solution) {
          j["solution"] = tuple_json(*d.solution, loaded.backend);
        }
        out << j.dump(2) << "\n";
      } else {
        out << status << "\n";
        if (d.solution) {
          for (auto const& e : d.solution->entries) {
            out << "x" << e.variable << " = " << value_text(e.value, loaded.backend) << "\n";
          }
        }
      }
      switch (d.verdict) {
        case Verdict::solvable:
          return ok;
        case Verdict::unsolvable:
          return unsolvable;
        default:
          return inconclusive;
      }
    }

    struct EnumerateOptions {
      GroupOptions  group;
      std::uint32_t n     = 2;
      std::size_t   count = 10;
      std::size_t   cap   = 6;
      bool          json  = false;
    };

    int cmd_enumerate(EnumerateOptions const& o, std::ostream& out) {
      auto loaded = load_group(o.group);
      EmbeddingParams::make(o.n);
      auto list = enumerate_solvable(loaded.backend, o.n, o.cap, o.count);
      if (o.json) {
        ordered_json j = ordered_json::array();
        for (std::size_t i = 0; i < list.size(); ++i) {
          ordered_json e;
          e["index"]    = i + 1;
          e["equation"] = to_string(list[i].equation.word());
          if (list[i].solution) {
            e["solution"] = tuple_json(*list[i].solution, loaded.backend);
          }
          j.push_back(e);
        }
        out << j.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < list.size(); ++i) {
          out << i + 1 << "\t" << to_string(list[i].equation.word());
          if (list[i].solution) {
            for (auto const& e : list[i].solution->entries) {
              out << "\tx" << e.variable << "=" << value_text(e.value, loaded.backend);
            }
          }
          out << "\n";
        }
      }
      return ok;
    }

    struct EmbedOptions {
      GroupOptions  group;
      std::uint32_t n       = 2;
      std::size_t   count   = 10;
      std::size_t   cap     = 6;
      std::uint64_t horizon = 10;
      std::string   out_dir;
    };

    int cmd_embed(EmbedOptions const& o, std::ostream& out, std::ostream& err) {
      auto const start  = std::chrono::steady_clock::now();
      auto       loaded = load_group(o.group);
      EmbeddingParams::make(o.n);
      auto result = build_embedding(loaded.g, loaded.backend, o.n, o.count, o.cap,
                                    EmbeddingOptions{o.horizon, true});
      auto const& p    = result.params;
      std::size_t const N = p.N;
      if (N < o.count) {
        err << "warning: only " << N << " solvable equations of total length <= " << o.cap
            << " exist; emitting " << N << "\n";
      }

      bool const          has_solutions = !std::holds_alternative<OracleList>(loaded.backend);
      ordered_json        solutions     = ordered_json::array();
      std::vector<SolutionTuple> stored;
      for (std::size_t i = 1; i <= N; ++i) {
        auto const& s = result.equations[i - 1];
        auto        t = transport_solution(i, s.equation, o.n);
        if (!verify_transport(i, s.equation, t.tuple, result.prh, result.base_relators, o.n)) {
          throw VerificationError("transported solution of equation " + std::to_string(i)
                                  + " does not match its relator");
        }
        ordered_json e;
        e["index"]           = i;
        e["equation"]        = to_string(s.equation.word());
        e["global_equation"] = to_string(copy_variables(s.equation.word(), i, o.n));
        e["solution"]        = s.solution ? stored_tuple_json(*s.solution) : ordered_json(nullptr);
        ordered_json transported = ordered_json::object();
        for (std::size_t k = 0; k < t.global_indices.size(); ++k) {
          ordered_json v;
          v["global_index"] = t.global_indices[k];
          v["v_index"]      = 2 * t.global_indices[k];
          v["length"]       = v_word_length(2 * t.global_indices[k], p.M);
          transported["x" + std::to_string(t.tuple.entries[k].variable)] = v;
        }
        e["transported"]        = transported;
        e["transported_length"] = t.length;
        e["proof_bound"]        = t.proof_bound;
        e["final_bound"]        = t.final_bound;
        solutions.push_back(e);
        if (s.solution) {
          stored.push_back(*s.solution);
        }
      }
      if (has_solutions) {
        for (std::size_t r = 0; r < result.g1.relators.size(); ++r) {
          auto image = retract_psi_infinity(result.g1.relators[r], stored, loaded.backend, o.n);
          bool trivial = std::holds_alternative<Element>(image)
                             ? std::get<Element>(image) == std::get<CayleyTable>(loaded.backend).identity()
                             : std::get<Word>(image).empty();
          if (!trivial) {
            throw VerificationError("the retraction does not kill relator " + std::to_string(r + 1)
                                    + " of g1");
          }
        }
      }

      std::string const run_line = "n=" + std::to_string(p.n) + " M=" + std::to_string(p.M)
                                   + " N=" + std::to_string(N) + " cap=" + std::to_string(o.cap);
      std::string const backend_line = "backend=" + std::string(backend_name(loaded.backend))
                                       + " digest=" + loaded.digest;
      std::string const g1_text  = serialize(result.g1, {"g1: group relators then W_i(X_i)", run_line, backend_line});
      std::string const g2_text  = serialize(result.g2, {"g2: g1 plus a_j V_{2j+1}^-1 then x_k V_{2k}^-1", run_line, backend_line});
      std::string const prh_text = serialize(result.prh,
                                             {"two-generator presentation: rewritten group relators then rewritten W_i",
                                              run_line, backend_line,
                                              "base_relators=" + std::to_string(result.base_relators)});
      ordered_json sol_doc;
      sol_doc["n"]         = p.n;
      sol_doc["M"]         = p.M;
      sol_doc["backend"]   = backend_name(loaded.backend);
      sol_doc["equations"] = solutions;
      std::string const sol_text = sol_doc.dump(2) + "\n";

      ordered_json manifest;
      manifest["tool"]            = "quadembed";
      manifest["version"]         = QUADEMBED_VERSION;
      manifest["n"]               = p.n;
      manifest["M"]               = p.M;
      manifest["C"]               = EmbeddingParams::C;
      manifest["N"]               = N;
      manifest["count_requested"] = o.count;
      manifest["cap"]             = o.cap;
      manifest["sc_horizon"]      = o.horizon;
      manifest["backend"]         = backend_name(loaded.backend);
      manifest["backend_digest"]  = loaded.digest;
      manifest["base_relators"]   = result.base_relators;
      manifest["seeds"]           = ordered_json::array();
      ordered_json files;
      files["g1.pres"]        = hex_digest(g1_text);
      files["g2.pres"]        = hex_digest(g2_text);
      files["prh.pres"]       = hex_digest(prh_text);
      files["solutions.json"] = hex_digest(sol_text);
      manifest["files"]       = files;

      fs::path dir(o.out_dir);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) {
        throw InputError("cannot create " + dir.string() + ": " + ec.message());
      }
      write_file(dir / "g1.pres", g1_text);
      write_file(dir / "g2.pres", g2_text);
      write_file(dir / "prh.pres", prh_text);
      write_file(dir / "solutions.json", sol_text);
      write_file(dir / "manifest.json", manifest.dump(2) + "\n");

      auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      out << "embedded " << N << " equations (n=" << p.n << ", M=" << p.M << ") into <h1, h2> with "
          << result.prh.relators.size() << " relators; wrote " << dir.string() << "\n";
      err << "elapsed " << ms << " ms\n";
      return ok;
    }

    struct DirOptions {
      std::string dir;
    };

    nlohmann::json read_json(fs::path const& path) {
      try {
        return nlohmann::json::parse(read_file(path.string()));
      } catch (nlohmann::json::exception const& e) {
        throw InputError(path.string() + ": " + e.what());
      }
    }

    int cmd_verify(DirOptions const& o, std::ostream& out) {
      fs::path const dir(o.dir);
      auto const     manifest  = read_json(dir / "manifest.json");
      std::string    sol_text  = read_file((dir / "solutions.json").string());
      std::string    prh_text  = read_file((dir / "prh.pres").string());
      std::string    g1_text   = read_file((dir / "g1.pres").string());
      std::string    g2_text   = read_file((dir / "g2.pres").string());
      auto const&    files     = manifest.at("files");
      std::vector<std::pair<char const*, std::string const*>> checks{
          {"g1.pres", &g1_text}, {"g2.pres", &g2_text}, {"prh.pres", &prh_text}, {"solutions.json", &sol_text}};
      for (auto const& [name, text] : checks) {
        if (files.at(name).get<std::string>() != hex_digest(*text)) {
          out << name << ": digest mismatch\n";
          return internal_failure;
        }
      }
      auto const n    = manifest.at("n").get<std::uint32_t>();
      auto const base = manifest.at("base_relators").get<std::size_t>();
      auto const prh  = parse_presentation(prh_text);
      auto const g1   = parse_presentation(g1_text);
      auto const sols = nlohmann::json::parse(sol_text);
      std::size_t i = 0;
      for (auto const& e : sols.at("equations")) {
        ++i;
        auto eq = recognize_quadratic(parse_word(e.at("equation").get<std::string>()));
        if (base + i > g1.relators.size()
            || g1.relators[base + i - 1] != copy_variables(eq.word(), i, n)) {
          out << "equation " << i << ": g1 relator mismatch\n";
          return internal_failure;
        }
        auto t = transport_solution(i, eq, n);
        if (!verify_transport(i, eq, t.tuple, prh, base, n)) {
          out << "equation " << i << ": transported solution does not match prh\n";
          return internal_failure;
        }
      }
      if (prh.relators.size() != base + i) {
        out << "prh has " << prh.relators.size() << " relators, expected " << base + i << "\n";
        return internal_failure;
      }
      out << "verified " << i << " transported solutions against prh.pres\n";
      return ok;
    }

    struct RetractOptions {
      GroupOptions group;
      std::string  dir;
      std::string  word;
    };

    int cmd_retract(RetractOptions const& o, std::ostream& out) {
      auto           loaded   = load_group(o.group);
      fs::path const dir(o.dir);
      auto const     manifest = read_json(dir / "manifest.json");
      auto const     sols     = read_json(dir / "solutions.json");
      if (manifest.at("backend").get<std::string>() != backend_name(loaded.backend)) {
        throw InputError("the embedding was built with a different backend");
      }
      std::vector<SolutionTuple> stored;
      for (auto const& e : sols.at("equations")) {
        if (e.at("solution").is_null()) {
          throw InputError("the embedding carries no solution values");
        }
        stored.push_back(stored_tuple_from_json(e.at("solution")));
      }
      auto const n     = manifest.at("n").get<std::uint32_t>();
      auto const image = retract_psi_infinity(parse_word(o.word), stored, loaded.backend, n);
      out << value_text(image, loaded.backend) << "\n";
      return ok;
    }

    struct VwordOptions {
      std::uint32_t n     = 2;
      std::uint64_t i     = 1;
      bool          stats = false;
      bool          json  = false;
    };

    int cmd_vword(VwordOptions const& o, std::ostream& out) {
      auto const params = EmbeddingParams::make(o.n);
      Word const v      = v_word(o.i, params.M);
      if (!o.stats) {
        out << to_string(v) << "\n";
        return ok;
      }
      auto const          s      = v_word_stats(v);
      std::uint64_t const closed = v_word_length(o.i, params.M);
      if (o.json) {
        ordered_json j;
        j["n"]           = o.n;
        j["M"]           = params.M;
        j["i"]           = o.i;
        j["length"]      = s.length;
        j["closed_form"] = closed;
        j["h1_count"]    = s.h1_count;
        j["run_range"]   = {s.min_run, s.max_run};
        out << j.dump(2) << "\n";
      } else {
        out << "length " << s.length << "\n"
            << "closed_form " << closed << "\n"
            << "h1_count " << s.h1_count << "\n"
            << "run_range [" << s.min_run << ", " << s.max_run << "]\n";
      }
      return s.length == closed ? ok : internal_failure;
    }

    struct ScOptions {
      std::uint32_t n     = 2;
      std::uint64_t max_i = 10;
      bool          json  = false;
    };

    int cmd_check_sc(ScOptions const& o, std::ostream& out) {
      auto const params  = EmbeddingParams::make(o.n);
      auto const reports = small_cancellation_sweep(params.M, o.max_i);
      bool       all     = true;
      ordered_json j     = ordered_json::array();
      for (auto const& r : reports) {
        all = all && r.passed();
        if (o.json) {
          ordered_json e;
          e["i"]           = r.i;
          e["j"]           = r.j;
          e["threshold"]   = r.threshold;
          e["occurrences"] = r.occurrences.size();
          e["passed"]      = r.passed();
          e["failures"]    = r.failures;
          j.push_back(e);
        } else {
          out << "V_" << r.i << " vs V_" << r.j << ": |V_i|=" << r.length_i
              << " |V_j|=" << r.length_j << " threshold=" << r.threshold
              << " long_common_subwords=" << r.occurrences.size() << " "
              << (r.passed() ? "PASS" : "FAIL") << "\n";
          for (auto const& f : r.failures) {
            out << "  " << f << "\n";
          }
        }
      }
      if (o.json) {
        ordered_json doc;
        doc["n"]      = o.n;
        doc["M"]      = params.M;
        doc["pairs"]  = j;
        doc["passed"] = all;
        out << doc.dump(2) << "\n";
      } else {
        out << (all ? "all pairs pass" : "FAILED") << " (M=" << params.M << ", "
            << reports.size() << " pairs)\n";
      }
      return all ? ok : internal_failure;
    }

    struct MapOptions {
      std::string   file;
      std::size_t   sweep = 0;
      std::uint64_t seed  = 1;
      bool          json  = false;
    };

    int cmd_check_map(MapOptions const& o, std::ostream& out) {
      if (o.sweep > 0) {
        auto r = edge_bound_sweep(o.seed, o.sweep);
        if (o.json) {
          ordered_json j;
          j["seed"]      = o.seed;
          j["generated"] = r.generated;
          j["accepted"]  = r.accepted;
          j["tight"]     = r.tight;
          j["failures"]  = r.failures;
          j["min_chi"]   = r.min_chi;
          out << j.dump(2) << "\n";
        } else {
          out << "generated " << r.generated << " maps, " << r.accepted
              << " with property B2, " << r.tight << " tight, " << r.failures
              << " edge-bound failures, min chi " << r.min_chi << "\n";
        }
        return r.failures == 0 ? ok : internal_failure;
      }
      if (o.file.empty()) {
        throw InputError("check-map needs --file or --sweep");
      }
      auto const m   = CombinatorialMap::from_json(read_file(o.file));
      auto const chi = euler_characteristic(m);
      bool const b2  = check_property_B2(m);
      std::optional<EdgeBoundReport> bound;
      if (b2) {
        bound = verify_edge_bound(m);
      }
      if (o.json) {
        ordered_json j;
        j["vertices"]     = m.vertex_count();
        j["edges"]        = m.edge_count();
        j["faces"]        = m.face_count();
        j["chi"]          = chi;
        j["face_degrees"] = m.face_degrees();
        j["property_B2"]  = b2;
        j["edge_bound_slack"] = bound ? ordered_json(bound->slack) : ordered_json(nullptr);
        out << j.dump(2) << "\n";
      } else {
        out << "V=" << m.vertex_count() << " E=" << m.edge_count() << " F=" << m.face_count()
            << " chi=" << chi << "\nface degrees:";
        for (auto d : m.face_degrees()) {
          out << " " << d;
        }
        out << "\nproperty B2: " << (b2 ? "yes" : "no") << "\n";
        if (bound) {
          out << "edge bound: E=" << bound->edges << " <= 3(V - chi)=" << bound->bound
              << " slack " << bound->slack << (bound->passed() ? "" : " VIOLATED") << "\n";
        } else {
          out << "edge bound: not applicable\n";
        }
      }
      return !bound || bound->passed() ? ok : internal_failure;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-generator embeddings preserving solvability of quadratic equations"};
    app.name("quadembed");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(QUADEMBED_VERSION));

    SolveOptions solve;
    auto*        solve_cmd = app.add_subcommand("solve", "Decide one quadratic equation");
    add_group_options(solve_cmd, solve.group, false);
    solve_cmd->add_option("--eq", solve.eq, "Equation word, e.g. x1.a1.x1^-1.a1")->required();
    solve_cmd->add_flag("--json", solve.json);

    EnumerateOptions enumerate;
    auto* enum_cmd = app.add_subcommand("enumerate", "List the first solvable quadratic equations");
    add_group_options(enum_cmd, enumerate.group, false);
    enum_cmd->add_option("--n", enumerate.n, "Even bound on |W|_X")->required();
    enum_cmd->add_option("--count", enumerate.count, "Number of equations");
    enum_cmd->add_option("--cap", enumerate.cap, "Bound on the total length |W|");
    enum_cmd->add_flag("--json", enumerate.json);

    EmbedOptions embed;
    auto*        embed_cmd = app.add_subcommand("embed", "Build the two-generator presentation");
    add_group_options(embed_cmd, embed.group, false);
    embed_cmd->add_option("--n", embed.n, "Even bound on |W|_X")->required();
    embed_cmd->add_option("--count", embed.count, "Number N of enumerated equations");
    embed_cmd->add_option("--cap", embed.cap, "Bound on the total length of equations");
    embed_cmd->add_option("--sc-horizon", embed.horizon, "Small-cancellation check horizon");
    embed_cmd->add_option("--out", embed.out_dir, "Output directory")->required();

    DirOptions verify;
    auto*      verify_cmd = app.add_subcommand("verify", "Re-check an embed output directory");
    verify_cmd->add_option("--dir", verify.dir)->required();

    RetractOptions retract;
    auto* retract_cmd = app.add_subcommand("retract", "Apply the retraction onto G to a word");
    add_group_options(retract_cmd, retract.group, false);
    retract_cmd->add_option("--dir", retract.dir, "embed output directory")->required();
    retract_cmd->add_option("--word", retract.word, "Word over a- and global x-letters")->required();

    VwordOptions vword;
    auto*        vword_cmd = app.add_subcommand("vword", "Print the coding word V_i");
    vword_cmd->add_option("--n", vword.n)->required();
    vword_cmd->add_option("--i", vword.i)->required();
    vword_cmd->add_flag("--stats", vword.stats, "Print run-length statistics instead");
    vword_cmd->add_flag("--json", vword.json);

    ScOptions sc;
    auto*     sc_cmd = app.add_subcommand("check-sc", "Small-cancellation report for V_1..V_k");
    sc_cmd->add_option("--n", sc.n)->required();
    sc_cmd->add_option("--max-i", sc.max_i);
    sc_cmd->add_flag("--json", sc.json);

    MapOptions map;
    auto*      map_cmd = app.add_subcommand("check-map", "Euler characteristic and edge bound of a map");
    map_cmd->add_option("--file", map.file, "Map JSON");
    map_cmd->add_option("--sweep", map.sweep, "Check this many random maps with property B2");
    map_cmd->add_option("--seed", map.seed, "First seed of the sweep");
    map_cmd->add_flag("--json", map.json);

    std::vector<char const*> argv{"quadembed"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForVersion const&) {
      out << QUADEMBED_VERSION << "\n";
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << "\n";
      return usage_error;
    }

    try {
      if (solve_cmd->parsed()) {
        return cmd_solve(solve, out);
      }
      if (enum_cmd->parsed()) {
        return cmd_enumerate(enumerate, out);
      }
      if (embed_cmd->parsed()) {
        return cmd_embed(embed, out, err);
      }
      if (verify_cmd->parsed()) {
        return cmd_verify(verify, out);
      }
      if (retract_cmd->parsed()) {
        return cmd_retract(retract, out);
      }
      if (vword_cmd->parsed()) {
        return cmd_vword(vword, out);
      }
      if (sc_cmd->parsed()) {
        return cmd_check_sc(sc, out);
      }
      return cmd_check_map(map, out);
    } catch (InputError const& e) {
      err << "input error: " << e.what() << "\n";
      return input_error;
    } catch (UndecidableError const& e) {
      err << "input error: " << e.what() << "\n";
      return input_error;
    } catch (VerificationError const& e) {
      err << "verification failure: " << e.what() << "\n";
      return internal_failure;
    } catch (nlohmann::json::exception const& e) {
      err << "input error: " << e.what() << "\n";
      return input_error;
    }
  }

}  // namespace quadembed::cli
