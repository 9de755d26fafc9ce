// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// JSON reading and writing for presentations, block maps and semigroups,
// and a GAP export of Cayley tables. Needs nlohmann/json (json.hpp).

#ifndef SHIFTCAT_IO_HPP_
#define SHIFTCAT_IO_HPP_

#include <algorithm>  // for sort, all_of
#include <cstddef>    // for size_t
#include <fstream>    // for ifstream
#include <map>        // for map
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <vector>     // for vector

#include "json.hpp"

#include "codes.hpp"
#include "errors.hpp"
#include "karoubi.hpp"
#include "semigroups.hpp"
#include "shifts.hpp"
#include "words.hpp"

namespace shiftcat {

  using Json = nlohmann::ordered_json;

  namespace schema {
    inline constexpr char const* shift     = "shiftcat/shift/1";
    inline constexpr char const* block_map = "shiftcat/block-map/1";
    inline constexpr char const* semigroup = "shiftcat/semigroup/1";
    inline constexpr char const* green     = "shiftcat/green/1";
    inline constexpr char const* report    = "shiftcat/report/1";
  }  // namespace schema

  ////////////////////////////////////////////////////////////////////////
  // Files and words
  ////////////////////////////////////////////////////////////////////////

  inline Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    detail::require(in.good(), ErrorKind::parse, "cannot open " + path);
    try {
      return Json::parse(in);
    } catch (Json::parse_error const& e) {
      throw Error(ErrorKind::parse, path + ": " + e.what());
    }
  }

  // A string when every symbol is one character, else an array of symbols.
  inline Json word_to_json(Alphabet const& A, Word const& w) {
    bool const chars = std::all_of(A.symbols().begin(),
                                   A.symbols().end(),
                                   [](auto const& s) { return s.size() == 1; });
    if (chars) {
      return A.format(w);
    }
    Json arr = Json::array();
    for (auto a : w) {
      arr.push_back(A.name(a));
    }
    return arr;
  }

  inline Word word_from_json(Alphabet const& A, Json const& j) {
    if (j.is_string()) {
      return A.parse(j.get<std::string>());
    }
    detail::require(j.is_array(),
                    ErrorKind::parse,
                    "a word must be a string or an array of symbols");
    Word w;
    for (auto const& s : j) {
      detail::require(s.is_string(), ErrorKind::parse, "symbols are strings");
      auto a = A.find(s.get<std::string>());
      detail::require(a.has_value(),
                      ErrorKind::parse,
                      "unknown symbol '" + s.get<std::string>() + "'");
      w.push_back(*a);
    }
    return w;
  }

  inline Json words_to_json(Alphabet const& A, WordSet const& ws) {
    Json arr = Json::array();
    for (auto const& w : ws) {
      arr.push_back(word_to_json(A, w));
    }
    return arr;
  }

  namespace detail {
    inline Json const& field(Json const& j, char const* key) {
      require(j.is_object() && j.contains(key),
              ErrorKind::parse,
              std::string("missing field '") + key + "'");
      return j.at(key);
    }

    inline std::vector<std::string> strings(Json const& j, char const* what) {
      require(j.is_array(), ErrorKind::parse, std::string(what) + " must be a list");
      std::vector<std::string> result;
      for (auto const& s : j) {
        require(s.is_string(),
                ErrorKind::parse,
                std::string(what) + " must hold strings");
        result.push_back(s.get<std::string>());
      }
      return result;
    }

    template <typename F>
    auto guard_json(F&& f) {
      try {
        return f();
      } catch (nlohmann::json::exception const& e) {
        throw Error(ErrorKind::parse, e.what());
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  // {"kind": "sft", "alphabet": [...], "forbidden": [...]} or
  // {"kind": "sofic", "vertices": [...], "edges": [[src, label, dst], ...]}
  // with an optional "alphabet" (default: the edge labels, sorted).
  inline ShiftPresentation shift_from_json(Json const& j) {
    return detail::guard_json([&] {
      auto const kind = detail::field(j, "kind").get<std::string>();
      if (kind == "sft") {
        Alphabet const A(
            detail::strings(detail::field(j, "alphabet"), "alphabet"));
        std::vector<Word> forbidden;
        for (auto const& w : j.value("forbidden", Json::array())) {
          forbidden.push_back(word_from_json(A, w));
        }
        return ShiftPresentation::sft(A, std::move(forbidden));
      }
      detail::require(kind == "sofic",
                      ErrorKind::parse,
                      "kind must be 'sft' or 'sofic', not '" + kind + "'");
      auto const names
          = detail::strings(detail::field(j, "vertices"), "vertices");
      std::map<std::string, std::size_t> index;
      for (std::size_t v = 0; v < names.size(); ++v) {
        detail::require(index.emplace(names[v], v).second,
                        ErrorKind::parse,
                        "duplicate vertex '" + names[v] + "'");
      }
      auto const&                                  E = detail::field(j, "edges");
      std::vector<std::vector<std::string>>       raw;
      for (auto const& e : E) {
        auto triple = detail::strings(e, "an edge");
        detail::require(triple.size() == 3,
                        ErrorKind::parse,
                        "an edge is [source, label, target]");
        raw.push_back(std::move(triple));
      }
      std::vector<std::string> symbols;
      if (j.contains("alphabet")) {
        symbols = detail::strings(j.at("alphabet"), "alphabet");
      } else {
        std::set<std::string> labels;
        for (auto const& e : raw) {
          labels.insert(e[1]);
        }
        symbols.assign(labels.begin(), labels.end());
      }
      Alphabet const    A(symbols);
      std::vector<Edge> edges;
      for (auto const& e : raw) {
        auto vertex = [&](std::string const& name) {
          auto it = index.find(name);
          detail::require(it != index.end(),
                          ErrorKind::parse,
                          "unknown vertex '" + name + "'");
          return it->second;
        };
        auto label = A.find(e[1]);
        detail::require(label.has_value(),
                        ErrorKind::parse,
                        "unknown edge label '" + e[1] + "'");
        edges.push_back({vertex(e[0]), *label, vertex(e[2])});
      }
      return ShiftPresentation::sofic(A, names, std::move(edges));
    });
  }

  inline ShiftPresentation read_shift(std::string const& path) {
    try {
      return shift_from_json(read_json_file(path));
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::parse && !e.message().starts_with(path)) {
        throw Error(ErrorKind::parse, path + ": " + e.message());
      }
      throw;
    }
  }

  inline Json shift_to_json(ShiftPresentation const& X) {
    Json j;
    j["schema"]   = schema::shift;
    j["alphabet"] = X.alphabet().symbols();
    if (X.kind() == ShiftPresentation::Kind::sft) {
      j["kind"]      = "sft";
      Json forbidden = Json::array();
      for (auto const& w : X.forbidden()) {
        forbidden.push_back(word_to_json(X.alphabet(), w));
      }
      j["forbidden"] = forbidden;
    } else {
      j["kind"]     = "sofic";
      j["vertices"] = X.vertex_names();
      Json edges    = Json::array();
      for (auto const& e : X.edges()) {
        edges.push_back({X.vertex_names()[e.src],
                         X.alphabet().name(e.label),
                         X.vertex_names()[e.dst]});
      }
      j["edges"] = edges;
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Block maps
  ////////////////////////////////////////////////////////////////////////

  // {"source": [...], "target": [...], "memory": m, "anticipation": n,
  //  "window": m + n + 1, "table": {"00": "0", ...}}; the table must cover
  // every block of the window length.
  inline BlockMap block_map_from_json(Json const& j) {
    return detail::guard_json([&] {
      Alphabet const A(detail::strings(detail::field(j, "source"), "source"));
      Alphabet const B(detail::strings(detail::field(j, "target"), "target"));
      auto const     m = detail::field(j, "memory").get<std::size_t>();
      auto const     n = detail::field(j, "anticipation").get<std::size_t>();
      if (j.contains("window")) {
        detail::require(j.at("window").get<std::size_t>() == m + n + 1,
                        ErrorKind::parse,
                        "window differs from memory + anticipation + 1");
      }
      std::map<Word, Letter> table;
      for (auto const& [key, value] : detail::field(j, "table").items()) {
        Word w = A.parse(key);
        detail::require(w.size() == m + n + 1,
                        ErrorKind::parse,
                        "table key '" + key + "' has the wrong length");
        auto b = B.find(value.get<std::string>());
        detail::require(b.has_value(),
                        ErrorKind::parse,
                        "table value '" + value.get<std::string>()
                            + "' is not in the target alphabet");
        table[w] = *b;
      }
      return BlockMap::from_function(A, B, m, n, [&](Word const& w) {
        auto it = table.find(w);
        detail::require(it != table.end(),
                        ErrorKind::parse,
                        "the table has no entry for '" + A.format(w) + "'");
        return it->second;
      });
    });
  }

  inline BlockMap read_block_map(std::string const& path) {
    try {
      return block_map_from_json(read_json_file(path));
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::parse && !e.message().starts_with(path)) {
        throw Error(ErrorKind::parse, path + ": " + e.message());
      }
      throw;
    }
  }

  inline Json block_map_to_json(BlockMap const& Phi) {
    Json j;
    j["schema"]       = schema::block_map;
    j["window"]       = Phi.window();
    j["source"]       = Phi.source().symbols();
    j["target"]       = Phi.target().symbols();
    j["memory"]       = Phi.memory();
    j["anticipation"] = Phi.anticipation();
    Json table        = Json::object();
    std::size_t const size
        = detail::checked_power(Phi.source().size(), Phi.window());
    for (std::size_t x = 0; x < size; ++x) {
      Word w = detail::decode(x, Phi.source().size(), Phi.window());
      table[Phi.source().format(w)] = Phi.target().name(Phi(w));
    }
    j["table"] = table;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroups
  ////////////////////////////////////////////////////////////////////////

  // Cayley table (0-based) with a shortest generator word per element.
  inline Json semigroup_to_json(FiniteSemigroup const&      S,
                                std::vector<Element> const& accept = {}) {
    Json j;
    j["schema"] = schema::semigroup;
    j["size"]   = S.size();
    Json gens   = Json::object();
    for (Letter a = 0; a < S.generators().size(); ++a) {
      gens[S.alphabet().name(a)] = S.generators()[a];
    }
    j["generators"] = gens;
    Json witnesses  = Json::array();
    for (Element x = 0; x < S.size(); ++x) {
      witnesses.push_back(word_to_json(S.alphabet(), S.witness(x)));
    }
    j["witnesses"] = witnesses;
    Json table     = Json::array();
    for (Element x = 0; x < S.size(); ++x) {
      Json row = Json::array();
      for (Element y = 0; y < S.size(); ++y) {
        row.push_back(S.product(x, y));
      }
      table.push_back(row);
    }
    j["table"]       = table;
    j["idempotents"] = S.idempotents();
    if (!accept.empty()) {
      j["accept"] = accept;
    }
    return j;
  }

  // A GAP session line building the semigroup from its 1-based table.
  inline std::string to_gap(FiniteSemigroup const& S) {
    std::ostringstream out;
    out << "# " << S.size() << " elements; element i is the word\n";
    for (Element x = 0; x < S.size(); ++x) {
      out << "#   " << x + 1 << ": " << S.alphabet().format(S.witness(x)) << "\n";
    }
    out << "S := SemigroupByMultiplicationTable([";
    for (Element x = 0; x < S.size(); ++x) {
      out << (x ? ",\n  [" : "\n  [");
      for (Element y = 0; y < S.size(); ++y) {
        out << (y ? "," : "") << S.product(x, y) + 1;
      }
      out << "]";
    }
    out << "]);\n";
    return out.str();
  }

  inline Json green_to_json(FiniteSemigroup const& S) {
    auto const& g = S.green();
    Json        j;
    j["schema"]      = schema::green;
    j["size"]        = S.size();
    j["R"]           = g.nR;
    j["L"]           = g.nL;
    j["J"]           = g.nJ;
    j["H"]           = g.nH;
    j["idempotents"] = S.idempotents().size();
    Json classes     = Json::array();
    for (std::size_t c = 0; c < g.nJ; ++c) {
      auto const            members = g.J_class(c);
      std::set<std::size_t> r, l, h;
      std::size_t           idem = 0;
      for (auto x : members) {
        r.insert(g.R[x]);
        l.insert(g.L[x]);
        h.insert(g.H[x]);
        idem += S.is_idempotent(x) ? 1 : 0;
      }
      Json below = Json::array();
      for (std::size_t d = 0; d < g.nJ; ++d) {
        if (d != c && g.J_leq[d][c]) {
          below.push_back(d);
        }
      }
      Json cls;
      cls["id"]             = c;
      cls["representative"] = word_to_json(S.alphabet(), S.witness(members[0]));
      cls["size"]           = members.size();
      cls["R"]              = r.size();
      cls["L"]              = l.size();
      cls["H"]              = h.size();
      cls["idempotents"]    = idem;
      cls["regular"]        = static_cast<bool>(g.regular[c]);
      cls["group"] = schutzenberger_of(S, members[0]).group.descriptor();
      cls["below"] = below;
      classes.push_back(cls);
    }
    j["J_classes"] = classes;
    return j;
  }

  inline Json poset_to_json(LabeledPoset const& P, FiniteSemigroup const& S) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < P.size(); ++i) {
      Json below = Json::array();
      for (std::size_t k = 0; k < P.size(); ++k) {
        if (k != i && P.leq[k][i]) {
          below.push_back(k);
        }
      }
      Json n;
      n["id"]             = i;
      n["representative"] = word_to_json(S.alphabet(), S.witness(P.representative[i]));
      n["label"]          = P.label(i);
      n["below"]          = below;
      nodes.push_back(n);
    }
    return nodes;
  }

  inline Json census_to_json(Census const& C) {
    Json by_size = Json::object();
    for (auto const& [n, count] : C.objects_by_class_size) {
      by_size[std::to_string(n)] = count;
    }
    return by_size;
  }

}  // namespace shiftcat

#endif  // SHIFTCAT_IO_HPP_
