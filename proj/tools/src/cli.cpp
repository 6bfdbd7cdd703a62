#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "eqrank/chars.hpp"
#include "eqrank/dioph.hpp"
#include "eqrank/embed.hpp"
#include "eqrank/equiv.hpp"
#include "eqrank/error.hpp"
#include "eqrank/metric.hpp"
#include "eqrank/parse.hpp"
#include "eqrank/rootsys.hpp"
#include "eqrank/verify.hpp"

namespace eqrank::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

Json rational_json(const Rational& q) { return q.get_str(); }

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i)));
  return rows;
}

Json invariant_json(const EquivClassInvariant& inv) {
  Json counts = Json::object();
  for (const auto& [n, c] : inv.a_counts) counts["A" + std::to_string(n)] = c;
  return Json{{"rank", inv.rank}, {"a_counts", counts}, {"a4_odd", inv.a4_odd}};
}

Json character_json(const FormalCharacter& c) {
  Json weights = Json::array();
  for (const auto& [w, m] : c.sorted()) weights.push_back(Json{{"weight", vec_json(w.coords())}, {"multiplicity", m}});
  return Json{{"algebra", c.algebra().to_string()},
              {"dim", c.dim()},
              {"distinct_weights", c.num_distinct()},
              {"weights", weights}};
}

void print_matrix(std::ostream& out, const std::string& label, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) out << label << " row " << (i + 1) << ": " << to_string(m.row(i)) << "\n";
}

void print_character(std::ostream& out, const FormalCharacter& c) {
  out << "algebra " << c.algebra().to_string() << "\n";
  out << "dim " << c.dim() << "\n";
  out << "distinct weights " << c.num_distinct() << "\n";
  for (const auto& [w, m] : c.sorted()) out << "weight " << w.to_string() << " multiplicity " << m << "\n";
}

std::vector<std::string> invariant_differences(const EquivClassInvariant& a, const EquivClassInvariant& b) {
  std::vector<std::string> out;
  if (a.rank != b.rank) out.push_back("rank " + std::to_string(a.rank) + " vs " + std::to_string(b.rank));
  std::set<int> ns;
  for (const auto& [n, c] : a.a_counts) ns.insert(n);
  for (const auto& [n, c] : b.a_counts) ns.insert(n);
  for (int n : ns) {
    const int ca = a.a_counts.contains(n) ? a.a_counts.at(n) : 0;
    const int cb = b.a_counts.contains(n) ? b.a_counts.at(n) : 0;
    if (ca != cb)
      out.push_back("A" + std::to_string(n) + " count " + std::to_string(ca) + " vs " + std::to_string(cb));
  }
  if (a.a4_odd != b.a4_odd)
    out.push_back(std::string("A4 parity ") + (a.a4_odd ? "odd" : "even") + " vs " + (b.a4_odd ? "odd" : "even"));
  return out;
}

Vec labels_vec(const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Weight diagram of a rank-2 character: points in the plane where the
// Euclidean product matches the model gram.
std::string weight_svg(const FormalCharacter& c) {
  const auto model = algebra_model(c.algebra());
  const Matrix& g = model->gram();
  const double g00 = g(0, 0).get_d(), g01 = g(0, 1).get_d(), g11 = g(1, 1).get_d();
  const double l00 = std::sqrt(g00), l01 = g01 / l00, l11 = std::sqrt(g11 - l01 * l01);
  struct Point {
    double x, y;
    std::uint64_t m;
  };
  std::vector<Point> pts;
  double extent = 1;
  for (const auto& [w, m] : c.sorted()) {
    const double a = w[0].get_d(), b = w[1].get_d();
    Point p{l00 * a + l01 * b, l11 * b, m};
    extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    pts.push_back(p);
  }
  const double size = 400, scale = (size / 2 - 30) / extent;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  os << "<title>" << c.algebra().to_string() << " weights, dim " << c.dim() << "</title>\n";
  for (const auto& p : pts) {
    const double cx = size / 2 + p.x * scale, cy = size / 2 - p.y * scale;
    os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << 3 + 2 * static_cast<double>(p.m - 1)
       << "\" fill=\"black\"/>\n";
    if (p.m > 1) os << "<text x=\"" << cx + 6 << "\" y=\"" << cy - 6 << "\" font-size=\"11\">" << p.m << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

FormalCharacter chosen_character(const SemisimpleAlgebra& g, bool adjoint, const std::vector<long>& hw) {
  if (adjoint == !hw.empty()) throw Error("give exactly one of --adjoint and a highest weight");
  if (adjoint) return adjoint_character(g);
  if (hw.size() != static_cast<std::size_t>(g.rank()))
    throw Error("highest weight needs " + std::to_string(g.rank()) + " Dynkin labels");
  return irreducible_character_from_labels(g, labels_vec(hw));
}

// First argument that is neither an option nor the value of --format.
std::optional<std::string> first_command(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
      continue;
    }
    if (!args[i].starts_with("-")) return args[i];
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equal-rank subalgebra equivalence of semisimple Lie algebras", "eqrank"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string alg1, alg2, simple, svg;
  std::vector<long> hw;
  bool adjoint = false, restrict_adjoint = false;
  int max_rank = 8;

  auto* c_inv = app.add_subcommand("invariant", "Rank, protected A_n counts and A4 parity");
  c_inv->add_option("algebra", alg1)->required();
  auto* c_can = app.add_subcommand("canonical", "Canonical representative of the equivalence class");
  c_can->add_option("algebra", alg1)->required();
  auto* c_eq = app.add_subcommand("equiv", "Decide equivalence; exit 0 if equivalent, 1 if not");
  c_eq->add_option("first", alg1)->required();
  c_eq->add_option("second", alg2)->required();
  auto* c_red = app.add_subcommand("reduce", "Rewrite to A-type factors step by step");
  c_red->add_option("algebra", alg1)->required();
  auto* c_d = app.add_subcommand("solve-d", "Solutions of 2 = m/(m+1) + (l-k)(k+1)/(l+1)");
  auto* c_char = app.add_subcommand("char", "Formal character of an irreducible or adjoint module");
  c_char->add_option("algebra", alg1)->required();
  c_char->add_option("--highest-weight,--hw", hw, "Dynkin labels")->delimiter(',');
  c_char->add_flag("--adjoint", adjoint);
  c_char->add_option("--svg", svg, "Write a weight diagram (rank 2 only)");
  auto* c_gram = app.add_subcommand("gram", "Metric induced by a character");
  c_gram->add_option("algebra", alg1)->required();
  c_gram->add_option("--hw,--highest-weight", hw, "Dynkin labels")->delimiter(',');
  c_gram->add_flag("--adjoint", adjoint);
  auto* c_branch = app.add_subcommand("branch", "Maximal equal-rank subalgebras of a simple type");
  c_branch->add_option("type", simple)->required();
  c_branch->add_flag("--restrict-adjoint", restrict_adjoint, "Restrict the adjoint character and compare");
  auto* c_verify = app.add_subcommand("verify", "Run every cross-check; exit 0 when all pass");
  auto* c_table = app.add_subcommand("table", "Maximal-rank subalgebras of simple types");
  c_table->add_option("--max-rank", max_rank)->check(CLI::Range(1, 64));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const auto command = first_command(args);
    if (command && app.get_subcommand_no_throw(*command) == nullptr)
      err << "unknown command: " << *command << "\n";
    else
      app.exit(e, out, err);
    err << app.help();
    return 2;
  }
  const Format fmt = format == "json" ? Format::Json : Format::Text;

  try {
    if (*c_inv) {
      const auto g = parse_algebra(alg1);
      const auto inv = invariant(g);
      if (fmt == Format::Json) {
        Json j{{"algebra", g.to_string()}};
        j.update(invariant_json(inv));
        out << j.dump(2) << "\n";
      } else {
        out << "algebra " << g.to_string() << "\n" << inv.to_string() << "\n";
      }
      return 0;
    }
    if (*c_can) {
      const auto g = parse_algebra(alg1);
      const auto c = canonical_form(g);
      if (fmt == Format::Json)
        out << Json{{"algebra", g.to_string()}, {"canonical", c.to_string()}}.dump(2) << "\n";
      else
        out << c.to_string() << "\n";
      return 0;
    }
    if (*c_eq) {
      const auto g = parse_algebra(alg1);
      const auto h = parse_algebra(alg2);
      const auto ig = invariant(g), ih = invariant(h);
      const auto diffs = invariant_differences(ig, ih);
      if (fmt == Format::Json) {
        out << Json{{"first", g.to_string()},
                    {"second", h.to_string()},
                    {"equivalent", diffs.empty()},
                    {"first_invariant", invariant_json(ig)},
                    {"second_invariant", invariant_json(ih)},
                    {"differences", diffs}}
                   .dump(2)
            << "\n";
      } else {
        out << (diffs.empty() ? "equivalent" : "not equivalent") << "\n";
        for (const auto& d : diffs) out << "differs: " << d << "\n";
      }
      return diffs.empty() ? 0 : 1;
    }
    if (*c_red) {
      const auto g = parse_algebra(alg1);
      const auto red = a_type_reduction(g);
      if (fmt == Format::Json) {
        Json steps = Json::array();
        for (const auto& s : red.steps)
          steps.push_back(Json{{"before", s.before.to_string()}, {"after", s.after.to_string()}, {"rule", s.rule}});
        out << Json{{"algebra", g.to_string()}, {"steps", steps}, {"result", red.result.to_string()}}.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < red.steps.size(); ++i)
          out << "step " << (i + 1) << ": " << red.steps[i].before.to_string() << " -> "
              << red.steps[i].after.to_string() << " by " << red.steps[i].rule << "\n";
        out << "result " << red.result.to_string() << "\n";
      }
      return 0;
    }
    if (*c_d) {
      const auto sols = solve_D();
      if (fmt == Format::Json) {
        Json a = Json::array();
        for (const auto& s : sols) a.push_back(Json{{"m", s.m}, {"l", s.l}, {"k", s.k}});
        out << Json{{"solutions", a}}.dump(2) << "\n";
      } else {
        for (const auto& s : sols) out << "(m,l,k)=(" << s.m << "," << s.l << "," << s.k << ")\n";
      }
      return 0;
    }
    if (*c_char) {
      const auto g = parse_algebra(alg1);
      const auto c = chosen_character(g, adjoint, hw);
      if (!svg.empty()) {
        if (g.rank() != 2) throw Error("--svg needs a rank-2 algebra");
        std::ofstream f(svg);
        if (!f) throw Error("cannot write " + svg);
        f << weight_svg(c);
      }
      if (fmt == Format::Json)
        out << character_json(c).dump(2) << "\n";
      else
        print_character(out, c);
      return 0;
    }
    if (*c_gram) {
      const auto g = parse_algebra(alg1);
      const auto m = character_metric(chosen_character(g, adjoint, hw));
      if (fmt == Format::Json) {
        Json scalars = Json::array();
        for (const auto& s : m.block_scalars) scalars.push_back(rational_json(s));
        out << Json{{"algebra", g.to_string()},
                    {"dual_form", matrix_json(m.dual_form)},
                    {"form", matrix_json(m.form)},
                    {"block_scalars", scalars}}
                   .dump(2)
            << "\n";
      } else {
        out << "algebra " << g.to_string() << "\n";
        print_matrix(out, "dual_form", m.dual_form);
        print_matrix(out, "form", m.form);
        for (std::size_t i = 0; i < m.block_scalars.size(); ++i)
          out << "block " << (i + 1) << " " << g.factors()[i].to_string() << " scalar " << to_string(m.block_scalars[i])
              << "\n";
      }
      return 0;
    }
    if (*c_branch) {
      const auto t = parse_simple_type(simple);
      std::string note;
      const auto es = maximal_equal_rank_subalgebras(t, &note);
      std::vector<FormalCharacter> restricted;
      if (restrict_adjoint) {
        const auto adj = adjoint_character(SemisimpleAlgebra{t});
        for (const auto& e : es) restricted.push_back(restrict_character(adj, e));
      }
      if (fmt == Format::Json) {
        Json list = Json::array();
        for (std::size_t i = 0; i < es.size(); ++i) {
          Json roots = Json::array();
          for (std::size_t j = 0; j < es[i].sub_simple_roots.cols(); ++j)
            roots.push_back(vec_json(es[i].sub_simple_roots.column(j)));
          Json e{{"sub", es[i].sub.to_string()}, {"origin", es[i].origin}, {"simple_roots", roots}};
          if (restrict_adjoint) e["restricted_adjoint"] = character_json(restricted[i]);
          list.push_back(e);
        }
        Json j{{"ambient", t.to_string()}, {"embeddings", list}};
        if (!note.empty()) j["note"] = note;
        if (restrict_adjoint) {
          Json verdicts = Json::array();
          for (std::size_t a = 0; a < es.size(); ++a)
            for (std::size_t b = a + 1; b < es.size(); ++b)
              verdicts.push_back(Json{{"first", es[a].sub.to_string()},
                                      {"second", es[b].sub.to_string()},
                                      {"same_formal_character",
                                       same_formal_character(restricted[a], es[a], restricted[b], es[b])}});
          j["comparisons"] = verdicts;
        }
        out << j.dump(2) << "\n";
      } else {
        if (!note.empty()) out << "note: " << note << "\n";
        for (std::size_t i = 0; i < es.size(); ++i) {
          out << to_text(es[i]);
          if (restrict_adjoint)
            out << "  restricted adjoint: dim " << restricted[i].dim() << ", " << restricted[i].num_distinct()
                << " distinct weights\n";
        }
        if (restrict_adjoint)
          for (std::size_t a = 0; a < es.size(); ++a)
            for (std::size_t b = a + 1; b < es.size(); ++b)
              out << "same formal character " << es[a].sub.to_string() << " " << es[b].sub.to_string() << ": "
                  << (same_formal_character(restricted[a], es[a], restricted[b], es[b]) ? "yes" : "no") << "\n";
      }
      return 0;
    }
    if (*c_verify) {
      const auto results = run_all_checks();
      const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
      if (fmt == Format::Json) {
        Json a = Json::array();
        for (const auto& r : results)
          a.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
        out << Json{{"checks", a}, {"pass", all}}.dump(2) << "\n";
      } else {
        for (const auto& r : results) out << to_line(r) << "\n";
      }
      return all ? 0 : 1;
    }
    if (*c_table) {
      const auto rows = maximal_rank_table(max_rank);
      if (fmt == Format::Json) {
        Json a = Json::array();
        for (const auto& r : rows)
          a.push_back(Json{{"ambient", r.ambient.to_string()}, {"sub", r.sub.to_string()}, {"rule", r.rule}});
        out << Json{{"max_rank", max_rank}, {"rows", a}}.dump(2) << "\n";
      } else {
        for (const auto& r : rows) out << r.ambient.to_string() << " > " << r.sub.to_string() << " by " << r.rule << "\n";
      }
      return 0;
    }
  } catch (const eqrank::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace eqrank::cli
