#include "ppoly/cli.h"

#include "ppoly/cluster.h"
#include "ppoly/graded.h"
#include "ppoly/homology.h"
#include "ppoly/oracle.h"
#include "ppoly/quiver.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace ppoly {

namespace {

using Json = nlohmann::ordered_json;

Json edge_json(const TaggedEdge& e) {
  Json j;
  switch (e.kind) {
  case EdgeKind::Side:
    j["kind"] = "side";
    j["a1"] = e.a1;
    break;
  case EdgeKind::Arc:
    j["kind"] = "arc";
    j["a1"] = e.a1;
    j["a2"] = e.a2;
    break;
  case EdgeKind::Plain:
    j["kind"] = "plain";
    j["a1"] = e.a1;
    break;
  default:
    j["kind"] = "notched";
    j["a1"] = e.a1;
    break;
  }
  return j;
}

TaggedEdge edge_from_json(const PolygonCtx& ctx, const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  int a1 = j.at("a1").get<int>();
  if (kind == "side")
    return make_side(ctx, a1);
  if (kind == "arc")
    return make_arc(ctx, a1, j.at("a2").get<int>());
  if (kind == "plain")
    return make_plain(ctx, a1);
  if (kind == "notched")
    return make_notched(ctx, a1);
  throw std::invalid_argument("unknown edge kind '" + kind + "'");
}

Json tri_json(const TaggedTriangulation& tri) {
  Json j;
  j["n"] = tri.ctx.n;
  j["arcs"] = Json::array();
  for (const TaggedEdge& a : tri.arcs)
    j["arcs"].push_back(edge_json(a));
  return j;
}

TaggedTriangulation tri_from_json(const Json& j, int n_flag) {
  int n = j.at("n").get<int>();
  if (n_flag != 0 && n_flag != n)
    throw std::invalid_argument("--n disagrees with the triangulation JSON");
  PolygonCtx ctx(n);
  std::vector<TaggedEdge> arcs;
  for (const Json& a : j.at("arcs"))
    arcs.push_back(edge_from_json(ctx, a));
  return validate(ctx, arcs);
}

Json desc_json(const SubmoduleDescriptor& d) {
  Json j;
  switch (d.shape) {
  case Shape::Zero:
    j["shape"] = "zero";
    break;
  case Shape::U:
    j["shape"] = "U";
    break;
  case Shape::V:
    j["shape"] = "V";
    break;
  case Shape::W:
    j["shape"] = "W";
    break;
  default:
    j["shape"] = "UV";
    break;
  }
  j["degree"] = d.degree;
  return j;
}

Json gindec_json(const GradedIndec& x) {
  Json j;
  j["kind"] = x.kind == GKind::Arc ? "arc"
              : x.kind == GKind::Star ? "star"
                                      : "notch";
  j["i"] = x.i;
  j["j"] = x.j;
  return j;
}

GradedIndec gindec_from_json(const PolygonCtx& ctx, const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  int i = j.at("i").get<int>();
  if (kind == "arc")
    return make_garc(ctx, i, j.at("j").get<int>());
  if (kind == "star")
    return make_gstar(ctx, i);
  if (kind == "notch")
    return make_gnotch(ctx, i);
  throw std::invalid_argument("unknown graded kind '" + kind + "'");
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json quiver_json(const IceQuiverWithPotential& qp) {
  Json j;
  j["n"] = qp.ctx.n;
  j["vertices"] = Json::array();
  for (const TaggedEdge& v : qp.vertices)
    j["vertices"].push_back(edge_json(v));
  j["arrows"] = Json::array();
  for (const Arrow& a : qp.arrows) {
    Json aj;
    aj["source"] = a.source;
    aj["target"] = a.target;
    aj["external"] = a.external;
    aj["theta"] = a.theta;
    aj["at"] = a.at;
    j["arrows"].push_back(aj);
  }
  j["potential"] = Json::array();
  for (const PotentialTerm& t : qp.potential) {
    Json tj;
    tj["sign"] = t.sign;
    tj["arrows"] = t.arrows;
    j["potential"].push_back(tj);
  }
  j["frozen"] = qp.frozen;
  return j;
}

void quiver_dot(std::ostream& out, const IceQuiverWithPotential& qp) {
  out << "digraph quiver {\n";
  for (const PotentialTerm& t : qp.potential) {
    out << "  // potential " << (t.sign > 0 ? "+" : "-") << " ";
    for (size_t k = 0; k < t.arrows.size(); k++) {
      if (k)
        out << " -> ";
      out << "v" << qp.arrows[t.arrows[k]].source;
    }
    out << "\n";
  }
  std::set<int> frozen(qp.frozen.begin(), qp.frozen.end());
  for (size_t v = 0; v < qp.vertices.size(); v++) {
    out << "  v" << v << " [label=\""
        << dot_escape(edge_json(qp.vertices[v]).dump()) << "\"";
    if (frozen.count(static_cast<int>(v)))
      out << " shape=box";
    out << "];\n";
  }
  for (const Arrow& a : qp.arrows)
    out << "  v" << a.source << " -> v" << a.target << " [label=\"theta="
        << a.theta << "\"];\n";
  out << "}\n";
}

// stable AR quiver data: mesh arrows between non-side edges plus the
// translation pairs
void ar_quiver_data(const PolygonCtx& ctx, std::vector<TaggedEdge>& verts,
                    std::vector<std::pair<int, int>>& arrows,
                    std::vector<std::pair<int, int>>& taus) {
  verts = all_arcs(ctx);
  auto idx = [&](const TaggedEdge& e) {
    for (size_t k = 0; k < verts.size(); k++)
      if (verts[k] == e)
        return static_cast<int>(k);
    return -1;
  };
  std::set<std::pair<int, int>> seen;
  for (size_t k = 0; k < verts.size(); k++) {
    ARSequence seq = ar_sequence(ctx, verts[k]);
    int right = idx(seq.right);
    for (const TaggedEdge& m : seq.middle) {
      int mid = idx(m);
      if (mid < 0)
        continue; // sides are projective-injective and stay out
      seen.insert({static_cast<int>(k), mid});
      seen.insert({mid, right});
    }
    taus.push_back({right, static_cast<int>(k)}); // tau(right) = left
  }
  arrows.assign(seen.begin(), seen.end());
}

void ar_quiver_dot(std::ostream& out, const std::vector<std::string>& labels,
                   const std::vector<std::pair<int, int>>& arrows,
                   const std::vector<std::pair<int, int>>& taus) {
  out << "digraph ar {\n";
  for (size_t v = 0; v < labels.size(); v++)
    out << "  v" << v << " [label=\"" << dot_escape(labels[v]) << "\"];\n";
  for (const auto& [s, t] : arrows)
    out << "  v" << s << " -> v" << t << ";\n";
  for (const auto& [s, t] : taus)
    out << "  v" << s << " -> v" << t << " [style=dashed];\n";
  out << "}\n";
}

// graded AR quiver restricted to indices in [1, window * n]
void graded_ar_data(const PolygonCtx& ctx, int window,
                    std::vector<GradedIndec>& verts,
                    std::vector<std::pair<int, int>>& arrows,
                    std::vector<std::pair<int, int>>& taus) {
  int n = ctx.n, hi = window * n;
  std::map<GradedIndec, int> idx;
  for (int i = 1; i <= hi; i++) {
    for (int j = i + 1; j <= std::min(i + n - 1, hi); j++)
      verts.push_back({GKind::Arc, i, j});
    if (i + n <= hi) {
      verts.push_back({GKind::Star, i, i + n});
      verts.push_back({GKind::Notch, i, i + n});
    }
  }
  std::sort(verts.begin(), verts.end());
  for (size_t k = 0; k < verts.size(); k++)
    idx[verts[k]] = static_cast<int>(k);
  auto arrow = [&](const GradedIndec& a, const GradedIndec& b) {
    auto sa = idx.find(a), sb = idx.find(b);
    if (sa != idx.end() && sb != idx.end())
      arrows.push_back({sa->second, sb->second});
  };
  for (const GradedIndec& w : verts) {
    // mesh middles of w point at w
    if (w.kind != GKind::Arc) {
      arrow({GKind::Arc, w.i, w.j - 1}, w);
      continue;
    }
    if (is_gprojective(w)) {
      arrow({GKind::Arc, w.i - 1, w.j}, w);
      continue;
    }
    arrow({GKind::Arc, w.i, w.j - 1}, w);
    if (w.j - (w.i - 1) == ctx.n) {
      arrow({GKind::Star, w.i - 1, w.j}, w);
      arrow({GKind::Notch, w.i - 1, w.j}, w);
    } else {
      arrow({GKind::Arc, w.i - 1, w.j}, w);
    }
  }
  for (const GradedIndec& z : verts) {
    if (is_gprojective(z))
      continue;
    auto t = idx.find(tau_z(ctx, z));
    if (t != idx.end())
      taus.push_back({idx[z], t->second});
  }
}

struct CheckReport {
  Json report = Json::array();
  bool all_pass = true;

  void add(const std::string& name, bool pass) {
    Json j;
    j["suite"] = name;
    j["pass"] = pass;
    report.push_back(j);
    all_pass = all_pass && pass;
  }
};

bool verify_hom_oracle(const PolygonCtx& ctx, int t, long long prime) {
  int bound = 2 * ctx.n * (t - 2) - 1;
  for (const TaggedEdge& a : all_edges(ctx))
    for (const TaggedEdge& b : all_edges(ctx)) {
      std::map<int, int> dims = oracle_hom_graded(ctx, a, b, t, bound, prime);
      SubmoduleDescriptor h = hom_module(ctx, a, b);
      for (int d = 0; d <= bound; d++) {
        int got = dims.count(d) ? dims[d] : 0;
        if (got != graded_dim(ctx, h, d))
          return false;
      }
    }
  return true;
}

bool verify_stable_oracle(const PolygonCtx& ctx, int t, long long prime) {
  for (const TaggedEdge& a : all_edges(ctx))
    for (const TaggedEdge& b : all_edges(ctx)) {
      StableExtResult r = oracle_stable_and_ext(ctx, a, b, t, prime);
      StableHom sh = stable_hom(ctx, a, b);
      std::map<int, int> want;
      if (sh.epsilon != 0)
        want[sh.degree] = sh.epsilon;
      if (r.stable != want || r.ext1 != ext1_dim(ctx, a, b))
        return false;
    }
  return true;
}

bool verify_crossing(const PolygonCtx& ctx) {
  for (const TaggedEdge& a : all_arcs(ctx))
    for (const TaggedEdge& b : all_arcs(ctx))
      if (cover_crossing(ctx, a, b) != crossing_number(ctx, a, b))
        return false;
  return true;
}

bool verify_enumeration(const PolygonCtx& ctx) {
  return oracle_enumerate_maximal_compatible(ctx) ==
         static_cast<long long>(enumerate_all(ctx).size());
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"once-punctured polygon toolkit"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "json";
  std::string tri_str, arc_str, from_str, to_str, arcs_str, x_str, y_str;
  bool count_only = false;
  int window = 4, base = 0, kmin = -4, kmax = 4;
  int trunc = 6;
  long long prime = 32003;
  long long seed = 0;
  std::string suite = "all";

  auto* c_arcs = app.add_subcommand("arcs", "list every edge");
  c_arcs->add_option("--n", n)->required();

  auto* c_tris = app.add_subcommand("triangulations", "enumerate them all");
  c_tris->add_option("--n", n)->required();
  c_tris->add_flag("--count", count_only);

  auto* c_flip = app.add_subcommand("flip", "flip one arc");
  c_flip->add_option("--n", n);
  c_flip->add_option("--triangulation", tri_str)->required();
  c_flip->add_option("--arc", arc_str)->required();

  auto* c_quiver = app.add_subcommand("quiver", "ice quiver with potential");
  c_quiver->add_option("--n", n);
  c_quiver->add_option("--triangulation", tri_str)->required();
  c_quiver->add_option("--format", format)
      ->check(CLI::IsMember({"json", "dot"}));

  auto* c_hom = app.add_subcommand("hom", "Hom module descriptor");
  c_hom->add_option("--n", n)->required();
  c_hom->add_option("--from", from_str)->required();
  c_hom->add_option("--to", to_str)->required();

  auto* c_shom = app.add_subcommand("stable-hom", "stable Hom data");
  c_shom->add_option("--n", n)->required();
  c_shom->add_option("--from", from_str)->required();
  c_shom->add_option("--to", to_str)->required();

  auto* c_ext = app.add_subcommand("ext", "dim Ext^1");
  c_ext->add_option("--n", n)->required();
  c_ext->add_option("--from", from_str)->required();
  c_ext->add_option("--to", to_str)->required();

  auto* c_ar = app.add_subcommand("ar-quiver", "stable AR quiver");
  c_ar->add_option("--n", n)->required();
  c_ar->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  auto* c_xg = app.add_subcommand("exchange-graph", "flip graph");
  c_xg->add_option("--n", n)->required();
  c_xg->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  auto* c_ct = app.add_subcommand("check-tilting", "cluster tilting test");
  c_ct->add_option("--n", n)->required();
  c_ct->add_option("--arcs", arcs_str)->required();

  auto* c_graded = app.add_subcommand("graded", "graded category queries");
  c_graded->require_subcommand(1);
  auto* g_ar = c_graded->add_subcommand("ar-quiver", "windowed AR quiver");
  g_ar->add_option("--n", n)->required();
  g_ar->add_option("--window", window);
  g_ar->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  auto* g_hom = c_graded->add_subcommand("hom", "graded Hom dimension");
  g_hom->add_option("--n", n)->required();
  g_hom->add_option("--x", x_str)->required();
  g_hom->add_option("--y", y_str)->required();
  g_hom->add_option("--window", window);
  auto* g_ext = c_graded->add_subcommand("ext", "graded Ext dimension");
  g_ext->add_option("--n", n)->required();
  g_ext->add_option("--x", x_str)->required();
  g_ext->add_option("--y", y_str)->required();
  auto* g_tilt = c_graded->add_subcommand("tilt", "lift and tilting check");
  g_tilt->add_option("--n", n);
  g_tilt->add_option("--triangulation", tri_str)->required();
  g_tilt->add_option("--base", base)->required();
  g_tilt->add_option("--kmin", kmin);
  g_tilt->add_option("--kmax", kmax);

  auto* c_verify = app.add_subcommand("verify", "run oracle suites");
  c_verify->add_option("--n", n)->required();
  c_verify->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"hom-oracle", "stable-oracle", "crossing", "enumeration", "all"}));
  c_verify->add_option("--t", trunc);
  c_verify->add_option("--prime", prime);
  c_verify->add_option("--seed", seed); // reserved for sampled suites

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_arcs)) {
      PolygonCtx ctx(n);
      Json j = Json::array();
      for (const TaggedEdge& e : all_edges(ctx))
        j.push_back(edge_json(e));
      emit(out, j);
      return 0;
    }
    if (app.got_subcommand(c_tris)) {
      PolygonCtx ctx(n);
      std::vector<TaggedTriangulation> tris = enumerate_all(ctx);
      if (count_only) {
        emit(out, Json(tris.size()));
        return 0;
      }
      Json j = Json::array();
      for (const TaggedTriangulation& t : tris)
        j.push_back(tri_json(t));
      emit(out, j);
      return 0;
    }
    if (app.got_subcommand(c_flip)) {
      TaggedTriangulation tri = tri_from_json(Json::parse(tri_str), n);
      TaggedEdge arc = edge_from_json(tri.ctx, Json::parse(arc_str));
      emit(out, tri_json(flip(tri, arc).first));
      return 0;
    }
    if (app.got_subcommand(c_quiver)) {
      TaggedTriangulation tri = tri_from_json(Json::parse(tri_str), n);
      IceQuiverWithPotential qp = build_ice_qp(tri);
      if (format == "dot")
        quiver_dot(out, qp);
      else
        emit(out, quiver_json(qp));
      return 0;
    }
    if (app.got_subcommand(c_hom) || app.got_subcommand(c_shom) ||
        app.got_subcommand(c_ext)) {
      PolygonCtx ctx(n);
      TaggedEdge a = edge_from_json(ctx, Json::parse(from_str));
      TaggedEdge b = edge_from_json(ctx, Json::parse(to_str));
      if (app.got_subcommand(c_hom)) {
        emit(out, desc_json(hom_module(ctx, a, b)));
      } else if (app.got_subcommand(c_shom)) {
        StableHom sh = stable_hom(ctx, a, b);
        Json j;
        j["degree"] = sh.degree;
        j["epsilon"] = sh.epsilon;
        emit(out, j);
      } else {
        emit(out, Json(ext1_dim(ctx, a, b)));
      }
      return 0;
    }
    if (app.got_subcommand(c_ar)) {
      PolygonCtx ctx(n);
      std::vector<TaggedEdge> verts;
      std::vector<std::pair<int, int>> arrows, taus;
      ar_quiver_data(ctx, verts, arrows, taus);
      if (format == "dot") {
        std::vector<std::string> labels;
        for (const TaggedEdge& v : verts)
          labels.push_back(edge_json(v).dump());
        ar_quiver_dot(out, labels, arrows, taus);
      } else {
        Json j;
        j["vertices"] = Json::array();
        for (const TaggedEdge& v : verts)
          j["vertices"].push_back(edge_json(v));
        j["arrows"] = arrows;
        j["tau"] = taus;
        emit(out, j);
      }
      return 0;
    }
    if (app.got_subcommand(c_xg)) {
      PolygonCtx ctx(n);
      ExchangeGraph g = exchange_graph(ctx);
      if (format == "dot") {
        out << "graph exchange {\n";
        for (size_t v = 0; v < g.vertices.size(); v++) {
          std::string label;
          for (const TaggedEdge& a : g.vertices[v].arcs)
            label += (label.empty() ? "" : " ") + edge_to_string(a);
          out << "  v" << v << " [label=\"" << dot_escape(label) << "\"];\n";
        }
        for (const auto& [s, t] : g.edges)
          out << "  v" << s << " -- v" << t << ";\n";
        out << "}\n";
      } else {
        Json j;
        j["vertices"] = Json::array();
        for (const TaggedTriangulation& t : g.vertices)
          j["vertices"].push_back(tri_json(t));
        j["edges"] = g.edges;
        emit(out, j);
      }
      return 0;
    }
    if (app.got_subcommand(c_ct)) {
      PolygonCtx ctx(n);
      std::vector<TaggedEdge> arcs;
      for (const Json& a : Json::parse(arcs_str))
        arcs.push_back(edge_from_json(ctx, a));
      bool ok = is_cluster_tilting(ctx, TiltingCandidate{arcs});
      Json j;
      j["cluster_tilting"] = ok;
      emit(out, j);
      return ok ? 0 : 1;
    }
    if (app.got_subcommand(c_graded)) {
      if (c_graded->got_subcommand(g_ar)) {
        PolygonCtx ctx(n);
        std::vector<GradedIndec> verts;
        std::vector<std::pair<int, int>> arrows, taus;
        graded_ar_data(ctx, window, verts, arrows, taus);
        if (format == "dot") {
          std::vector<std::string> labels;
          for (const GradedIndec& v : verts)
            labels.push_back(gindec_to_string(v));
          ar_quiver_dot(out, labels, arrows, taus);
        } else {
          Json j;
          j["vertices"] = Json::array();
          for (const GradedIndec& v : verts)
            j["vertices"].push_back(gindec_json(v));
          j["arrows"] = arrows;
          j["tau"] = taus;
          emit(out, j);
        }
        return 0;
      }
      if (c_graded->got_subcommand(g_hom)) {
        PolygonCtx ctx(n);
        GradedIndec x = gindec_from_json(ctx, Json::parse(x_str));
        GradedIndec y = gindec_from_json(ctx, Json::parse(y_str));
        emit(out, Json(graded_hom_dim(ctx, x, y, window)));
        return 0;
      }
      if (c_graded->got_subcommand(g_ext)) {
        PolygonCtx ctx(n);
        GradedIndec x = gindec_from_json(ctx, Json::parse(x_str));
        GradedIndec y = gindec_from_json(ctx, Json::parse(y_str));
        emit(out, Json(graded_ext1_dim(ctx, x, y)));
        return 0;
      }
      // graded tilt
      TaggedTriangulation tri = tri_from_json(Json::parse(tri_str), n);
      std::vector<GradedIndec> lift = lift_triangulation(tri, base);
      bool ok = is_tilting_window(tri.ctx, lift, kmin, kmax);
      Json j;
      j["lift"] = Json::array();
      for (const GradedIndec& v : lift)
        j["lift"].push_back(gindec_json(v));
      j["tilting"] = ok;
      emit(out, j);
      return ok ? 0 : 1;
    }
    // verify
    PolygonCtx ctx(n);
    (void)seed;
    CheckReport rep;
    if (suite == "hom-oracle" || suite == "all")
      rep.add("hom-oracle", verify_hom_oracle(ctx, trunc, prime));
    if (suite == "stable-oracle" || suite == "all")
      rep.add("stable-oracle", verify_stable_oracle(ctx, trunc, prime));
    if (suite == "crossing" || suite == "all")
      rep.add("crossing", verify_crossing(ctx));
    if (suite == "enumeration" || suite == "all") {
      if (n <= 6)
        rep.add("enumeration", verify_enumeration(ctx));
      else if (suite == "enumeration")
        throw std::invalid_argument("enumeration suite needs n <= 6");
    }
    emit(out, rep.report);
    return rep.all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace ppoly
