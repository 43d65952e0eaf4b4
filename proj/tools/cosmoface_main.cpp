// cosmoface: batch analysis of cosmological polytopes of multigraphs.
//
// Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 verification
// mismatch. Errors print one line to stderr: "error[<kind>]: <message>".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cosmoface/counting.hpp"
#include "cosmoface/differential.hpp"
#include "cosmoface/errors.hpp"
#include "cosmoface/face_lattice.hpp"
#include "cosmoface/graph_io.hpp"
#include "cosmoface/oracle.hpp"
#include "cosmoface/tree_recursion.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace cosmoface;

namespace {

enum class Format { Json, Csv, Text };

struct CommonOptions {
  std::string graph_path;
  std::string format = "json";
  std::string config_path;
  std::vector<std::string> cap_settings;

  Format parsed_format() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    if (format == "text") return Format::Text;
    throw InputError("unknown format '" + format + "' (expected json, csv or text)");
  }

  // Precedence: built-in defaults < COSMOFACE_CAPS < config file < flags.
  Caps caps() const {
    Caps caps;
    if (const char* env = std::getenv("COSMOFACE_CAPS")) caps.apply_assignments(env);
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw InputError("cannot open config file '" + config_path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      caps.apply_assignments(buf.str());
    }
    for (const std::string& setting : cap_settings) caps.apply_assignments(setting);
    return caps;
  }

  Multigraph graph() const {
    if (graph_path == "-") return parse_graph_stream(std::cin);
    return load_graph_file(graph_path);
  }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("graph", opts.graph_path, "graph file (text or JSON; '-' for stdin)")
      ->required();
  cmd->add_option("--format", opts.format, "output format: json, csv or text")
      ->default_val("json");
  cmd->add_option("--config", opts.config_path, "key=value cap settings file");
  cmd->add_option("--cap", opts.cap_settings,
                  "cap override, e.g. --cap max_faces=500000 (repeatable)");
}

json functional_json(const CosmoPolytope& poly, const LinearFunctional& f) {
  json coeffs = json::object();
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    coeffs[poly.coordinate_name(static_cast<int>(i))] = rational_to_string(f.coeffs[i]);
  return json{{"coeffs", std::move(coeffs)}, {"offset", rational_to_string(f.offset)}};
}

json face_record(const CosmoPolytope& poly, const FaceSet& face, int dim,
                 const LinearFunctional* certificate) {
  json rec;
  rec["vertices"] = poly.labels_of(face);
  rec["dim"] = dim;
  rec["certificate"] = certificate ? functional_json(poly, *certificate) : json(nullptr);
  return rec;
}

std::string csv_labels(const CosmoPolytope& poly, const FaceSet& face) {
  std::string out;
  for (const std::string& l : poly.labels_of(face)) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

// ---------------------------------------------------------------- vertices

int cmd_vertices(const CommonOptions& opts) {
  Multigraph g = opts.graph();
  CosmoPolytope poly(g);
  switch (opts.parsed_format()) {
    case Format::Json: {
      json verts = json::array();
      for (const PolytopeVertex& v : poly.vertices())
        verts.push_back(json{{"label", v.label}, {"coords", v.coords}});
      emit(json{{"ambient_dimension", poly.ambient_dimension()},
                {"count", poly.vertex_count()},
                {"vertices", std::move(verts)}});
      break;
    }
    case Format::Csv: {
      std::cout << "label,coords\n";
      for (const PolytopeVertex& v : poly.vertices()) {
        std::cout << v.label << ",";
        for (size_t i = 0; i < v.coords.size(); ++i)
          std::cout << (i ? " " : "") << v.coords[i];
        std::cout << "\n";
      }
      break;
    }
    case Format::Text:
      std::cout << "polytope vertices: " << poly.vertex_count() << " (ambient dimension "
                << poly.ambient_dimension() << ")\n";
      for (const PolytopeVertex& v : poly.vertices()) {
        std::cout << "  " << v.label << " = (";
        for (size_t i = 0; i < v.coords.size(); ++i)
          std::cout << (i ? "," : "") << v.coords[i];
        std::cout << ")\n";
      }
      break;
  }
  return 0;
}

// ------------------------------------------------------------------ facets

int cmd_facets(const CommonOptions& opts) {
  Multigraph g = opts.graph();
  FaceEngine engine(g, opts.caps());
  const CosmoPolytope& poly = engine.polytope();
  auto facets = engine.all_facets();
  const int facet_dim = affine_rank(poly.coordinates(poly.full_face())) - 1;
  switch (opts.parsed_format()) {
    case Format::Json: {
      json arr = json::array();
      for (const Facet& f : facets) {
        json rec = face_record(poly, f.vertex_set, facet_dim, &f.functional);
        json nodes = json::array(), edges = json::array();
        for (NodeIndex v : f.subgraph.nodes) nodes.push_back(g.node_label(v));
        for (EdgeIndex e : f.subgraph.edges) edges.push_back(g.edge(e).id);
        rec["subgraph"] = json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
        arr.push_back(std::move(rec));
      }
      emit(json{{"count", facets.size()}, {"facets", std::move(arr)}});
      break;
    }
    case Format::Csv:
      std::cout << "dim,vertex_count,labels\n";
      for (const Facet& f : facets)
        std::cout << facet_dim << "," << f.vertex_set.size() << ","
                  << csv_labels(poly, f.vertex_set) << "\n";
      break;
    case Format::Text:
      std::cout << facets.size() << " facets (dimension " << facet_dim << ")\n";
      for (const Facet& f : facets)
        std::cout << "  {" << csv_labels(poly, f.vertex_set) << "}\n";
      break;
  }
  return 0;
}

// ------------------------------------------------------------------- faces

int cmd_faces(const CommonOptions& opts, int max_dim, bool has_max_dim) {
  Multigraph g = opts.graph();
  FaceEngine engine(g, opts.caps());
  FaceLattice lattice = FaceLattice::build(engine);
  const CosmoPolytope& poly = engine.polytope();
  auto keep = [&](const Face& f) { return !has_max_dim || f.dim <= max_dim; };
  switch (opts.parsed_format()) {
    case Format::Json: {
      json arr = json::array();
      for (const Face& f : lattice.faces())
        if (keep(f)) arr.push_back(face_record(poly, f.vertices, f.dim, nullptr));
      emit(json{{"dimension", lattice.polytope_dimension()},
                {"count", arr.size()},
                {"faces", std::move(arr)}});
      break;
    }
    case Format::Csv:
      std::cout << "dim,vertex_count,labels\n";
      for (const Face& f : lattice.faces())
        if (keep(f))
          std::cout << f.dim << "," << f.vertices.size() << "," << csv_labels(poly, f.vertices)
                    << "\n";
      break;
    case Format::Text:
      std::cout << lattice.face_count() << " faces, dimension "
                << lattice.polytope_dimension() << "\n";
      for (const Face& f : lattice.faces())
        if (keep(f))
          std::cout << "  dim " << f.dim << ": {" << csv_labels(poly, f.vertices) << "}\n";
      break;
  }
  return 0;
}

// ----------------------------------------------------------------- fvector

int cmd_fvector(const CommonOptions& opts, const std::string& method) {
  Multigraph g = opts.graph();
  FPolynomial f;
  if (method == "enum") {
    f = graph_f_polynomial(g, opts.caps());
  } else if (method == "tree") {
    f = tree_f_polynomial(g);
  } else {
    throw InputError("unknown fvector method '" + method + "' (expected enum or tree)");
  }
  switch (opts.parsed_format()) {
    case Format::Json:
      emit(json{{"method", method},
                {"dimension", f.degree() - 1},
                {"coefficients", f.coeff_strings()},
                {"total", f.total().str()}});
      break;
    case Format::Csv: {
      std::cout << "dim,count\n";
      auto strings = f.coeff_strings();
      for (size_t i = 0; i < strings.size(); ++i)
        std::cout << (static_cast<int>(i) - 1) << "," << strings[i] << "\n";
      break;
    }
    case Format::Text:
      std::cout << "f(t) = " << f.to_string() << "\n"
                << "total faces = " << f.total().str() << "\n";
      break;
  }
  return 0;
}

// ------------------------------------------------------------ simplex-count

bool is_cycle_graph(const Multigraph& g) {
  if (g.node_count() < 3 || g.edge_count() != g.node_count() || !g.is_connected() ||
      !g.is_simple())
    return false;
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

int cmd_simplex_count(const CommonOptions& opts, const std::string& method, int k_max,
                      bool has_k_max) {
  Multigraph g = opts.graph();
  json per_k = json(nullptr);
  BigInt total = 0;
  if (method == "enum") {
    FaceEngine engine(g, opts.caps());
    int limit = has_k_max ? k_max : engine.polytope().vertex_count();
    auto counts = simplex_enumerate(engine, limit);
    json obj = json::object();
    for (const auto& [k, c] : counts) {
      obj[std::to_string(k)] = c.str();
      total += c;
    }
    per_k = std::move(obj);
  } else if (method == "formula") {
    if (is_cycle_graph(g)) {
      const int n = g.node_count();
      json obj = json::object();
      for (int k = 1; k <= 2 * n; ++k) obj[std::to_string(k)] = cycle_simplex_count(n, k).str();
      per_k = std::move(obj);
      total = cycle_simplex_total(n);
    } else {
      total = unicyclic_simplex_total(g);  // raises InputError when out of scope
    }
  } else {
    throw InputError("unknown simplex-count method '" + method +
                     "' (expected formula or enum)");
  }
  switch (opts.parsed_format()) {
    case Format::Json:
      emit(json{{"method", method}, {"per_k", per_k}, {"total", total.str()}});
      break;
    case Format::Csv:
      std::cout << "k,count\n";
      if (per_k.is_object())
        for (const auto& [k, c] : per_k.items()) std::cout << k << "," << c.get<std::string>() << "\n";
      std::cout << "total," << total.str() << "\n";
      break;
    case Format::Text:
      if (per_k.is_object())
        for (const auto& [k, c] : per_k.items())
          std::cout << "simplex faces on " << k << " vertices: " << c.get<std::string>() << "\n";
      std::cout << "total simplex faces: " << total.str() << "\n";
      break;
  }
  return 0;
}

// ------------------------------------------------------------ special-faces

int cmd_special_faces(const CommonOptions& opts) {
  Multigraph g = opts.graph();
  FaceEngine engine(g, opts.caps());
  const CosmoPolytope& poly = engine.polytope();

  json vertex_faces = json::array();
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) < 1) continue;
    FaceSet f = engine.vertex_face(v);
    vertex_faces.push_back(json{{"node", g.node_label(v)},
                                {"degree", g.degree(v)},
                                {"dim", g.degree(v)},
                                {"vertices", poly.labels_of(f)}});
  }
  json cycle_faces = json::array();
  for (const CycleDescriptor& c : engine.cycles()) {
    json nodes = json::array(), edges = json::array();
    for (NodeIndex v : c.nodes) nodes.push_back(g.node_label(v));
    for (EdgeIndex e : c.edges) edges.push_back(g.edge(e).id);
    cycle_faces.push_back(json{{"nodes", std::move(nodes)},
                               {"edges", std::move(edges)},
                               {"dim", 2 * c.length() - 2},
                               {"facet_count", c.length() * c.length()},
                               {"vertices", poly.labels_of(engine.cycle_face(c))}});
  }
  json minimal = json::array();
  for (const FaceSet& f : engine.minimal_nonsimplex_faces()) minimal.push_back(poly.labels_of(f));

  switch (opts.parsed_format()) {
    case Format::Json:
      emit(json{{"vertex_faces", std::move(vertex_faces)},
                {"cycle_faces", std::move(cycle_faces)},
                {"minimal_nonsimplex", std::move(minimal)}});
      break;
    case Format::Csv:
      std::cout << "kind,anchor,dim,labels\n";
      for (const auto& vf : vertex_faces) {
        std::cout << "vertex," << vf["node"].get<std::string>() << "," << vf["dim"] << ",";
        std::string labels;
        for (const auto& l : vf["vertices"]) labels += (labels.empty() ? "" : " ") + l.get<std::string>();
        std::cout << labels << "\n";
      }
      for (const auto& cf : cycle_faces) {
        std::string anchor;
        for (const auto& e : cf["edges"]) anchor += (anchor.empty() ? "" : "|") + e.get<std::string>();
        std::string labels;
        for (const auto& l : cf["vertices"]) labels += (labels.empty() ? "" : " ") + l.get<std::string>();
        std::cout << "cycle," << anchor << "," << cf["dim"] << "," << labels << "\n";
      }
      break;
    case Format::Text:
      std::cout << vertex_faces.size() << " vertex faces, " << cycle_faces.size()
                << " cycle faces\n";
      for (const auto& vf : vertex_faces)
        std::cout << "  vertex face at " << vf["node"].get<std::string>() << ": dim "
                  << vf["dim"] << "\n";
      for (const auto& cf : cycle_faces)
        std::cout << "  cycle face of length " << cf["edges"].size() << ": dim " << cf["dim"]
                  << ", " << cf["facet_count"] << " facets\n";
      break;
  }
  return 0;
}

// ------------------------------------------------------------------ volume

int cmd_volume(const CommonOptions& opts, const std::string& method) {
  Multigraph g = opts.graph();
  BigInt volume;
  if (method == "triangulation") {
    volume = normalized_volume(g, opts.caps());
  } else if (method == "tree") {
    volume = tree_volume(g);
  } else {
    throw InputError("unknown volume method '" + method +
                     "' (expected triangulation or tree)");
  }
  switch (opts.parsed_format()) {
    case Format::Json:
      emit(json{{"method", method}, {"volume", volume.str()}});
      break;
    case Format::Csv:
      std::cout << "volume\n" << volume.str() << "\n";
      break;
    case Format::Text:
      std::cout << "normalized volume = " << volume.str() << "\n";
      break;
  }
  return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const CommonOptions& opts, bool exhaustive, std::int64_t samples, bool has_samples,
               std::uint64_t seed, int threads) {
  Multigraph g = opts.graph();
  FaceEngine engine(g, opts.caps());
  if (exhaustive && has_samples)
    throw InputError("choose either --exhaustive or --samples, not both");
  if (!exhaustive && !has_samples) {
    if (engine.polytope().vertex_count() <= opts.caps().max_bf_vertices)
      exhaustive = true;
    else
      throw InputError("polytope too large for default exhaustive verification; pass --samples");
  }
  DifferentialResult r = exhaustive ? verify_exhaustive(engine, threads)
                                    : verify_sampled(engine, samples, seed, threads);
  json payload{{"mode", exhaustive ? "exhaustive" : "sampled"},
               {"subsets_checked", r.subsets_checked},
               {"mismatches", r.mismatches},
               {"counterexample", json(nullptr)}};
  if (!exhaustive) {
    payload["samples"] = samples;
    payload["seed"] = seed;
  }
  if (r.counterexample) {
    payload["counterexample"] = engine.polytope().labels_of(*r.counterexample);
    payload["criterion_said_face"] = r.criterion_said_face;
  }
  switch (opts.parsed_format()) {
    case Format::Json:
      emit(payload);
      break;
    case Format::Csv:
      std::cout << "subsets_checked,mismatches\n"
                << r.subsets_checked << "," << r.mismatches << "\n";
      break;
    case Format::Text:
      std::cout << "checked " << r.subsets_checked << " subsets, " << r.mismatches
                << " mismatches\n";
      if (r.counterexample)
        std::cout << "counterexample: {"
                  << csv_labels(engine.polytope(), *r.counterexample) << "}\n";
      break;
  }
  return r.mismatches == 0 ? 0 : 4;
}

// ------------------------------------------------------------------ counts

int cmd_counts(const CommonOptions& opts) {
  Multigraph g = opts.graph();
  GraphStats stats = g.stats(opts.caps());
  json cycles = json::object();
  for (const auto& [len, n] : stats.cycles_by_length) cycles[std::to_string(len)] = n;
  json payload{{"stats",
                json{{"edges", stats.edge_count},
                     {"leaves", stats.leaf_count},
                     {"degree_two_nodes", stats.degree_two_count},
                     {"cycles_by_length", std::move(cycles)}}},
               {"f1", count_edges(g).str()},
               {"f2", json(nullptr)}};
  if (g.is_simple()) payload["f2"] = count_2faces_simple(g).str();
  switch (opts.parsed_format()) {
    case Format::Json:
      emit(payload);
      break;
    case Format::Csv:
      std::cout << "quantity,value\n"
                << "f1," << payload["f1"].get<std::string>() << "\n";
      if (!payload["f2"].is_null()) std::cout << "f2," << payload["f2"].get<std::string>() << "\n";
      break;
    case Format::Text:
      std::cout << "edges of the polytope (f1): " << payload["f1"].get<std::string>() << "\n";
      if (!payload["f2"].is_null())
        std::cout << "2-faces of the polytope (f2): " << payload["f2"].get<std::string>() << "\n";
      else
        std::cout << "2-faces: no closed formula for multigraphs; use simplex-count or faces\n";
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of cosmological polytopes of loopless multigraphs"};
  app.require_subcommand(1);

  CommonOptions o_vertices, o_facets, o_faces, o_fvector, o_simplex, o_special, o_volume,
      o_verify, o_counts;

  CLI::App* c_vertices = app.add_subcommand("vertices", "labeled lattice points of the polytope");
  add_common(c_vertices, o_vertices);

  CLI::App* c_facets = app.add_subcommand("facets", "all facets with certificates");
  add_common(c_facets, o_facets);

  CLI::App* c_faces = app.add_subcommand("faces", "the full face lattice");
  add_common(c_faces, o_faces);
  int max_dim = 0;
  CLI::Option* max_dim_opt = c_faces->add_option("--max-dim", max_dim, "emit faces of dimension <= D");

  CLI::App* c_fvector = app.add_subcommand("fvector", "f-polynomial coefficients");
  add_common(c_fvector, o_fvector);
  std::string fvector_method = "enum";
  c_fvector->add_option("--method", fvector_method, "enum (lattice) or tree (leaf recursion)")
      ->default_val("enum");

  CLI::App* c_simplex = app.add_subcommand("simplex-count", "simplex-face counts");
  add_common(c_simplex, o_simplex);
  std::string simplex_method = "enum";
  c_simplex->add_option("--method", simplex_method, "formula (closed form) or enum (cliques)")
      ->default_val("enum");
  int k_max = 0;
  CLI::Option* k_max_opt = c_simplex->add_option("--k-max", k_max, "largest vertex count to report");

  CLI::App* c_special = app.add_subcommand("special-faces", "vertex faces and cycle faces");
  add_common(c_special, o_special);

  CLI::App* c_volume = app.add_subcommand("volume", "normalized lattice volume");
  add_common(c_volume, o_volume);
  std::string volume_method = "triangulation";
  c_volume->add_option("--method", volume_method, "triangulation (exact) or tree (4^e)")
      ->default_val("triangulation");

  CLI::App* c_verify = app.add_subcommand("verify", "criterion vs LP-oracle differential test");
  add_common(c_verify, o_verify);
  bool exhaustive = false;
  c_verify->add_flag("--exhaustive", exhaustive, "check every subset of the polytope vertices");
  std::int64_t samples = 0;
  CLI::Option* samples_opt = c_verify->add_option("--samples", samples, "number of sampled subsets");
  std::uint64_t seed = 0;
  c_verify->add_option("--seed", seed, "sampling seed")->default_val("0");
  int threads = 1;
  c_verify->add_option("--threads", threads, "worker threads")->default_val("1");

  CLI::App* c_counts = app.add_subcommand("counts", "closed-form low-dimensional face counts");
  add_common(c_counts, o_counts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[input]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_vertices) return cmd_vertices(o_vertices);
    if (*c_facets) return cmd_facets(o_facets);
    if (*c_faces) return cmd_faces(o_faces, max_dim, max_dim_opt->count() > 0);
    if (*c_fvector) return cmd_fvector(o_fvector, fvector_method);
    if (*c_simplex)
      return cmd_simplex_count(o_simplex, simplex_method, k_max, k_max_opt->count() > 0);
    if (*c_special) return cmd_special_faces(o_special);
    if (*c_volume) return cmd_volume(o_volume, volume_method);
    if (*c_verify)
      return cmd_verify(o_verify, exhaustive, samples, samples_opt->count() > 0, seed, threads);
    if (*c_counts) return cmd_counts(o_counts);
  } catch (const CapError& e) {
    std::cerr << "error[cap]: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error[input]: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error[" << e.kind() << "]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
