// mfaces: generate, analyze, certify and transform simplicial spheres.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mfaces/complex.hpp"
#include "mfaces/family.hpp"
#include "mfaces/gale.hpp"
#include "mfaces/generators.hpp"
#include "mfaces/homology.hpp"
#include "mfaces/io.hpp"
#include "mfaces/repro.hpp"
#include "mfaces/vectors.hpp"

using namespace mfaces;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotPolytopal = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VertexSet parse_set(const std::string& text) {
  VertexSet s;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1 || v > kMaxLabel) throw std::invalid_argument(tok);
      s.insert(v);
    } catch (const std::exception&) {
      throw UsageError("bad vertex label '" + tok + "' in '" + text + "'");
    }
  }
  if (s.empty()) throw UsageError("empty vertex set");
  return s;
}

NamedComplex load_one(const std::string& path, const std::string& name) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file " + path);
  auto all = load_complexes(path);
  if (!name.empty()) {
    for (auto& e : all) {
      if (e.name == name) return e;
    }
    throw UsageError("no complex named " + name + " in " + path);
  }
  if (all.size() != 1) throw UsageError(path + " holds several complexes; pick one with --name");
  return all.front();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

struct GenArgs {
  std::string kind;
  int d = 0, n = 0, k = 0, i = 0, m2 = -1;
  bool extra = false;
  std::string out;
};

void require(bool have, const std::string& what) {
  if (!have) throw UsageError(what);
}

int cmd_gen(const GenArgs& a) {
  SimplicialComplex k;
  std::string header = "gen " + a.kind;
  auto param = [&](const char* key, int v) { header += std::string(" ") + key + "=" + std::to_string(v); };
  if (a.kind == "cyclic") {
    require(a.d > 0 && a.n > 0, "cyclic needs --d and --n");
    param("d", a.d);
    param("n", a.n);
    k = cyclic_boundary(a.d, a.n);
  } else if (a.kind == "qk") {
    require(a.k > 0, "qk needs --k");
    param("k", a.k);
    k = build_qk(a.k).sphere;
  } else if (a.kind == "gs8") {
    k = gs8();
  } else if (a.kind == "p042") {
    k = p042();
  } else if (a.kind == "delta") {
    require(a.n > 0 && a.i > 0, "delta needs --n and --i");
    param("n", a.n);
    param("i", a.i);
    const auto seq = delta_sequence(a.n, a.extra);
    if (a.i > static_cast<int>(seq.size())) throw UsageError("--i out of range 1.." + std::to_string(seq.size()));
    k = seq[a.i - 1];
  } else if (a.kind == "delta2k") {
    require(a.k > 0 && a.n > 0 && a.i > 0, "delta2k needs --k, --n and --i");
    param("k", a.k);
    param("n", a.n);
    param("i", a.i);
    const auto seq = delta_sequence_2k(a.k, a.n);
    if (a.i > static_cast<int>(seq.size())) throw UsageError("--i out of range 1.." + std::to_string(seq.size()));
    k = seq[a.i - 1];
  } else if (a.kind == "gamma") {
    require(a.n > 0 && a.i > 0 && a.k > 0, "gamma needs --n, --i and --k");
    param("n", a.n);
    param("i", a.i);
    param("k", a.k);
    k = gamma(a.n, a.i, a.k);
  } else if (a.kind == "family") {
    require(a.k > 0 && a.n > 0, "family needs --k and --n");
    param("k", a.k);
    param("n", a.n);
    FamilyState s = a.k == 2 ? family_seed_p042() : family_seed_qk(a.k);
    if (a.n < s.n) throw UsageError("--n must be at least " + std::to_string(s.n));
    while (s.n < a.n) s = family_step(s);
    k = s.sigma;
  } else if (a.kind == "sphere2") {
    require(a.n > 0 && a.m2 >= 0, "sphere2 needs --n and --m2");
    param("n", a.n);
    param("m2", a.m2);
    k = realize_2sphere(a.n, a.m2);
  } else {
    throw UsageError("unknown kind " + a.kind);
  }
  emit(write_complex(k, {header}), a.out);
  return kExitOk;
}

int cmd_analyze(const std::string& path, const std::string& name, bool kv, bool full) {
  const NamedComplex c = load_one(path, name);
  Report r;
  if (!c.name.empty()) r.emplace_back("name", c.name);
  const Report body = analyze(c.complex, AnalyzeOptions{full, true});
  r.insert(r.end(), body.begin(), body.end());
  std::cout << (kv ? render_kv(r) : render_table(r));
  return kExitOk;
}

int cmd_certify(const std::string& path, const std::string& name, std::optional<int> k) {
  const NamedComplex c = load_one(path, name);
  const SphereCheck check = verify_sphere(c.complex, SphereLevel::Quick);
  if (!check) {
    std::cerr << "not a sphere: " << check.reason << "\n";
    return kExitUsage;
  }
  const int d = c.complex.dim() + 1;
  if (k && *k != d / 2) {
    std::cerr << "--k " << *k << " does not match dimension " << c.complex.dim() << " (expected " << d / 2 << ")\n";
    return kExitUsage;
  }
  const Certificate cert = nonpolytopality_certificate(c.complex);
  if (!c.name.empty()) std::cout << "name=" << c.name << "\n";
  std::cout << render(cert);
  return cert.verdict == Verdict::NotPolytopal ? kExitNotPolytopal : kExitOk;
}

int cmd_transform(const std::string& path, const std::string& flip, const std::string& sew_path,
                  int vertex, const std::string& complement_path, const std::string& out) {
  const int modes = (!flip.empty()) + (!sew_path.empty()) + (!complement_path.empty());
  if (modes != 1) throw UsageError("give exactly one of --flip, --sew, --complement");
  const SimplicialComplex k = load_one(path, "").complex;
  SimplicialComplex result;
  std::string header;
  if (!flip.empty()) {
    const auto slash = flip.find('/');
    FlipMove move;
    if (slash == std::string::npos) {
      move = flip_move(k, parse_set(flip));
    } else {
      move = FlipMove{parse_set(flip.substr(0, slash)), parse_set(flip.substr(slash + 1))};
    }
    result = bistellar_flip(k, move);
    header = "flip " + move.a.to_string() + "/" + move.b.to_string();
  } else if (!sew_path.empty()) {
    const SimplicialComplex b = load_one(sew_path, "").complex;
    const int v = vertex > 0 ? vertex : k.vertices().max() + 1;
    result = sew(k, b, v);
    header = "sew vertex " + std::to_string(v);
  } else {
    result = complement_ball(k, load_one(complement_path, "").complex);
    header = "complement";
  }
  emit(write_complex(result, {header}), out);
  return kExitOk;
}

int cmd_repro(const std::string& data_dir, int only) {
  ReproOptions opt;
  if (!data_dir.empty()) opt.data_dir = data_dir;
  std::vector<CriterionResult> results;
  if (only > 0) {
    results.push_back(run_criterion(only, opt));
  } else {
    results = run_acceptance(opt);
  }
  bool failed = false;
  for (const auto& r : results) {
    std::cout << render_line(r) << "\n";
    failed = failed || r.status == Status::Fail;
  }
  return failed ? kExitOther : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Missing faces of simplicial spheres"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a generated complex");
  g->add_option("kind", gen.kind, "cyclic|qk|gs8|p042|delta|delta2k|gamma|family|sphere2")->required();
  g->add_option("--d", gen.d, "Polytope dimension");
  g->add_option("--n", gen.n, "Number of vertices");
  g->add_option("--k", gen.k, "Parameter k");
  g->add_option("--i", gen.i, "Sequence index");
  g->add_option("--m2", gen.m2, "Missing triangles (sphere2)");
  g->add_flag("--extra", gen.extra, "Append the two non-neighborly flips (delta)");
  g->add_option("-o,--output", gen.out, "Output file (default stdout)");

  std::string path, name;
  bool kv = false, full = false;
  auto* an = app.add_subcommand("analyze", "Report vectors, bounds and verdicts");
  an->add_option("file", path, "Complex file")->required();
  an->add_option("--name", name, "Entry to pick from a multi-entry file");
  an->add_flag("--kv", kv, "Machine-readable key=value output");
  an->add_flag("--full", full, "Run the full sphere check");

  std::optional<int> cert_k;
  auto* ce = app.add_subcommand("certify", "Try to certify non-polytopality");
  ce->add_option("file", path, "Complex file")->required();
  ce->add_option("--name", name, "Entry to pick from a multi-entry file");
  ce->add_option("--k", cert_k, "Expected half-dimension");

  std::string flip, sew_path, complement_path, out;
  int vertex = 0;
  auto* tr = app.add_subcommand("transform", "Apply a flip, sewing or complement");
  tr->add_option("file", path, "Complex file")->required();
  tr->add_option("--flip", flip, "A or A/B, comma-separated labels");
  tr->add_option("--sew", sew_path, "Ball file to sew onto");
  tr->add_option("--vertex", vertex, "Label of the new vertex (default max+1)");
  tr->add_option("--complement", complement_path, "Ball file to remove");
  tr->add_option("-o,--output", out, "Output file (default stdout)");

  std::string data_dir;
  int only = 0;
  auto* re = app.add_subcommand("repro", "Run the acceptance suite");
  re->add_option("--data-dir", data_dir, "Directory with Lutz-format complexes");
  re->add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 13));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*an) return cmd_analyze(path, name, kv, full);
    if (*ce) return cmd_certify(path, name, cert_k);
    if (*tr) return cmd_transform(path, flip, sew_path, vertex, complement_path, out);
    if (*re) return cmd_repro(data_dir, only);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}
