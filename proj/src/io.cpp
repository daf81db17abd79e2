#include "mfaces/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mfaces/homology.hpp"
#include "mfaces/vectors.hpp"

namespace mfaces {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int parse_label(const std::string& tok, const std::string& where) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(where + ": expected a positive integer, got '" + tok + "'");
  }
  if (tok.size() > 4) throw ParseError(where + ": label " + tok + " out of range");
  const int v = std::stoi(tok);
  if (v < 1 || v > kMaxLabel) {
    throw ParseError(where + ": label " + tok + " out of range 1.." + std::to_string(kMaxLabel));
  }
  return v;
}

SimplicialComplex facets_or_throw(std::vector<VertexSet> facets, const std::string& where) {
  if (facets.empty()) throw ParseError(where + ": no facets");
  return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace

SimplicialComplex read_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<VertexSet> facets;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream toks(t);
    std::string tok;
    VertexSet f;
    const std::string where = "line " + std::to_string(lineno);
    while (toks >> tok) {
      const int v = parse_label(tok, where);
      if (f.contains(v)) throw ParseError(where + ": repeated label " + tok);
      f.insert(v);
    }
    facets.push_back(f);
  }
  return facets_or_throw(std::move(facets), "complex file");
}

std::string write_complex(const SimplicialComplex& k, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  std::vector<VertexSet> facets = k.facets();
  std::sort(facets.begin(), facets.end(), lex_less);
  for (const auto& f : facets) {
    const auto labels = f.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(labels[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<NamedComplex> parse_lutz(const std::string& text) {
  std::string s;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (trim(line).rfind('#', 0) == 0) continue;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
  }
  std::vector<NamedComplex> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t eq = s.find('=', pos);
    if (eq == std::string::npos) throw ParseError("lutz: expected name=[[...]]");
    std::string name = s.substr(pos, eq - pos);
    if (name.empty()) throw ParseError("lutz: empty name");
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ParseError("lutz: bad character in name '" + name + "'");
      }
    }
    if (name.rfind("manifold_", 0) == 0) name = name.substr(9);
    const std::string where = "lutz entry " + name;
    pos = eq + 1;
    if (s.compare(pos, 2, "[[") != 0) throw ParseError(where + ": expected [[");
    pos += 1;
    std::vector<VertexSet> facets;
    while (true) {
      if (pos >= s.size() || s[pos] != '[') throw ParseError(where + ": expected [");
      const std::size_t close = s.find(']', pos);
      if (close == std::string::npos) throw ParseError(where + ": unterminated facet");
      const std::string body = s.substr(pos + 1, close - pos - 1);
      VertexSet f;
      std::size_t a = 0;
      while (a <= body.size()) {
        std::size_t b = body.find(',', a);
        if (b == std::string::npos) b = body.size();
        const int v = parse_label(body.substr(a, b - a), where);
        if (f.contains(v)) throw ParseError(where + ": repeated label");
        f.insert(v);
        a = b + 1;
      }
      facets.push_back(f);
      pos = close + 1;
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError(where + ": expected , or ]");
    }
    out.push_back({name, facets_or_throw(std::move(facets), where)});
    // optional separators between entries
    while (pos < s.size() && (s[pos] == ';' || s[pos] == ',')) ++pos;
  }
  if (out.empty()) throw ParseError("lutz: no entries");
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<NamedComplex> load_complexes(const std::string& path) {
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (std::isdigit(static_cast<unsigned char>(t[0]))) return {{"", read_complex(text)}};
    if (std::isalpha(static_cast<unsigned char>(t[0]))) return parse_lutz(text);
    throw ParseError(path + ": unrecognised format");
  }
  throw ParseError(path + ": no facets");
}

std::string render_kv(const Report& r) {
  std::string out;
  for (const auto& [k, v] : r) out += k + "=" + v + "\n";
  return out;
}

std::string render_table(const Report& r) {
  std::size_t width = 0;
  for (const auto& kv : r) width = std::max(width, kv.first.size());
  std::string out;
  for (const auto& [k, v] : r) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

std::string join_counts(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Report analyze(const SimplicialComplex& k, const AnalyzeOptions& opt) {
  Report r;
  auto put = [&](const std::string& key, const std::string& value) { r.emplace_back(key, value); };
  auto yn = [](bool b) { return std::string(b ? "true" : "false"); };

  const FaceProfile p = face_profile(k);
  put("n", std::to_string(p.n));
  put("dim", std::to_string(k.dim()));
  put("f", join_counts(p.f));
  put("h", join_counts(p.h));
  put("g", join_counts(p.g));
  put("m", join_counts(p.m));
  put("neighborliness", std::to_string(p.neighborliness));
  put("flag", yn(p.is_flag));
  put("eulerian", yn(p.is_eulerian));

  const SphereCheck quick = verify_sphere(k, SphereLevel::Quick);
  put("sphere_quick", yn(quick.ok));
  bool sphere = quick.ok;
  if (opt.full_sphere_check && quick.ok) {
    const SphereCheck full = verify_sphere(k, SphereLevel::Full);
    put("sphere_full", yn(full.ok));
    sphere = full.ok;
    if (!full.ok) put("sphere_reason", full.reason);
  } else if (!quick.ok) {
    put("sphere_reason", quick.reason);
  }
  put("dehn_sommerville", yn(dehn_sommerville_check(p)));

  if (sphere) {
    std::string deg;
    try {
      const auto s = sphere_stacked_degree(p);
      deg = s ? std::to_string(*s) : "none";
    } catch (const std::exception&) {
      deg = "inconsistent";
    }
    put("stacked_degree", deg);
  }

  for (const auto& b : all_bounds(p)) {
    const std::string base = "bound." + b.name;
    put(base + ".kind", b.upper ? "upper" : "lower");
    put(base + ".value", to_string(b.value));
    put(base + ".observed", to_string(b.observed));
    put(base + ".slack", to_string(b.slack));
    put(base + ".satisfied", yn(b.satisfied));
  }

  if (opt.links) {
    k.vertices().for_each([&](int v) {
      const SimplicialComplex l = link(k, VertexSet{v});
      put("link." + std::to_string(v) + ".m", join_counts(m_vector(l)));
    });
  }

  if (sphere) {
    const LinkReport lr = vertex_link_check(k);
    put("link_check.pass", yn(lr.all_pass()));
    for (const auto& c : lr.links) {
      const std::string base = "link_check." + std::to_string(c.vertex);
      put(base + ".neighborly", yn(c.neighborly_ok));
      put(base + ".stacked", to_string(c.stacked));
    }
    const Certificate c = nonpolytopality_certificate(k);
    put("certificate.verdict", to_string(c.verdict));
    put("certificate.rule", c.rule.empty() ? "none" : c.rule);
    put("certificate.witness_vertex", std::to_string(c.witness_vertex));
    put("certificate.observed", std::to_string(c.observed));
    put("certificate.expected", std::to_string(c.expected));
  }
  return r;
}

}  // namespace mfaces
