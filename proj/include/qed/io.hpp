#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qed/embedding.hpp"
#include "qed/multidigraph.hpp"
#include "qed/rotation.hpp"

namespace qed {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Graph file format: '#' comment lines, then
//   qed 1
//   n <vertex_count>
//   arc <tail> <head>     (one per arc, ids assigned in file order)
// Unknown lines are errors. parse(serialize(g)) == g including arc order.

inline MultiDigraph parse_graph_file(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false, have_n = false;
  int n = 0;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (!have_header) {
      int version = -1;
      if (word != "qed" || !(ss >> version) || version != 1)
        throw ParseError(lineno, "expected header 'qed 1'");
      have_header = true;
      continue;
    }
    if (word == "n") {
      if (have_n) throw ParseError(lineno, "duplicate 'n' line");
      if (!(ss >> n) || n < 0) throw ParseError(lineno, "bad vertex count");
      have_n = true;
    } else if (word == "arc") {
      if (!have_n) throw ParseError(lineno, "'arc' before 'n'");
      int t = -1, h = -1;
      if (!(ss >> t >> h)) throw ParseError(lineno, "bad arc line");
      if (t < 0 || t >= n || h < 0 || h >= n)
        throw ParseError(lineno, "arc endpoint out of range");
      arcs.push_back(Arc{t, h});
    } else {
      throw ParseError(lineno, "unknown line '" + word + "'");
    }
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "trailing tokens");
  }
  if (!have_header) throw ParseError(lineno, "missing header 'qed 1'");
  if (!have_n) throw ParseError(lineno, "missing 'n' line");
  return MultiDigraph(n, std::move(arcs));
}

inline void serialize_graph_file(std::ostream& out, const MultiDigraph& g) {
  out << "qed 1\n";
  out << "n " << g.vertex_count() << "\n";
  for (const Arc& e : g.arcs()) out << "arc " << e.tail << " " << e.head << "\n";
}

inline std::string serialize_graph_file(const MultiDigraph& g) {
  std::ostringstream ss;
  serialize_graph_file(ss, g);
  return ss.str();
}

// Certificate format:
//   rot <v>: <dart>...     darts are +<arcid> (out) / -<arcid> (in), cyclic
//   face: <arcid>...       traced directed faces
//   genus <component>: <g>
//   diplanar yes|no

inline void write_certificate(std::ostream& out, const EmbeddingCertificate& cert) {
  for (std::size_t v = 0; v < cert.rotation.at.size(); ++v) {
    out << "rot " << v << ":";
    for (Dart d : cert.rotation.at[v].darts)
      out << " " << (dart_is_out(d) ? "+" : "-") << dart_arc(d);
    out << "\n";
  }
  for (const auto& face : cert.faces) {
    out << "face:";
    for (ArcId a : face) out << " " << a;
    out << "\n";
  }
  for (std::size_t c = 0; c < cert.component_genus.size(); ++c)
    out << "genus " << c << ": " << cert.component_genus[c] << "\n";
  out << "diplanar " << (cert.diplanar ? "yes" : "no") << "\n";
}

inline EmbeddingCertificate parse_certificate(std::istream& in) {
  EmbeddingCertificate cert;
  std::string line;
  int lineno = 0;
  bool saw_verdict = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word == "rot") {
      int v;
      char colon;
      if (!(ss >> v >> colon) || colon != ':' || v < 0)
        throw ParseError(lineno, "bad rot line");
      if (static_cast<int>(cert.rotation.at.size()) != v)
        throw ParseError(lineno, "rot lines out of order");
      LocalRotation r;
      std::string tok;
      while (ss >> tok) {
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
          throw ParseError(lineno, "bad dart token");
        int arc = std::stoi(tok.substr(1));
        r.darts.push_back(tok[0] == '+' ? out_dart(arc) : in_dart(arc));
      }
      cert.rotation.at.push_back(std::move(r));
    } else if (word == "face:") {
      std::vector<ArcId> face;
      int a;
      while (ss >> a) face.push_back(a);
      cert.faces.push_back(std::move(face));
    } else if (word == "genus") {
      int c, g;
      char colon;
      if (!(ss >> c >> colon >> g) || colon != ':')
        throw ParseError(lineno, "bad genus line");
      if (static_cast<int>(cert.component_genus.size()) != c)
        throw ParseError(lineno, "genus lines out of order");
      cert.component_genus.push_back(g);
    } else if (word == "diplanar") {
      std::string verdict;
      if (!(ss >> verdict) || (verdict != "yes" && verdict != "no"))
        throw ParseError(lineno, "bad diplanar line");
      cert.diplanar = verdict == "yes";
      saw_verdict = true;
    } else {
      throw ParseError(lineno, "unknown line '" + word + "'");
    }
  }
  if (!saw_verdict) throw ParseError(lineno, "missing diplanar verdict");
  return cert;
}

/// Independent re-verification: re-traces faces from the rotations and
/// recomputes the genus, then checks every claim in the certificate.
inline bool verify_certificate(const MultiDigraph& g, const EmbeddingCertificate& cert,
                               std::string* why = nullptr) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (!is_valid_rotation_system(g, cert.rotation, /*require_alternating=*/true))
    return fail("rotation system invalid or not alternating");
  auto normalize_faces = [](std::vector<std::vector<ArcId>> faces) {
    for (auto& f : faces) {
      if (f.empty()) continue;
      auto smallest = std::min_element(f.begin(), f.end());
      std::rotate(f.begin(), smallest, f.end());
    }
    std::sort(faces.begin(), faces.end());
    return faces;
  };
  const auto traced = normalize_faces(trace_faces(g, cert.rotation));
  if (normalize_faces(cert.faces) != traced) return fail("face list does not match trace");
  const auto genera = genus(g, cert.rotation);
  if (cert.component_genus != genera) return fail("genus list does not match");
  bool all_zero = true;
  for (int x : genera) all_zero = all_zero && x == 0;
  if (cert.diplanar != all_zero) return fail("diplanar verdict does not match genus");
  return true;
}

}  // namespace qed
