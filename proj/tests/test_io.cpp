#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "qed/families.hpp"
#include "qed/io.hpp"

using namespace qed;

TEST_CASE("graph file round trip preserves arc order") {
  oracles::Rng rng(oracles::test_seed() + 40);
  std::vector<MultiDigraph> corpus = {doubled_cycle(3), mobius_ladder_plus(5),
                                      oriented_k222(), MultiDigraph(0, {}),
                                      MultiDigraph(3, {Arc{2, 0}, Arc{0, 2}, Arc{1, 1}})};
  for (int i = 0; i < 10; ++i)
    corpus.push_back(directed_medial(oracles::random_plane_graph(rng)));
  for (const auto& g : corpus) {
    std::istringstream in(serialize_graph_file(g));
    CHECK(parse_graph_file(in) == g);
  }
}

TEST_CASE("graph file accepts comments and reports bad lines") {
  std::istringstream good("# a comment\nqed 1\n# another\nn 2\narc 0 1\narc 1 0\n");
  MultiDigraph g = parse_graph_file(good);
  CHECK(g.vertex_count() == 2);
  CHECK(g.arc_count() == 2);

  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_graph_file(in);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("qed 2\n") == 1);
  CHECK(line_of("qed 1\nn 2\nedge 0 1\n") == 3);
  CHECK(line_of("qed 1\nn 2\narc 0 5\n") == 3);
  CHECK(line_of("qed 1\narc 0 1\n") == 2);
  CHECK(line_of("qed 1\nn 2\narc 0 1 9\n") == 3);
}

TEST_CASE("certificates round trip and verify") {
  oracles::Rng rng(oracles::test_seed() + 41);
  std::vector<MultiDigraph> corpus = {directed_medial(plane_k4()),
                                      directed_medial(plane_cycle(4))};
  for (int i = 0; i < 5; ++i)
    corpus.push_back(directed_medial(oracles::random_plane_graph(rng)));
  for (const auto& g : corpus) {
    auto r = is_diplanar(g);
    REQUIRE(r.diplanar);
    std::ostringstream out;
    write_certificate(out, *r.certificate);
    std::istringstream in(out.str());
    EmbeddingCertificate parsed = parse_certificate(in);
    std::string why;
    CHECK(verify_certificate(g, parsed, &why));
    INFO(why);
  }
}

TEST_CASE("verify_certificate rejects tampering") {
  MultiDigraph g = directed_medial(plane_k4());
  auto r = is_diplanar(g);
  REQUIRE(r.diplanar);
  EmbeddingCertificate cert = *r.certificate;

  EmbeddingCertificate wrong_rot = cert;
  std::swap(wrong_rot.rotation.at[0].darts[0], wrong_rot.rotation.at[0].darts[1]);
  CHECK_FALSE(verify_certificate(g, wrong_rot));

  EmbeddingCertificate wrong_genus = cert;
  wrong_genus.component_genus[0] = 1;
  CHECK_FALSE(verify_certificate(g, wrong_genus));

  EmbeddingCertificate wrong_faces = cert;
  wrong_faces.faces.pop_back();
  CHECK_FALSE(verify_certificate(g, wrong_faces));

  EmbeddingCertificate wrong_verdict = cert;
  wrong_verdict.diplanar = false;
  CHECK_FALSE(verify_certificate(g, wrong_verdict));
}

TEST_CASE("canonical form hex is stable and reversible text") {
  CanonicalForm f = canonical_form(doubled_cycle(3));
  CHECK(f.hex().size() == f.bytes.size() * 2);
  CHECK(canonical_form(doubled_cycle(3)).hex() == f.hex());
}
