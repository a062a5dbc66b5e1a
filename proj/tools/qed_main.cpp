// qed: decide diplanarity of quartic Eulerian digraphs, verify minimal
// obstructions, generate the known obstruction families, and run the
// small-order census.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qed/qed.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitError = 1;
constexpr int kExitNo = 2;

qed::MultiDigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return qed::parse_graph_file(in);
}

int verdict_exit(bool yes) { return yes ? kExitYes : kExitNo; }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::runtime_error("bad integer list '" + s + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::runtime_error("bad integer list '" + s + "'");
  return out;
}

qed::SplitSpec parse_split_spec(const std::string& s) {
  // v:pairing:p
  std::stringstream ss(s);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
    throw std::runtime_error("bad split spec '" + s + "' (want v:pairing:p)");
  return qed::SplitSpec{std::stoi(a), std::stoi(b), std::stoi(c)};
}

int cmd_check(const std::string& file, bool quiet, const std::string& cert_path) {
  auto g = load_graph(file);
  auto r = qed::is_diplanar(g);
  if (!quiet) {
    std::cout << "diplanar " << (r.diplanar ? "yes" : "no") << "\n";
    if (!r.diplanar) std::cout << "min-genus " << r.min_genus << "\n";
    std::cout << "systems " << r.systems_examined << "\n";
  }
  if (!cert_path.empty()) {
    if (!r.certificate)
      std::cerr << "no certificate: graph is not diplanar\n";
    else {
      std::ofstream out(cert_path);
      qed::write_certificate(out, *r.certificate);
    }
  }
  return verdict_exit(r.diplanar);
}

int cmd_genus(const std::string& file) {
  auto g = load_graph(file);
  auto comps = qed::components(g);
  int total = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    int gc = qed::min_directed_genus(comps[i].graph);
    total += gc;
    std::cout << "component " << i << ": genus " << gc << "\n";
  }
  std::cout << "min-genus " << total << "\n";
  return kExitYes;
}

int cmd_obstruction(const std::string& file, bool quiet) {
  auto g = load_graph(file);
  auto r = qed::is_obstruction(g);
  if (!quiet) {
    std::cout << "obstruction " << (r.obstruction ? "yes" : "no") << "\n";
    std::cout << "diplanar " << (r.graph_diplanar ? "yes" : "no") << "\n";
    if (!r.graph_diplanar) {
      std::cout << "min-genus " << r.min_genus << "\n";
      int bad = 0;
      for (const auto& w : r.cycle_witnesses) bad += !w.reduced_diplanar;
      std::cout << "cycles " << r.cycle_witnesses.size() << "\n";
      std::cout << "non-diplanar-reductions " << bad << "\n";
    }
    std::cout << "sanity loops=" << (r.sanity.loop_free ? "ok" : "FAIL")
              << " mult=" << (r.sanity.multiplicity_at_most_2 ? "ok" : "FAIL")
              << " conn4=" << (r.sanity.edge_connectivity_4 ? "ok" : "FAIL")
              << " strong2=" << (r.sanity.strongly_2_edge_connected ? "ok" : "FAIL")
              << "\n";
  }
  return verdict_exit(r.obstruction);
}

int cmd_cycles(const std::string& file) {
  auto g = load_graph(file);
  int count = 0;
  qed::for_each_directed_cycle(g, [&](const qed::DirectedCycle& c) {
    std::cout << "cycle:";
    for (qed::ArcId a : c.arcs) std::cout << " " << a;
    std::cout << "\n";
    ++count;
  });
  std::cout << "count " << count << "\n";
  return kExitYes;
}

int cmd_iso(const std::string& f1, const std::string& f2, bool quiet) {
  bool yes = qed::is_isomorphic(load_graph(f1), load_graph(f2));
  if (!quiet) std::cout << "isomorphic " << (yes ? "yes" : "no") << "\n";
  return verdict_exit(yes);
}

int cmd_canon(const std::string& file) {
  std::cout << qed::canonical_form(load_graph(file)).hex() << "\n";
  return kExitYes;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::runtime_error("family '" + family + "' expects " + std::to_string(k) +
                               " parameter(s)");
  };
  qed::MultiDigraph g;
  if (family == "doubled-cycle") {
    need(1);
    g = qed::doubled_cycle(std::stoi(params[0]));
  } else if (family == "mobius-ladder") {
    need(1);
    g = qed::mobius_ladder_plus(std::stoi(params[0]));
  } else if (family == "z") {
    need(1);
    g = qed::circulant_z(std::stoi(params[0]));
  } else if (family == "k222") {
    need(0);
    g = qed::oriented_k222();
  } else if (family == "k44") {
    std::size_t i = params.empty() ? 0 : static_cast<std::size_t>(std::stoi(params[0]));
    auto all = qed::oriented_k44_candidates();
    if (i >= all.size())
      throw std::runtime_error("k44 index out of range (have " +
                               std::to_string(all.size()) + ")");
    g = all[i];
  } else if (family == "anti-ladder") {
    need(1);
    g = qed::anti_ladder(std::stoi(params[0]));
  } else if (family == "nchain") {
    need(1);
    g = qed::n_chain(parse_int_list(params[0]));
  } else if (family == "c3-expansion") {
    std::size_t i = params.empty() ? 0 : static_cast<std::size_t>(std::stoi(params[0]));
    auto all = qed::c3_digon_expansions();
    if (i >= all.size())
      throw std::runtime_error("c3-expansion index out of range (have " +
                               std::to_string(all.size()) + ")");
    g = all[i];
  } else {
    throw std::runtime_error("unknown family '" + family + "'");
  }
  qed::serialize_graph_file(std::cout, g);
  return kExitYes;
}

int cmd_transform(const std::string& file, const std::string& sub,
                  const std::vector<std::string>& args) {
  qed::MultiDigraph g = load_graph(file);
  if (sub == "kernel") {
    g = qed::digon_free_kernel(g);
  } else if (sub == "contract-digons") {
    // contract the digons present now, skipping ones broken by earlier
    // contractions
    auto initial = qed::find_digons(g);
    for (std::size_t i = 0; i < initial.size(); ++i) {
      auto present = qed::find_digons(g);
      if (present.empty()) break;
      g = qed::contract_digon(g, present.front());
    }
  } else if (sub == "split") {
    if (args.empty()) throw std::runtime_error("split needs at least one v:pairing:p spec");
    std::vector<qed::SplitSpec> specs;
    for (const auto& s : args) specs.push_back(parse_split_spec(s));
    g = qed::expand_obstruction(g, specs);
  } else {
    throw std::runtime_error("unknown transform '" + sub + "'");
  }
  qed::serialize_graph_file(std::cout, g);
  return kExitYes;
}

int cmd_census(int max_n, int jobs, bool allow_loops, bool allow_multiplicity,
               bool allow_disconnected, bool classify) {
  qed::EnumConstraints c;
  c.loop_free = !allow_loops;
  c.max_undirected_multiplicity_2 = !allow_multiplicity;
  c.connected_only = !allow_disconnected;
  auto census = qed::obstruction_census(max_n, c, jobs);
  for (const auto& e : census)
    std::cout << e.form.hex() << "\t" << e.vertex_count << "\t" << e.digon_count << "\t"
              << e.antidigon_count << "\t" << (e.obstruction ? "yes" : "no") << "\t"
              << e.family << "\n";
  if (classify) {
    auto rep = qed::classify_antidigon_entries(census);
    for (const auto& row : rep.rows)
      std::cout << "antidigon-class " << row.form.hex() << " n=" << row.vertex_count
                << " family=" << row.family << "\n";
    std::cout << "antidigon-unclassified " << rep.unclassified_count << "\n";
  }
  return kExitYes;
}

int cmd_verify_cert(const std::string& graph_file, const std::string& cert_file) {
  auto g = load_graph(graph_file);
  std::ifstream in(cert_file);
  if (!in) throw std::runtime_error("cannot open " + cert_file);
  auto cert = qed::parse_certificate(in);
  std::string why;
  if (qed::verify_certificate(g, cert, &why)) {
    std::cout << "certificate ok\n";
    return kExitYes;
  }
  std::cout << "certificate invalid: " << why << "\n";
  return kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quartic Eulerian digraph toolkit"};
  app.require_subcommand(1);

  std::string file, file2, cert_path, family, sub;
  std::vector<std::string> params;
  bool quiet = false;
  int max_n = 6, jobs = 1;
  bool allow_loops = false, allow_multiplicity = false, allow_disconnected = false;
  bool classify = false;

  auto* check = app.add_subcommand("check", "decide diplanarity");
  check->add_option("file", file)->required();
  check->add_flag("--quiet", quiet);
  check->add_option("-o,--certificate", cert_path, "write an embedding certificate");

  auto* genus_cmd = app.add_subcommand("genus", "minimum orientable genus");
  genus_cmd->add_option("file", file)->required();

  auto* obstruction = app.add_subcommand("obstruction", "decide minimal non-diplanarity");
  obstruction->add_option("file", file)->required();
  obstruction->add_flag("--quiet", quiet);

  auto* cycles = app.add_subcommand("cycles", "list directed cycles");
  cycles->add_option("file", file)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();
  iso->add_flag("--quiet", quiet);

  auto* canon = app.add_subcommand("canon", "canonical form (hex)");
  canon->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("family", family)->required();
  gen->add_option("params", params);

  auto* transform = app.add_subcommand("transform", "contract-digons | kernel | split v:pairing:p...");
  transform->add_option("file", file)->required();
  transform->add_option("subcommand", sub)->required();
  transform->add_option("args", params);

  auto* census = app.add_subcommand("census", "obstruction census");
  census->add_option("--max-n", max_n)->required();
  census->add_option("--jobs", jobs);
  census->add_flag("--allow-loops", allow_loops);
  census->add_flag("--allow-multiplicity", allow_multiplicity);
  census->add_flag("--allow-disconnected", allow_disconnected);
  census->add_flag("--verify-theorem5", classify);

  auto* verify = app.add_subcommand("verify-cert", "re-verify an embedding certificate");
  verify->add_option("graph", file)->required();
  verify->add_option("certificate", file2)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file, quiet, cert_path);
    if (genus_cmd->parsed()) return cmd_genus(file);
    if (obstruction->parsed()) return cmd_obstruction(file, quiet);
    if (cycles->parsed()) return cmd_cycles(file);
    if (iso->parsed()) return cmd_iso(file, file2, quiet);
    if (canon->parsed()) return cmd_canon(file);
    if (gen->parsed()) return cmd_gen(family, params);
    if (transform->parsed()) return cmd_transform(file, sub, params);
    if (census->parsed())
      return cmd_census(max_n, jobs, allow_loops, allow_multiplicity,
                        allow_disconnected, classify);
    if (verify->parsed()) return cmd_verify_cert(file, file2);
  } catch (const qed::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
