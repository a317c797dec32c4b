// Command line surface over the library: admissible sets, component
// reports, classification tables, fibers, the quantum Bruhat graph, and the
// verification suite. Exit codes: 0 ok, 1 domain error, 2 usage error,
// 3 verification failure.
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alcove/serialize.hpp"
#include "alcove/verify.hpp"

using namespace alcove;

namespace {

RootDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::InvalidSpec, "cannot open datum file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const std::exception& e) {
    fail(Err::InvalidSpec, "datum file " + path + " is not JSON: " + e.what());
  }
  auto [cs, ls] = datum_from_json(j);
  return RootDatum(cs, ls);
}

IVec parse_ivec(const std::string& s, const std::string& flag) {
  IVec out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(Err::InvalidSpec, flag + ": expected comma separated integers, got '" + s + "'");
    }
  }
  if (out.empty()) fail(Err::InvalidSpec, flag + ": expected comma separated integers");
  return out;
}

IVec parse_mu(const RootDatum& rd, const std::string& s) {
  IVec mu = parse_ivec(s, "--mu");
  if (static_cast<int>(mu.size()) != rd.dim())
    fail(Err::InvalidSpec, "--mu: expected " + std::to_string(rd.dim()) + " coordinates");
  return mu;
}

std::set<int> parse_K(const RootDatum& rd, const std::string& s, const std::string& flag) {
  std::set<int> K;
  if (s.empty()) return K;
  for (i64 x : parse_ivec(s, flag)) {
    if (x < 0 || x > rd.rank())
      fail(Err::InvalidSpec, flag + ": letters must lie in 0.." + std::to_string(rd.rank()));
    K.insert(static_cast<int>(x));
  }
  validate_spherical(rd, K);
  return K;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string show_set(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

std::string show_vec(const IVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alcove: admissible sets, components, and fibers over an affine Weyl group"};
  app.require_subcommand(1);

  std::string datum_file, mu_s, K_s, K1_s, K2_s, gamma_s, lam_s, x_s, y_s;
  std::string dot_path, cache_dir;
  bool as_json = false, size_only = false;

  auto add_common = [&](CLI::App* sub, bool needs_datum = true) {
    if (needs_datum) sub->add_option("--datum", datum_file, "datum JSON file")->required();
    sub->add_flag("--json", as_json, "print JSON instead of text");
    sub->add_option("--cache-dir", cache_dir, "directory for enumerated group caches");
  };

  CLI::App* adm = app.add_subcommand("adm", "admissible set of a dominant coweight");
  add_common(adm);
  adm->add_option("--mu", mu_s, "dominant coweight, comma separated")->required();
  adm->add_option("--K", K_s, "level: spherical subset of 0..rank");
  adm->add_flag("--size", size_only, "print only the number of elements");

  CLI::App* comp = app.add_subcommand("components", "irreducible components at a level");
  add_common(comp);
  comp->add_option("--mu", mu_s, "dominant coweight, comma separated")->required();
  comp->add_option("--K", K_s, "level: spherical subset of 0..rank");

  CLI::App* cls = app.add_subcommand("classify", "levels with reducible sets for some coweight");
  add_common(cls);

  CLI::App* fib = app.add_subcommand("fibers", "fibers of the level changing map");
  add_common(fib);
  fib->add_option("--mu", mu_s, "dominant coweight, comma separated")->required();
  fib->add_option("--K1", K1_s, "finer level (subset of --K2)");
  fib->add_option("--K2", K2_s, "coarser level")->required();

  CLI::App* qbg = app.add_subcommand("qbg", "quantum Bruhat graph statistics and DOT export");
  add_common(qbg);
  qbg->add_option("--dot", dot_path, "write the graph in DOT format to this file");

  CLI::App* zg = app.add_subcommand("zgamma", "extremal element of a weight sublevel set");
  add_common(zg);
  zg->add_option("--gamma", gamma_s, "coweight bound, comma separated")->required();

  CLI::App* wt = app.add_subcommand("wt", "weight between two elements in the graph");
  add_common(wt);
  wt->add_option("--x", x_s, "source element, word in 1..rank or 'e'")->required();
  wt->add_option("--y", y_s, "target element, word in 1..rank or 'e'")->required();

  CLI::App* ver = app.add_subcommand("verify", "run the full property suite");
  add_common(ver, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (adm->parsed()) {
      RootDatum rd = load_datum(datum_file);
      IVec mu = parse_mu(rd, mu_s);
      AdmissibleSet A = admissible_set(rd, mu);
      if (size_only) {
        std::cout << A.elements.size() << "\n";
        return 0;
      }
      std::set<int> K = parse_K(rd, K_s, "--K");
      std::vector<AffineElement> reps = min_in_coset_filter(A.elements, K, Side::Right);
      if (as_json) {
        json j;
        j["datum"] = rd.name();
        j["mu"] = json(mu);
        j["size"] = A.elements.size();
        json maxima = json::array(), elements = json::array(), min_reps = json::array();
        for (const AffineElement& w : A.maxima) maxima.push_back(aff_to_string(w));
        for (const AffineElement& w : A.elements) elements.push_back(aff_to_string(w));
        j["maxima"] = maxima;
        j["elements"] = elements;
        if (!K.empty()) {
          j["K"] = json(IVec(K.begin(), K.end()));
          for (const AffineElement& w : reps) min_reps.push_back(aff_to_string(w));
          j["min_reps"] = min_reps;
        }
        emit(j);
      } else {
        std::cout << "datum " << rd.name() << "  mu " << show_vec(mu) << "\n";
        std::cout << "size " << A.elements.size() << "\n";
        std::cout << "maxima:";
        for (const AffineElement& w : A.maxima) std::cout << " " << aff_to_string(w);
        std::cout << "\nelements:\n";
        for (const AffineElement& w : A.elements) std::cout << "  " << aff_to_string(w) << "\n";
        if (!K.empty()) {
          std::cout << "minimal representatives at K " << show_set(K) << ":\n";
          for (const AffineElement& w : reps) std::cout << "  " << aff_to_string(w) << "\n";
        }
      }
    } else if (comp->parsed()) {
      RootDatum rd = load_datum(datum_file);
      IVec mu = parse_mu(rd, mu_s);
      std::set<int> K = parse_K(rd, K_s, "--K");
      ComponentReport r = component_report(rd, mu, K);
      if (as_json) {
        emit(report_to_json(rd, r));
      } else {
        std::cout << "datum " << rd.name() << "  mu " << show_vec(mu) << "  K " << show_set(K)
                  << "\n";
        std::cout << "count " << r.count() << "  irreducible " << (r.count() == 1 ? "yes" : "no");
        if (r.central) std::cout << "  (central coweight)";
        std::cout << "\n";
        for (const Component& c : r.components)
          std::cout << "  translation " << show_vec(c.translation) << "  rep "
                    << aff_to_string(aff_translation(rd, c.translation)) << "  dimension "
                    << c.dimension << "\n";
      }
    } else if (cls->parsed()) {
      RootDatum rd = load_datum(datum_file);
      std::vector<ClassifyRow> rows = classify(rd);
      if (as_json) {
        emit(classify_to_json(rows));
      } else {
        if (rows.empty()) std::cout << "no levels to report\n";
        for (const ClassifyRow& r : rows)
          std::cout << "K " << show_set(r.K) << "  support " << show_set(r.support) << "\n";
      }
    } else if (fib->parsed()) {
      RootDatum rd = load_datum(datum_file);
      IVec mu = parse_mu(rd, mu_s);
      std::set<int> K1 = parse_K(rd, K1_s, "--K1");
      std::set<int> K2 = parse_K(rd, K2_s, "--K2");
      AdmissibleSet A = admissible_set(rd, mu);
      std::vector<AffineElement> reps = strata(A, K1, K2);
      if (as_json) {
        json arr = json::array();
        for (const AffineElement& w : reps) arr.push_back(fiber_to_json(fiber(A, w, K1, K2)));
        emit(arr);
      } else {
        std::cout << "datum " << rd.name() << "  mu " << show_vec(mu) << "  K1 " << show_set(K1)
                  << "  K2 " << show_set(K2) << "\n";
        for (const AffineElement& w : reps) {
          FiberDescriptor d = fiber(A, w, K1, K2);
          std::cout << "  stratum " << aff_to_string(d.base) << "  x_max " << aff_to_string(d.top)
                    << "  min_rep " << aff_to_string(d.min_rep) << "  dimension " << d.dimension
                    << "\n";
        }
      }
    } else if (qbg->parsed()) {
      RootDatum rd = load_datum(datum_file);
      WeylGroup W = cached_weyl_group(rd, cache_dir);
      QBG graph(W);
      int bruhat = 0, quantum = 0;
      for (const QBGEdge& e : graph.edges()) (e.quantum ? quantum : bruhat)++;
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) fail(Err::InvalidSpec, "cannot write " + dot_path);
        out << qbg_to_dot(graph);
      }
      if (as_json) {
        json j;
        j["datum"] = rd.name();
        j["vertices"] = W.size();
        j["bruhat_edges"] = bruhat;
        j["quantum_edges"] = quantum;
        emit(j);
      } else {
        std::cout << "datum " << rd.name() << "\n";
        std::cout << "vertices " << W.size() << "\n";
        std::cout << "bruhat edges " << bruhat << "\n";
        std::cout << "quantum edges " << quantum << "\n";
        if (!dot_path.empty()) std::cout << "dot written to " << dot_path << "\n";
      }
    } else if (zg->parsed()) {
      RootDatum rd = load_datum(datum_file);
      IVec gamma = parse_ivec(gamma_s, "--gamma");
      if (static_cast<int>(gamma.size()) != rd.dim())
        fail(Err::InvalidSpec, "--gamma: expected " + std::to_string(rd.dim()) + " coordinates");
      WeylGroup W = cached_weyl_group(rd, cache_dir);
      WeylElement z = z_gamma(W, gamma);
      if (as_json) {
        json j;
        j["gamma"] = json(gamma);
        j["word"] = word_string(z.word);
        j["length"] = z.len;
        emit(j);
      } else {
        std::cout << word_string(z.word) << "\n";
      }
    } else if (wt->parsed()) {
      RootDatum rd = load_datum(datum_file);
      WeylGroup W = cached_weyl_group(rd, cache_dir);
      auto parse_elem = [&](const std::string& s, const char* flag) {
        std::vector<int> word;
        if (s != "e") {
          for (char c : s) {
            if (c < '1' || c - '0' > rd.rank())
              fail(Err::InvalidSpec, std::string(flag) + ": letters must lie in 1.." +
                                         std::to_string(rd.rank()));
            word.push_back(c - '0');
          }
        }
        return weyl_from_word(rd, word);
      };
      WeylElement x = parse_elem(x_s, "--x");
      WeylElement y = parse_elem(y_s, "--y");
      QBG graph(W);
      const IVec& w = graph.weight(x, y);
      if (as_json) {
        json j;
        j["x"] = word_string(x.word);
        j["y"] = word_string(y.word);
        j["weight"] = json(w);
        emit(j);
      } else {
        std::cout << show_vec(w) << "\n";
      }
    } else if (ver->parsed()) {
      std::vector<CheckResult> results = run_verify_suite();
      int failed = 0;
      if (as_json) {
        json arr = json::array();
        for (const CheckResult& r : results) {
          json j;
          j["name"] = r.name;
          j["pass"] = r.pass;
          j["detail"] = r.detail;
          arr.push_back(j);
          if (!r.pass) ++failed;
        }
        emit(arr);
      } else {
        for (const CheckResult& r : results) {
          if (r.pass) {
            std::cout << "PASS  " << r.name << "\n";
          } else {
            ++failed;
            std::cout << "FAIL  " << r.name << ": " << r.detail << "\n";
          }
        }
      }
      if (failed > 0) return 3;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
