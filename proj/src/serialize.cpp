#include "alcove/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace alcove {

namespace {

json ivec_to_json(const IVec& v) {
  json a = json::array();
  for (i64 x : v) a.push_back(x);
  return a;
}

IVec ivec_from_json(const json& j) {
  if (!j.is_array()) fail(Err::InvalidSpec, "expected an integer array");
  IVec v;
  for (const json& x : j) {
    if (!x.is_number_integer()) fail(Err::InvalidSpec, "expected an integer array");
    v.push_back(x.get<i64>());
  }
  return v;
}

json iset_to_json(const std::set<int>& s) {
  json a = json::array();
  for (int x : s) a.push_back(x);
  return a;
}

std::set<int> iset_from_json(const json& j) {
  std::set<int> s;
  for (i64 x : ivec_from_json(j)) s.insert(static_cast<int>(x));
  return s;
}

std::uint64_t fnv1a_bytes(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex16(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace

json datum_to_json(const CartanSpec& cs, const LatticeSpec& ls) {
  json j;
  j["cartan"] = json{{"family", family_name(cs.family)}, {"rank", cs.rank}};
  switch (ls.kind) {
    case LatticeKind::Adjoint: j["lattice"] = "adjoint"; break;
    case LatticeKind::Coweight: j["lattice"] = "coweight"; break;
    case LatticeKind::GL: j["lattice"] = "gl"; break;
    case LatticeKind::Custom: {
      json basis = json::array();
      for (const IVec& b : ls.basis) basis.push_back(ivec_to_json(b));
      j["lattice"] = json{{"basis", basis}};
      break;
    }
  }
  return j;
}

std::pair<CartanSpec, LatticeSpec> datum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cartan")) fail(Err::InvalidSpec, "datum needs a cartan block");
  const json& c = j.at("cartan");
  if (!c.is_object() || !c.contains("family") || !c.contains("rank"))
    fail(Err::InvalidSpec, "cartan block needs family and rank");
  std::optional<Family> f = family_from_string(c.at("family").get<std::string>());
  if (!f) fail(Err::InvalidSpec, "unknown family");
  if (!c.at("rank").is_number_integer()) fail(Err::InvalidSpec, "rank must be an integer");
  CartanSpec cs{*f, c.at("rank").get<int>()};

  LatticeSpec ls;
  if (!j.contains("lattice")) {
    ls.kind = LatticeKind::Adjoint;
  } else if (j.at("lattice").is_string()) {
    std::string k = j.at("lattice").get<std::string>();
    if (k == "adjoint")
      ls.kind = LatticeKind::Adjoint;
    else if (k == "coweight")
      ls.kind = LatticeKind::Coweight;
    else if (k == "gl")
      ls.kind = LatticeKind::GL;
    else
      fail(Err::InvalidSpec, "unknown lattice kind");
  } else if (j.at("lattice").is_object() && j.at("lattice").contains("basis")) {
    ls.kind = LatticeKind::Custom;
    for (const json& b : j.at("lattice").at("basis")) ls.basis.push_back(ivec_from_json(b));
  } else {
    fail(Err::InvalidSpec, "lattice must be a kind name or a basis block");
  }
  return {cs, ls};
}

std::string datum_hash(const CartanSpec& cs, const LatticeSpec& ls) {
  return hex16(fnv1a_bytes(datum_to_json(cs, ls).dump()));
}

AffineElement aff_from_string(const RootDatum& rd, const std::string& s) {
  std::string wordpart = s;
  IVec tau;
  bool has_tau = false;
  size_t at = s.find('@');
  if (at != std::string::npos) {
    wordpart = s.substr(0, at);
    std::string t = s.substr(at + 1);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
      fail(Err::InvalidSpec, "malformed length-zero part");
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) tau.push_back(std::stoll(item));
    has_tau = true;
  }
  std::vector<int> word;
  if (wordpart != "e") {
    for (char c : wordpart) {
      if (c < '0' || c > '9') fail(Err::InvalidSpec, "malformed word");
      word.push_back(c - '0');
    }
  }
  AffineElement w = aff_from_word(rd, word);
  if (has_tau) w = compose(w, tau_part(aff_translation(rd, tau)));
  return w;
}

json report_to_json(const RootDatum& rd, const ComponentReport& r) {
  json j;
  j["mu"] = ivec_to_json(r.mu);
  j["K"] = iset_to_json(r.K);
  j["count"] = r.count();
  j["irreducible"] = (r.count() == 1);
  j["central"] = r.central;
  json comps = json::array();
  for (const Component& c : r.components) {
    json cj;
    cj["rep"] = aff_to_string(aff_translation(rd, c.translation));
    cj["translation"] = ivec_to_json(c.translation);
    cj["dimension"] = c.dimension;
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

ComponentReport report_from_json(const json& j) {
  ComponentReport r;
  r.mu = ivec_from_json(j.at("mu"));
  r.K = iset_from_json(j.at("K"));
  r.central = j.at("central").get<bool>();
  for (const json& cj : j.at("components")) {
    Component c;
    c.translation = ivec_from_json(cj.at("translation"));
    c.dimension = cj.at("dimension").get<i64>();
    r.components.push_back(c);
  }
  if (j.at("count").get<i64>() != r.count()) fail(Err::InvalidSpec, "component count mismatch");
  return r;
}

json fiber_to_json(const FiberDescriptor& d) {
  json j;
  j["stratum"] = aff_to_string(d.base);
  j["x_max"] = aff_to_string(d.top);
  j["min_rep"] = aff_to_string(d.min_rep);
  j["dimension"] = d.dimension;
  return j;
}

FiberDescriptor fiber_from_json(const RootDatum& rd, const json& j) {
  FiberDescriptor d;
  d.base = aff_from_string(rd, j.at("stratum").get<std::string>());
  d.top = aff_from_string(rd, j.at("x_max").get<std::string>());
  d.min_rep = aff_from_string(rd, j.at("min_rep").get<std::string>());
  d.dimension = j.at("dimension").get<i64>();
  return d;
}

json classify_to_json(const std::vector<ClassifyRow>& rows) {
  json a = json::array();
  for (const ClassifyRow& r : rows) {
    json j;
    j["K"] = iset_to_json(r.K);
    j["support"] = iset_to_json(r.support);
    a.push_back(j);
  }
  return a;
}

std::vector<ClassifyRow> classify_from_json(const json& j) {
  std::vector<ClassifyRow> rows;
  for (const json& rj : j) {
    ClassifyRow r;
    r.K = iset_from_json(rj.at("K"));
    r.support = iset_from_json(rj.at("support"));
    rows.push_back(r);
  }
  return rows;
}

std::string qbg_to_dot(const QBG& graph) {
  const WeylGroup& W = graph.group();
  const RootDatum& rd = W.datum();
  std::ostringstream out;
  out << "digraph qbg {\n";
  for (int x = 0; x < W.size(); ++x)
    out << "  \"" << word_string(W.at(x).word) << "\";\n";
  for (const QBGEdge& e : graph.edges()) {
    out << "  \"" << word_string(W.at(e.from).word) << "\" -> \""
        << word_string(W.at(e.to).word) << "\"";
    if (e.quantum) {
      std::optional<FracVec> c = rd.coroot_coords(e.weight);
      if (!c) fail(Err::InvalidSpec, "quantum weight outside the coroot span");
      out << " [style=dashed, label=\"";
      for (size_t i = 0; i < c->size(); ++i) {
        if ((*c)[i].den != 1) fail(Err::InvalidSpec, "quantum weight not integral");
        if (i) out << ",";
        out << (*c)[i].num;
      }
      out << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string cache_path(const RootDatum& rd, const std::string& cache_dir) {
  return cache_dir + "/weyl-" + datum_hash(rd.cartan_spec(), LatticeSpec{rd.lattice_kind(), rd.custom_basis()}) +
         ".json";
}

WeylGroup cached_weyl_group(const RootDatum& rd, const std::string& cache_dir, bool* hit) {
  if (hit) *hit = false;
  if (cache_dir.empty()) return WeylGroup(rd);

  LatticeSpec ls{rd.lattice_kind(), rd.custom_basis()};
  std::string h = datum_hash(rd.cartan_spec(), ls);
  std::string path = cache_path(rd, cache_dir);

  std::ifstream in(path);
  if (in) {
    try {
      json j = json::parse(in);
      if (j.at("hash").get<std::string>() == h) {
        std::vector<WeylElement> elems;
        for (const json& ej : j.at("elements")) {
          std::vector<int> word;
          for (i64 x : ivec_from_json(ej.at("word"))) word.push_back(static_cast<int>(x));
          WeylElement w = weyl_from_word(rd, word);
          if (w.len != ej.at("len").get<i64>()) throw std::runtime_error("stale length");
          elems.push_back(std::move(w));
        }
        WeylGroup W(rd, std::move(elems));
        if (hit) *hit = true;
        return W;
      }
    } catch (...) {
      // fall through: a stale or malformed cache is rebuilt below
    }
  }

  WeylGroup W(rd);
  json j;
  j["hash"] = h;
  j["datum"] = datum_to_json(rd.cartan_spec(), ls);
  j["length_bound"] = W.at(W.longest_index()).len;
  json elems = json::array();
  for (int x = 0; x < W.size(); ++x) {
    json ej;
    ej["word"] = ivec_to_json(IVec(W.at(x).word.begin(), W.at(x).word.end()));
    ej["len"] = W.at(x).len;
    elems.push_back(ej);
  }
  j["elements"] = elems;
  std::filesystem::create_directories(cache_dir);
  std::ofstream out(path);
  out << j.dump(2) << "\n";
  return W;
}

}  // namespace alcove
