#include "qpencil/relations.hpp"

#include <fstream>
#include <sstream>

#include "qpencil/parser.hpp"

namespace qpencil {

std::string family_kind_name(FamilyKind k) {
  return k == FamilyKind::graded ? "graded" : "filtered";
}

void RelationFamily::validate() const {
  require(gens != nullptr && ps != nullptr,
          "relation family needs generator and parameter sets");
  for (const auto& r : relations) {
    check_same_gens(gens, r.gens());
    check_same(ps, r.params());
    require(!r.is_zero(), "relation family contains a zero relation");
    if (kind == FamilyKind::graded) {
      require(r.homogeneous() && r.max_degree() == 2,
              "graded family relation is not homogeneous quadratic: " +
                  r.to_string());
    } else {
      require(r.max_degree() == 2 && !r.degree_part(2).is_zero(),
              "filtered family relation lacks a quadratic leading part: " +
                  r.to_string());
    }
  }
}

void save_relations(const RelationFamily& f, const std::string& path) {
  f.validate();
  std::ofstream out(path);
  require(out.good(), "cannot open relations file for writing: " + path);
  out << "# relations file\n";
  out << "name: " << f.name << "\n";
  out << "kind: " << family_kind_name(f.kind) << "\n";
  out << "gens:";
  for (const auto& n : f.gens->names()) out << " " << n;
  out << "\n";
  for (const auto& r : f.relations) out << "rel: " << r.to_string() << "\n";
  require(out.good(), "write failure on relations file: " + path);
}

RelationFamily load_relations(const std::string& path, const ParamSetPtr& ps) {
  std::ifstream in(path);
  require(in.good(), "corrupted relations file " + path + ": cannot open");
  auto fail = [&](const std::string& msg) -> void {
    throw Error("corrupted relations file " + path + ": " + msg);
  };
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };

  RelationFamily f;
  f.ps = ps;
  bool have_kind = false;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: value' in: " + line);
    const std::string key = trim(line.substr(0, colon));
    const std::string val = trim(line.substr(colon + 1));
    if (key == "name") {
      f.name = val;
    } else if (key == "kind") {
      if (val == "graded")
        f.kind = FamilyKind::graded;
      else if (val == "filtered")
        f.kind = FamilyKind::filtered;
      else
        fail("unknown kind '" + val + "'");
      have_kind = true;
    } else if (key == "gens") {
      std::istringstream ss(val);
      std::vector<std::string> names;
      std::string w;
      while (ss >> w) names.push_back(w);
      if (names.empty()) fail("empty generator list");
      f.gens = make_gens(names);
    } else if (key == "rel") {
      if (!f.gens) fail("'rel:' before 'gens:'");
      try {
        f.relations.push_back(parse_ncpoly(f.gens, ps, val));
      } catch (const Error& e) {
        fail(std::string("bad relation: ") + e.what());
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (f.name.empty()) fail("missing 'name:' header");
  if (!have_kind) fail("missing 'kind:' header");
  if (!f.gens) fail("missing 'gens:' header");
  if (f.relations.empty()) fail("no relations listed");
  try {
    f.validate();
  } catch (const Error& e) {
    fail(e.what());
  }
  return f;
}

SparseVec nc_homogeneous_vec(const NCPoly& p, int d) {
  require(p.is_zero() || (p.homogeneous() && p.max_degree() == d),
          "expected a homogeneous polynomial of degree " + std::to_string(d));
  const size_t n = p.gens()->size();
  SparseVec v;
  for (const auto& t : p.terms())
    v.emplace_back(static_cast<uint32_t>(word_rank(n, t.w)), t.c);
  return sv_normalized(std::move(v));
}

Subspace relation_span_deg2(const RelationFamily& f) {
  const size_t n = f.gens->size();
  Subspace s(static_cast<uint32_t>(n * n), f.ps);
  for (const auto& r : f.relations)
    s.insert(nc_homogeneous_vec(r.degree_part(2), 2));
  return s;
}

}  // namespace qpencil
