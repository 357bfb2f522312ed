#include "pel/group_spec.hpp"

#include <algorithm>
#include <sstream>

namespace pel {

namespace {

const std::pair<GroupKind, const char*> kKindNames[] = {
    {GroupKind::cyclic, "cyclic"},
    {GroupKind::elementary_abelian, "elementary_abelian"},
    {GroupKind::dihedral, "dihedral"},
    {GroupKind::symmetric, "symmetric"},
    {GroupKind::alternating, "alternating"},
    {GroupKind::psl2, "psl2"},
    {GroupKind::sl2, "sl2"},
    {GroupKind::singer_mersenne, "singer_mersenne"},
    {GroupKind::q8_ext, "q8_ext"},
    {GroupKind::c3_ext, "c3_ext"},
    {GroupKind::ex1, "ex1"},
    {GroupKind::ex2, "ex2"},
    {GroupKind::smallgroup_420_30, "smallgroup_420_30"},
    {GroupKind::direct_product, "direct_product"},
    {GroupKind::perm_gens, "perm_gens"},
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

const char* kind_name(GroupKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

uint64_t GroupSpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw InvalidSpec(std::string(kind_name(kind)) + ": missing parameter '" + name + "'");
  return it->second;
}

bool GroupSpec::operator==(const GroupSpec& o) const {
  return kind == o.kind && params == o.params && factors == o.factors && gens == o.gens;
}

std::string GroupSpec::str() const {
  if (kind == GroupKind::direct_product) {
    std::string out = "product(";
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out += ";";
      out += factors[i].str();
    }
    return out + ")";
  }
  std::ostringstream out;
  out << kind_name(kind);
  for (const auto& [key, val] : params) out << ":" << key << "=" << val;
  if (kind == GroupKind::perm_gens) {
    out << ":gens=";
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) out << "|";
      for (size_t j = 0; j < gens[i].size(); ++j) {
        if (j) out << ",";
        out << gens[i][j];
      }
    }
  }
  return out.str();
}

GroupSpec GroupSpec::parse(const std::string& s) {
  if (s.empty()) throw InvalidSpec("empty group spec");
  if (s.starts_with("product(")) {
    if (!s.ends_with(")")) throw InvalidSpec("unterminated product spec: " + s);
    GroupSpec spec;
    spec.kind = GroupKind::direct_product;
    for (const auto& part : split(s.substr(8, s.size() - 9), ';'))
      spec.factors.push_back(parse(part));
    if (spec.factors.empty()) throw InvalidSpec("product spec with no factors");
    return spec;
  }

  auto fields = split(s, ':');
  GroupSpec spec;
  bool found = false;
  for (const auto& [kind, name] : kKindNames)
    if (fields[0] == name) {
      spec.kind = kind;
      found = true;
    }
  if (!found || spec.kind == GroupKind::direct_product)
    throw InvalidSpec("unknown group kind: " + fields[0]);

  for (size_t i = 1; i < fields.size(); ++i) {
    auto eq = fields[i].find('=');
    if (eq == std::string::npos)
      throw InvalidSpec("bad spec field '" + fields[i] + "' in " + s);
    std::string key = fields[i].substr(0, eq), val = fields[i].substr(eq + 1);
    if (key == "gens") {
      if (spec.kind != GroupKind::perm_gens)
        throw InvalidSpec("gens= only valid for perm_gens");
      for (const auto& table : split(val, '|')) {
        std::vector<uint32_t> images;
        for (const auto& tok : split(table, ','))
          images.push_back(static_cast<uint32_t>(std::stoul(tok)));
        spec.gens.push_back(std::move(images));
      }
    } else {
      try {
        spec.params[key] = std::stoull(val);
      } catch (const std::exception&) {
        throw InvalidSpec("bad numeric value in spec field '" + fields[i] + "'");
      }
    }
  }
  return spec;
}

}  // namespace pel
