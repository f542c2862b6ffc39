// Line-oriented text format for maps, patches and expansion patches.
//
//   # comment (provenance)
//   polymap 1 map|patch|expansion_patch [r <r>]
//   dart <id> alpha <id> sigma <id>
//   outer_face <dart id>                  (patch kinds)
//   role i0|...|o0|...|ip0|... <vertex>   (expansion_patch; vertices are the
//                                          lowest dart id of their orbit)
//   role s <index>
//   marker square|diamond|vertex <anchor> <face1> <face2>
//
// Canonical form: darts ascending, roles in definition order, markers in
// file order; ids decimal, fields whitespace separated, newline terminated.
// parse(write(x)) reproduces an identical structure; unknown keys reject.
#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "polymap/error.hpp"
#include "polymap/expansion.hpp"
#include "polymap/oriented_map.hpp"
#include "polymap/patch.hpp"

namespace polymap {

struct MapFile {
  enum class Kind { Map, Patch, ExpansionPatch };
  Kind kind = Kind::Map;
  int version = 1;
  int r = 0;
  OrientedMap map;
  int outer_face = -1;
  std::optional<ExpansionRoles> roles;
  std::vector<GrowthMarker> markers;
  std::vector<std::string> comments;

  Patch to_patch() const {
    if (kind == Kind::Map) throw ValidationError("NotPatch", "file holds a closed map");
    return Patch::create(map, outer_face, r, markers);
  }
  ExpansionPatch to_expansion() const {
    if (!roles) throw ValidationError("NotPatch", "file holds no role lines");
    return validate_expansion_patch(to_patch(), *roles);
  }
};

namespace io_detail {

inline int orbit_key(const OrientedMap& m, const std::vector<int>& orbit_darts) {
  int best = m.id_of(orbit_darts[0]);
  for (int d : orbit_darts) best = std::min(best, m.id_of(d));
  return best;
}

inline int vertex_key(const OrientedMap& m, int v) { return orbit_key(m, m.vertex_darts(v)); }
inline int face_key(const OrientedMap& m, int f) { return orbit_key(m, m.face_darts(f)); }
inline int edge_key(const OrientedMap& m, int e) { return orbit_key(m, m.edge_darts(e)); }

inline int vertex_by_key(const OrientedMap& m, int key, int line) {
  int d = m.dart_of_id(key);
  if (d < 0) throw SyntaxError(line, "unknown dart id " + std::to_string(key));
  int v = m.vertex_of(d);
  if (vertex_key(m, v) != key)
    throw SyntaxError(line, "dart " + std::to_string(key) + " is not its vertex's lowest dart");
  return v;
}

inline int face_by_key(const OrientedMap& m, int key, int line) {
  int d = m.dart_of_id(key);
  if (d < 0) throw SyntaxError(line, "unknown dart id " + std::to_string(key));
  int f = m.face_of(d);
  if (face_key(m, f) != key)
    throw SyntaxError(line, "dart " + std::to_string(key) + " is not its face's lowest dart");
  return f;
}

inline std::vector<std::pair<std::string, int>> role_rows(const OrientedMap& m,
                                                          const ExpansionRoles& roles) {
  std::vector<std::pair<std::string, int>> rows;
  for (size_t l = 0; l < roles.i.size(); l++)
    rows.push_back({"i" + std::to_string(l), vertex_key(m, roles.i[l])});
  for (size_t t = 0; t < roles.o.size(); t++)
    rows.push_back({"o" + std::to_string(t), vertex_key(m, roles.o[t])});
  for (size_t l = 0; l < roles.ip.size(); l++)
    rows.push_back({"ip" + std::to_string(l), vertex_key(m, roles.ip[l])});
  return rows;
}

}  // namespace io_detail

inline std::string write_map_file(const MapFile& mf) {
  std::ostringstream out;
  for (const auto& c : mf.comments) out << "# " << c << "\n";
  out << "polymap " << mf.version << ' ';
  switch (mf.kind) {
    case MapFile::Kind::Map: out << "map"; break;
    case MapFile::Kind::Patch: out << "patch r " << mf.r; break;
    case MapFile::Kind::ExpansionPatch: out << "expansion_patch r " << mf.r; break;
  }
  out << "\n";
  const auto& m = mf.map;
  for (int id : m.dart_ids()) {
    int d = m.dart_of_id(id);
    out << "dart " << id << " alpha " << m.id_of(m.alpha(d)) << " sigma " << m.id_of(m.sigma(d))
        << "\n";
  }
  if (mf.kind != MapFile::Kind::Map)
    out << "outer_face " << io_detail::face_key(m, mf.outer_face) << "\n";
  if (mf.roles) {
    for (auto& [name, key] : io_detail::role_rows(m, *mf.roles))
      out << "role " << name << ' ' << key << "\n";
    out << "role s " << mf.roles->s << "\n";
  }
  for (const auto& mk : mf.markers) {
    out << "marker " << GrowthMarker::kind_name(mk.kind) << ' ';
    if (mk.kind == GrowthMarker::Kind::Vertex) {
      out << io_detail::vertex_key(m, mk.anchor_a);
    } else {
      int e = -1;
      for (int d : m.vertex_darts(mk.anchor_a))
        if (m.vertex_of(m.alpha(d)) == mk.anchor_b) e = m.edge_of(d);
      if (e < 0) throw ValidationError("MarkerInvalid", "marker edge missing");
      out << io_detail::edge_key(m, e);
    }
    out << ' ' << io_detail::face_key(m, mk.face1) << ' ' << io_detail::face_key(m, mk.face2)
        << "\n";
  }
  return out.str();
}

inline MapFile parse_map_file(const std::string& text) {
  MapFile mf;
  std::map<int, int> alpha, sigma;
  struct PendingRole {
    std::string name;
    int key, line;
  };
  struct PendingMarker {
    GrowthMarker::Kind kind;
    int anchor, f1, f2, line;
  };
  std::vector<PendingRole> pending_roles;
  std::vector<PendingMarker> pending_markers;
  std::optional<int> outer_key;
  int outer_line = 0, s_value = -1;
  bool header_seen = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string c = line.substr(1);
      if (!c.empty() && c[0] == ' ') c.erase(0, 1);
      mf.comments.push_back(c);
      continue;
    }
    std::istringstream row(line);
    std::string word;
    row >> word;
    auto need_int = [&](const char* what) {
      long long x;
      if (!(row >> x)) throw SyntaxError(line_no, std::string("expected ") + what);
      return static_cast<int>(x);
    };
    if (!header_seen) {
      if (word != "polymap") throw SyntaxError(line_no, "expected 'polymap' header");
      mf.version = need_int("format version");
      if (mf.version != 1) throw SyntaxError(line_no, "unsupported format version");
      std::string kind;
      if (!(row >> kind)) throw SyntaxError(line_no, "expected kind");
      if (kind == "map") {
        mf.kind = MapFile::Kind::Map;
      } else if (kind == "patch" || kind == "expansion_patch") {
        mf.kind = kind == "patch" ? MapFile::Kind::Patch : MapFile::Kind::ExpansionPatch;
        std::string rword;
        if (!(row >> rword) || rword != "r") throw SyntaxError(line_no, "patch kinds need 'r <r>'");
        mf.r = need_int("r");
        if (mf.r < 3) throw SyntaxError(line_no, "r must be at least 3");
      } else {
        throw SyntaxError(line_no, "unknown kind '" + kind + "'");
      }
      header_seen = true;
    } else if (word == "dart") {
      int id = need_int("dart id");
      std::string kw;
      row >> kw;
      if (kw != "alpha") throw SyntaxError(line_no, "expected 'alpha'");
      int a = need_int("alpha id");
      row >> kw;
      if (kw != "sigma") throw SyntaxError(line_no, "expected 'sigma'");
      int sg = need_int("sigma id");
      if (alpha.count(id)) throw SyntaxError(line_no, "dart " + std::to_string(id) + " repeated");
      alpha[id] = a;
      sigma[id] = sg;
    } else if (word == "outer_face") {
      if (mf.kind == MapFile::Kind::Map) throw SyntaxError(line_no, "maps have no outer face");
      outer_key = need_int("outer face dart");
      outer_line = line_no;
    } else if (word == "role") {
      if (mf.kind != MapFile::Kind::ExpansionPatch)
        throw SyntaxError(line_no, "roles only belong to expansion patches");
      std::string name;
      if (!(row >> name)) throw SyntaxError(line_no, "expected role name");
      if (name == "s") {
        s_value = need_int("s");
      } else {
        pending_roles.push_back({name, need_int("role vertex"), line_no});
      }
    } else if (word == "marker") {
      std::string kind;
      if (!(row >> kind)) throw SyntaxError(line_no, "expected marker kind");
      GrowthMarker::Kind mk;
      if (kind == "square") {
        mk = GrowthMarker::Kind::Square;
      } else if (kind == "diamond") {
        mk = GrowthMarker::Kind::Diamond;
      } else if (kind == "vertex") {
        mk = GrowthMarker::Kind::Vertex;
      } else {
        throw SyntaxError(line_no, "unknown marker kind '" + kind + "'");
      }
      int anchor = need_int("marker anchor");
      int f1 = need_int("marker face");
      int f2 = need_int("marker face");
      pending_markers.push_back({mk, anchor, f1, f2, line_no});
    } else {
      throw SyntaxError(line_no, "unknown key '" + word + "'");
    }
    std::string extra;
    if (row >> extra) throw SyntaxError(line_no, "trailing field '" + extra + "'");
  }
  if (!header_seen) throw SyntaxError(1, "empty file");
  if (alpha.empty()) throw SyntaxError(line_no, "no darts");

  try {
    mf.map = OrientedMap::build(alpha, sigma);
  } catch (const Error& err) {
    throw ValidationError(err.name(), err.what());
  }
  const auto& m = mf.map;

  if (mf.kind != MapFile::Kind::Map) {
    if (!outer_key) throw SyntaxError(line_no, "patch kinds need an outer_face line");
    mf.outer_face = io_detail::face_by_key(m, *outer_key, outer_line);
  }
  for (const auto& pm : pending_markers) {
    GrowthMarker mk;
    mk.kind = pm.kind;
    if (pm.kind == GrowthMarker::Kind::Vertex) {
      mk.anchor_a = io_detail::vertex_by_key(m, pm.anchor, pm.line);
      mk.anchor_b = -1;
    } else {
      int d = m.dart_of_id(pm.anchor);
      if (d < 0) throw SyntaxError(pm.line, "unknown dart id " + std::to_string(pm.anchor));
      int e = m.edge_of(d);
      if (io_detail::edge_key(m, e) != pm.anchor)
        throw SyntaxError(pm.line, "marker anchor is not its edge's lowest dart");
      auto [u, v] = m.edge_endpoints(e);
      mk.anchor_a = u;
      mk.anchor_b = v;
    }
    mk.face1 = io_detail::face_by_key(m, pm.f1, pm.line);
    mk.face2 = io_detail::face_by_key(m, pm.f2, pm.line);
    mf.markers.push_back(mk);
  }
  if (mf.kind == MapFile::Kind::ExpansionPatch) {
    ExpansionRoles roles;
    roles.s = s_value;
    if (s_value < 0) throw SyntaxError(line_no, "expansion patches need 'role s <index>'");
    auto fill = [&](const std::string& prefix, std::vector<int>& list) {
      for (int idx = 0;; idx++) {
        bool found = false;
        for (const auto& pr : pending_roles) {
          if (pr.name == prefix + std::to_string(idx)) {
            list.push_back(io_detail::vertex_by_key(m, pr.key, pr.line));
            found = true;
            break;
          }
        }
        if (!found) break;
      }
    };
    fill("i", roles.i);
    fill("o", roles.o);
    fill("ip", roles.ip);
    size_t named = roles.i.size() + roles.o.size() + roles.ip.size();
    if (named != pending_roles.size()) throw SyntaxError(line_no, "role names must be contiguous");
    mf.roles = roles;
  } else if (!pending_roles.empty()) {
    throw SyntaxError(pending_roles.front().line, "roles only belong to expansion patches");
  }

  // Full validation of the declared kind.
  try {
    if (mf.kind == MapFile::Kind::Patch) mf.to_patch();
    if (mf.kind == MapFile::Kind::ExpansionPatch) mf.to_expansion();
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& err) {
    throw ValidationError(err.name(), err.what());
  }
  return mf;
}

inline MapFile map_file_of(const OrientedMap& m, std::vector<std::string> comments = {}) {
  MapFile mf;
  mf.kind = MapFile::Kind::Map;
  mf.map = m;
  mf.comments = std::move(comments);
  return mf;
}

inline MapFile map_file_of(const Patch& p, std::vector<std::string> comments = {}) {
  MapFile mf;
  mf.kind = MapFile::Kind::Patch;
  mf.map = p.map();
  mf.r = p.r();
  mf.outer_face = p.outer_face();
  mf.markers = p.markers();
  mf.comments = std::move(comments);
  return mf;
}

inline MapFile map_file_of(const ExpansionPatch& ep, const std::vector<GrowthMarker>& markers,
                           std::vector<std::string> comments = {}) {
  MapFile mf;
  mf.kind = MapFile::Kind::ExpansionPatch;
  mf.map = ep.patch.map();
  mf.r = ep.r();
  mf.outer_face = ep.patch.outer_face();
  mf.roles = ep.roles;
  mf.markers = markers;
  mf.comments = std::move(comments);
  return mf;
}

inline MapFile read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map_file(buf.str());
}

inline void write_map_file(const MapFile& mf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot open '" + path + "' for writing");
  out << write_map_file(mf);
}

}  // namespace polymap
