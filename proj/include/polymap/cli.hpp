// Command-line surface. Exit codes: 0 success or true verdict, 1 false
// verdict (a check that ran and failed), 2 usage or operational error.
#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polymap/catalog.hpp"
#include "polymap/io.hpp"
#include "polymap/pipeline.hpp"
#include "polymap/search.hpp"

namespace polymap {

namespace cli_detail {

inline bool is_catalog_patch_name(const std::string& name) {
  for (const auto& n : catalog_patch_names())
    if (n == name) return true;
  return false;
}

// "<name>" or "torus_grid(m,n)" from the catalog, otherwise a map file.
inline OrientedMap load_seed(const std::string& spec) {
  if (spec.rfind("torus_grid", 0) == 0) {
    int m = 0, n = 0;
    if (std::sscanf(spec.c_str(), "torus_grid(%d,%d)", &m, &n) != 2)
      throw BadParamsError("expected torus_grid(m,n)");
    return catalog_seed("torus_grid", m, n);
  }
  for (const auto& name : {"tetrahedron", "cube", "octahedron", "icosahedron"})
    if (spec == name) return catalog_seed(name);
  MapFile mf = read_map_file(spec);
  if (mf.kind != MapFile::Kind::Map) throw BadParamsError("seed file must hold a closed map");
  return mf.map;
}

struct LoadedPatch {
  Patch patch;
  std::optional<ExpansionPatch> expansion;
};

inline LoadedPatch load_patch(const std::string& spec) {
  if (is_catalog_patch_name(spec)) {
    CatalogPatch entry = catalog_patch(spec);
    return {entry.patch, entry.expansion};
  }
  MapFile mf = read_map_file(spec);
  LoadedPatch out{mf.to_patch(), std::nullopt};
  if (mf.kind == MapFile::Kind::ExpansionPatch) out.expansion = mf.to_expansion();
  return out;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

inline std::string summary_line(const MapSummary& s) {
  std::ostringstream out;
  out << "V=" << s.num_vertices << " E=" << s.num_edges << " F=" << s.num_faces
      << " chi=" << s.euler_characteristic << " genus=" << s.genus << " p={"
      << s.p_vector.to_string() << "} v={" << s.v_vector.to_string() << "}";
  return out.str();
}

inline MapFile file_for(const LoadedPatch& lp, std::vector<std::string> comments) {
  if (lp.expansion) return map_file_of(*lp.expansion, lp.patch.markers(), std::move(comments));
  return map_file_of(lp.patch, std::move(comments));
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"polymap: construction and verification kit for polyhedral maps on surfaces"};
  app.require_subcommand(1);

  std::string in_path, out_path, report_path, seed_spec, patch_spec, pf_spec, family_spec,
      p_text, v_text, outer_text, gons_text, op_name, catalog_cmd, catalog_name;
  long long chi = 2;
  int marker_idx = 0, grow_k = 0, fam_k = 0, passes = 1, search_r = 4;
  int max_faces = 16, max_vertices = 48;
  long long budget = 2'000'000;

  auto* validate = app.add_subcommand("validate", "parse and fully validate a file");
  validate->add_option("file", in_path)->required();

  auto* summary = app.add_subcommand("summary", "print counts, chi, genus, p- and v-vectors");
  summary->add_option("file", in_path)->required();

  auto* dual = app.add_subcommand("dual", "write the dual of a closed map");
  dual->add_option("in", in_path)->required();
  dual->add_option("out", out_path)->required();

  auto* polycheck = app.add_subcommand("polyhedral-check", "do all face pairs meet properly?");
  polycheck->add_option("file", in_path)->required();

  auto* admissible = app.add_subcommand("admissible", "check the two Euler-derived identities");
  admissible->add_option("--chi", chi)->required();
  admissible->add_option("--p", p_text)->required();
  admissible->add_option("--v", v_text)->required();

  auto* expand = app.add_subcommand("expand", "replace every face of a seed with ring patches");
  expand->add_option("--seed", seed_spec)->required();
  expand->add_option("--patch", patch_spec)->required();
  expand->add_option("--pf", pf_spec);
  expand->add_option("--out", out_path)->required();

  auto* grow_cmd = app.add_subcommand("grow", "apply a growth rewrite at a stored marker");
  grow_cmd->add_option("--patch", patch_spec)->required();
  grow_cmd->add_option("--marker", marker_idx)->required();
  grow_cmd->add_option("--op", op_name)->required()->check(CLI::IsMember({"square", "diamond", "vertex"}));
  grow_cmd->add_option("--k", grow_k)->required();
  grow_cmd->add_option("--out", out_path)->required();

  auto* realize = app.add_subcommand("realize", "run a triangle-family construction");
  realize->add_option("--seed", seed_spec)->required();
  realize->add_option("--family", family_spec)->required()->check(CLI::IsMember({"3:5", "3:7"}));
  realize->add_option("--k", fam_k)->required();
  realize->add_option("--passes", passes)->required();
  realize->add_option("--out", out_path);
  realize->add_option("--report", report_path);
  realize->add_option("--pf", pf_spec);

  auto* search = app.add_subcommand("search", "bounded search for an o-4-gonal patch");
  search->add_option("--outer", outer_text)->required();
  search->add_option("--r", search_r)->required();
  search->add_option("--gons", gons_text)->required();
  search->add_option("--max-faces", max_faces)->required();
  search->add_option("--max-vertices", max_vertices);
  search->add_option("--budget", budget);
  search->add_option("--out", out_path);

  auto* catalog_sub = app.add_subcommand("catalog", "list or show shipped entries");
  catalog_sub->add_option("command", catalog_cmd)->required()->check(CLI::IsMember({"list", "show"}));
  catalog_sub->add_option("name", catalog_name);

  auto* export_adj = app.add_subcommand("export-adj", "plain adjacency list for external viewers");
  export_adj->add_option("file", in_path)->required();

  std::vector<const char*> argv;
  argv.push_back("polymap");
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*validate) {
      try {
        MapFile mf = read_map_file(in_path);
        const char* kind = mf.kind == MapFile::Kind::Map              ? "map"
                           : mf.kind == MapFile::Kind::Patch          ? "patch"
                                                                      : "expansion_patch";
        out << "valid " << kind << "\n";
        return 0;
      } catch (const SyntaxError& e) {
        out << "invalid: " << e.what() << "\n";
        return 1;
      } catch (const ValidationError& e) {
        out << "invalid: " << e.what() << "\n";
        return 1;
      }
    }
    if (*summary) {
      MapFile mf = read_map_file(in_path);
      if (mf.kind == MapFile::Kind::Map) {
        out << cli_detail::summary_line(mf.map.summarize()) << "\n";
      } else {
        // patches host 2-valent boundary vertices, outside the v-vector domain
        out << "V=" << mf.map.num_vertices() << " E=" << mf.map.num_edges()
            << " F=" << mf.map.num_faces() << " chi=" << mf.map.euler_characteristic() << "\n";
      }
      if (mf.kind != MapFile::Kind::Map) {
        Patch p = mf.to_patch();
        out << "inner p={" << p.p_vector().to_string() << "} boundary weights [";
        auto ws = p.boundary_weights();
        for (size_t i = 0; i < ws.size(); i++) out << (i ? "," : "") << ws[i];
        out << "]\n";
      }
      if (mf.kind == MapFile::Kind::ExpansionPatch) {
        auto ep = mf.to_expansion();
        out << "outer tuple (";
        for (size_t i = 0; i < ep.outer_tuple.size(); i++)
          out << (i ? "," : "") << ep.outer_tuple[i];
        out << ")\n";
      }
      return 0;
    }
    if (*dual) {
      MapFile mf = read_map_file(in_path);
      if (mf.kind != MapFile::Kind::Map) {
        err << "error: dual needs a closed map\n";
        return 2;
      }
      write_map_file(map_file_of(mf.map.dual(), {"dual of " + in_path}), out_path);
      out << "wrote " << out_path << "\n";
      return 0;
    }
    if (*polycheck) {
      MapFile mf = read_map_file(in_path);
      OrientedMap::PolyhedralReport rep =
          mf.kind == MapFile::Kind::Map
              ? mf.map.polyhedral_report()
              : mf.map.polyhedral_report(mf.outer_face);
      if (rep.ok) {
        out << "polyhedral\n";
        return 0;
      }
      out << "not polyhedral: faces (" << io_detail::face_key(mf.map, rep.witness_f1) << ", "
          << io_detail::face_key(mf.map, rep.witness_f2) << ") do not meet properly\n";
      return 1;
    }
    if (*admissible) {
      auto rep = check_admissible(CountSeq::parse(p_text), CountSeq::parse(v_text), chi);
      out << (rep.admissible ? "admissible" : "not admissible") << "\n";
      out << "eq6 lhs " << rep.eq6_lhs << " rhs " << 6 * rep.chi << "; eq4 lhs " << rep.eq4_lhs
          << " rhs " << 4 * rep.chi << "; weighted sums "
          << (rep.sum_faces_eq_sum_vertices_weighted ? "equal" : "differ") << "; parity "
          << (rep.parity_ok ? "even" : "odd") << "\n";
      return rep.admissible ? 0 : 1;
    }
    if (*expand) {
      OrientedMap seed = cli_detail::load_seed(seed_spec);
      auto lp = cli_detail::load_patch(patch_spec);
      if (!lp.expansion) {
        err << "error: --patch must be an expansion patch\n";
        return 2;
      }
      std::optional<Patch> pf;
      if (!pf_spec.empty()) pf = cli_detail::load_patch(pf_spec).patch;
      try {
        auto res = expand_polyhedral(seed, *lp.expansion, pf ? &*pf : nullptr);
        write_map_file(map_file_of(res.expanded.map, {"expansion of " + seed_spec}), out_path);
        out << "polyhedral; " << cli_detail::summary_line(res.expanded.map.summarize()) << "\n"
            << "wrote " << out_path << "\n";
        return 0;
      } catch (const PolyhedralityFailedError& e) {
        out << e.what() << "\n";
        return 1;
      }
    }
    if (*grow_cmd) {
      auto lp = cli_detail::load_patch(patch_spec);
      if (marker_idx < 0 || marker_idx >= static_cast<int>(lp.patch.markers().size())) {
        err << "error: patch has no marker " << marker_idx << "\n";
        return 2;
      }
      auto kind = lp.patch.markers()[marker_idx].kind;
      if (GrowthMarker::kind_name(kind) != op_name) {
        err << "error: marker " << marker_idx << " is a " << GrowthMarker::kind_name(kind)
            << ", not a " << op_name << "\n";
        return 2;
      }
      GrowthResult res = grow(lp.patch, marker_idx, grow_k);
      cli_detail::LoadedPatch grown{res.patch, std::nullopt};
      if (lp.expansion) {
        ExpansionRoles roles = lp.expansion->roles;
        for (auto* list : {&roles.i, &roles.o, &roles.ip})
          for (int& v : *list) v = res.vertex_map[v];
        grown.expansion = validate_expansion_patch(res.patch, roles);
      }
      write_map_file(cli_detail::file_for(grown, {"grown from " + patch_spec}), out_path);
      out << "p={" << res.patch.p_vector().to_string() << "}\nwrote " << out_path << "\n";
      return 0;
    }
    if (*realize) {
      FamilySpec spec;
      spec.family = family_spec == "3:5" ? Family::ThreeFive : Family::ThreeSeven;
      spec.k = fam_k;
      spec.passes = passes;
      std::optional<Patch> pf;
      if (!pf_spec.empty()) pf = cli_detail::load_patch(pf_spec).patch;
      try {
        RealizeOptions opts;
        opts.user_pf = pf;
        RealizationResult res = realize_family(cli_detail::load_seed(seed_spec), spec, opts);
        const RealizationReport& rep = res.report;
        std::ostringstream doc;
        doc << "realization report\n"
            << "family: " << spec.name() << "\nk: " << spec.k << "\nl: " << spec.l()
            << "\npasses: " << rep.passes_used << "\nseed: "
            << cli_detail::summary_line(rep.seed_summary)
            << "\nseed_admissible: " << (rep.seed_admissible ? "yes" : "no")
            << "\nresult: " << cli_detail::summary_line(rep.result_summary)
            << "\ndelta_p: " << rep.delta_p.to_string() << "\nq: " << spec.q().to_string()
            << "\nc: " << rep.c << "\nd: " << rep.d
            << "\npolyhedral: " << (rep.polyhedral ? "yes" : "no") << "\npf: "
            << (!rep.pf_available ? "none" : rep.pf_from_search ? "search" : "supplied/catalog")
            << "\n";
        out << "c=" << rep.c << " d=" << rep.d << " polyhedral="
            << (rep.polyhedral ? "yes" : "no") << "\n";
        if (!report_path.empty()) {
          std::ofstream rf(report_path);
          rf << doc.str();
          out << "wrote report " << report_path << "\n";
        } else {
          out << doc.str();
        }
        if (!out_path.empty()) {
          write_map_file(map_file_of(res.result, {"realization " + spec.name()}), out_path);
          out << "wrote " << out_path << "\n";
        }
        return 0;
      } catch (const PolyhedralityFailedError& e) {
        out << e.what() << "\n";
        return 1;
      } catch (const MissingPF37Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
      }
    }
    if (*search) {
      SearchBounds bounds;
      bounds.max_inner_faces = max_faces;
      bounds.max_vertices = max_vertices;
      bounds.max_nodes = budget;
      std::set<int> gons;
      for (int g : cli_detail::parse_int_list(gons_text)) gons.insert(g);
      auto outcome = search_patch(cli_detail::parse_int_list(outer_text), search_r, gons, bounds);
      if (outcome.patch) {
        out << "found: p={" << outcome.patch->p_vector().to_string() << "} after "
            << outcome.nodes << " nodes\n";
        if (!out_path.empty()) {
          write_map_file(map_file_of(*outcome.patch, {"search result"}), out_path);
          out << "wrote " << out_path << "\n";
        }
        return 0;
      }
      out << (outcome.exhausted_bounds ? "not found: bounds exhausted"
                                       : "not found: no such patch within bounds")
          << " after " << outcome.nodes << " nodes\n";
      return 1;
    }
    if (*catalog_sub) {
      if (catalog_cmd == "list") {
        for (const auto& name : catalog_patch_names()) {
          CatalogPatch entry = catalog_patch(name);
          out << name << ": " << (entry.expansion ? "expansion_patch" : "patch") << " r="
              << entry.patch.r() << " p={" << entry.patch.p_vector().to_string() << "} markers="
              << entry.patch.markers().size() << " (" << entry.provenance << ")\n";
        }
        out << "seeds:";
        for (const auto& name : catalog_seed_names()) out << ' ' << name;
        out << "\n";
        return 0;
      }
      if (catalog_name.empty()) {
        err << "error: catalog show needs a name\n";
        return 2;
      }
      CatalogPatch entry = catalog_patch(catalog_name);
      cli_detail::LoadedPatch lp{entry.patch, entry.expansion};
      out << write_map_file(cli_detail::file_for(lp, {entry.provenance}));
      return 0;
    }
    if (*export_adj) {
      MapFile mf = read_map_file(in_path);
      const auto& m = mf.map;
      auto adj = m.simple_adjacency();
      for (int v = 0; v < m.num_vertices(); v++) {
        out << io_detail::vertex_key(m, v) << ':';
        std::vector<int> keys;
        for (int w : adj[v]) keys.push_back(io_detail::vertex_key(m, w));
        std::sort(keys.begin(), keys.end());
        for (int k : keys) out << ' ' << k;
        out << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace polymap
