#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "titeica/surface.hpp"

namespace titeica {

MeshFormat parse_mesh_format(const std::string& s) {
  if (s == "obj") return MeshFormat::Obj;
  if (s == "csv") return MeshFormat::Csv;
  throw InvalidArgument("unknown mesh format '" + s + "' (expected obj or csv)");
}

namespace {

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void export_mesh(const SurfaceGrid& g, const GeometryReport& geo, MeshFormat format,
                 const std::string& path) {
  if (g.r.empty()) throw InvalidArgument("export_mesh: empty surface");
  const GridSpec& s = g.grid;
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");

  if (format == MeshFormat::Obj) {
    for (const auto& r : g.r) out << "v " << fmt17(r(0)) << ' ' << fmt17(r(1)) << ' ' << fmt17(r(2)) << '\n';
    for (int j = 0; j + 1 < s.nv; ++j)
      for (int i = 0; i + 1 < s.nu; ++i) {
        const std::size_t a = s.index(i, j) + 1, b = s.index(i + 1, j) + 1;
        const std::size_t c = s.index(i + 1, j + 1) + 1, d = s.index(i, j + 1) + 1;
        out << "f " << a << ' ' << b << ' ' << c << '\n';
        out << "f " << a << ' ' << c << ' ' << d << '\n';
      }
  } else {
    if (geo.nodes.size() != g.r.size())
      throw InvalidArgument("export_mesh: geometry report does not match the grid");
    out << "u,v,x,y,z,K,d,I\n";
    for (int j = 0; j < s.nv; ++j)
      for (int i = 0; i < s.nu; ++i) {
        const std::size_t k = s.index(i, j);
        const auto& r = g.r[k];
        const auto& n = geo.nodes[k];
        out << fmt17(s.u(i)) << ',' << fmt17(s.v(j)) << ',' << fmt17(r(0)) << ',' << fmt17(r(1))
            << ',' << fmt17(r(2)) << ',' << fmt17(n.K) << ',' << fmt17(n.d) << ',' << fmt17(n.I)
            << '\n';
      }
  }
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<CsvNode> read_mesh_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "u,v,x,y,z,K,d,I")
    throw IoError("'" + path + "' is not a surface CSV");
  std::vector<CsvNode> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double f[8];
    const char* p = line.c_str();
    for (int k = 0; k < 8; ++k) {
      char* end = nullptr;
      f[k] = std::strtod(p, &end);
      if (end == p || (k < 7 && *end != ',')) throw IoError("malformed CSV row: " + line);
      p = end + (k < 7 ? 1 : 0);
    }
    out.push_back({f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7]});
  }
  return out;
}

}  // namespace titeica
