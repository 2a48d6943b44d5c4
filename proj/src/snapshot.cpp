#include "mmdg/snapshot.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "mmdg/error.hpp"

namespace mmdg {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  os.precision(17);
  return os;
}

void write_header(std::ostream& os, const PhaseMesh& m, double time) {
  os << "# nx=" << m.nx() << "\n# nv=" << m.nv() << "\n# p=" << m.degree()
     << "\n# x_min=" << m.x_domain().lo << "\n# x_max=" << m.x_domain().hi
     << "\n# v_min=" << m.v_domain().lo << "\n# v_max=" << m.v_domain().hi
     << "\n# time=" << time << '\n';
}

}  // namespace

void write_distribution_snapshot(const std::string& path,
                                 const DistributionField& f, double time) {
  const auto& m = f.mesh();
  auto os = open_out(path);
  write_header(os, m, time);
  os << "x,v,f\n";
  for (int i = 0; i < m.nx(); ++i)
    for (int r = 0; r < m.np(); ++r)
      for (int j = 0; j < m.nv(); ++j)
        for (int s = 0; s < m.np(); ++s)
          os << m.x_node(i, r) << ',' << m.v_node(j, s) << ',' << f(i, r, j, s) << '\n';
}

DistributionSnapshot read_distribution_snapshot(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open '" + path + "'");
  std::map<std::string, double> header;
  std::string line;
  while (std::getline(is, line) && line.starts_with("#")) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("bad snapshot header line: " + line);
    auto key = line.substr(1, eq - 1);
    key.erase(0, key.find_first_not_of(' '));
    header[key] = std::stod(line.substr(eq + 1));
  }
  for (const char* k : {"nx", "nv", "p", "x_min", "x_max", "v_min", "v_max", "time"})
    if (!header.count(k)) throw ConfigError(std::string("snapshot header lacks ") + k);
  if (line != "x,v,f") throw ConfigError("snapshot column header missing");

  DistributionSnapshot snap;
  snap.mesh = std::make_shared<const PhaseMesh>(build_mesh(
      header["x_min"], header["x_max"], static_cast<int>(header["nx"]),
      header["v_min"], header["v_max"], static_cast<int>(header["nv"]),
      static_cast<int>(header["p"])));
  snap.f = DistributionField(snap.mesh);
  snap.time = header["time"];
  auto data = snap.f.data();
  std::size_t k = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (k >= data.size()) throw ConfigError("snapshot has too many rows");
    const auto c = line.rfind(',');
    if (c == std::string::npos) throw ConfigError("bad snapshot row: " + line);
    data[k++] = std::stod(line.substr(c + 1));
  }
  if (k != data.size()) throw ConfigError("snapshot has too few rows");
  return snap;
}

void write_moment_snapshot(const std::string& path, const MomentField& rho,
                           double time) {
  const auto& m = rho.mesh();
  auto os = open_out(path);
  write_header(os, m, time);
  os << "x,n,u,theta\n";
  for (int i = 0; i < m.nx(); ++i)
    for (int r = 0; r < m.np(); ++r) {
      const auto s = fluid_from_moments(rho.at(i, r), m.x_node(i, r));
      os << m.x_node(i, r) << ',' << s.n << ',' << s.u << ',' << s.theta << '\n';
    }
}

void write_profile(const std::string& path, const std::vector<double>& x,
                   const std::vector<FluidState>& states, double time) {
  auto os = open_out(path);
  os << "# time=" << time << "\nx,n,u,theta\n";
  for (std::size_t k = 0; k < x.size(); ++k)
    os << x[k] << ',' << states[k].n << ',' << states[k].u << ',' << states[k].theta << '\n';
}

}  // namespace mmdg
