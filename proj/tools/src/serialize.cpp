#include "rootforge_cli/serialize.hpp"

#include <cmath>
#include <sstream>

namespace rootforge::cli {
namespace {

json interval_json(const DyadicInterval& v) {
  return json::array({dyadic_string(v.lo), dyadic_string(v.hi)});
}

std::string interval_text(const DyadicInterval& v) {
  std::ostringstream os;
  os << "[" << v.lo.to_double() << ", " << v.hi.to_double() << "]";
  return os.str();
}

}  // namespace

std::string dyadic_string(const Dyadic& d) { return d.to_string(); }

Dyadic dyadic_from_string(const std::string& s) { return Dyadic::parse(s); }

json root_result_to_json(const RootResult& r) {
  json roots = json::array();
  for (int i = 0; i < r.k(); ++i) {
    const ComplexDisk& d = r.disks[i];
    roots.push_back({{"center", {{"re", dyadic_string(d.center.re)}, {"im", dyadic_string(d.center.im)}}},
                     {"radius", dyadic_string(d.radius)},
                     {"multiplicity", r.multiplicities[i]},
                     {"real", i < static_cast<int>(r.real_flags.size()) && r.real_flags[i]}});
  }
  return {{"k", r.k()}, {"b_final", r.b_final}, {"roots", roots}};
}

RootResult root_result_from_json(const json& j) {
  RootResult r;
  r.b_final = j.at("b_final").get<int64_t>();
  for (const auto& root : j.at("roots")) {
    ComplexDisk d;
    d.center.re = dyadic_from_string(root.at("center").at("re").get<std::string>());
    d.center.im = dyadic_from_string(root.at("center").at("im").get<std::string>());
    d.radius = dyadic_from_string(root.at("radius").get<std::string>());
    r.disks.push_back(std::move(d));
    r.multiplicities.push_back(root.at("multiplicity").get<int>());
    r.real_flags.push_back(root.at("real").get<bool>());
  }
  for (int m : r.multiplicities) r.n += m;
  return r;
}

json topology_to_json(const Topology& t) {
  json vertices = json::array();
  for (const auto& v : t.graph.vertices)
    vertices.push_back({{"column", v.column},
                        {"x", interval_json(v.x)},
                        {"y", interval_json(v.y)},
                        {"kind", v.kind == VertexKind::critical ? "critical" : "intermediate"},
                        {"multiplicity", v.multiplicity}});
  json edges = json::array();
  for (auto [a, b] : t.graph.edges) edges.push_back(json::array({a, b}));
  return {{"vertices", vertices},
          {"edges", edges},
          {"components", t.graph.components()},
          {"cycles", t.graph.cycles()},
          {"shear_s", t.job.shear_s.get_str()},
          {"prime", t.counts.prime_used}};
}

json solutions_to_json(const SolutionBoxes& s) {
  json sol = json::array();
  for (const auto& b : s.boxes) sol.push_back({{"x", interval_json(b.x)}, {"y", interval_json(b.y)}});
  return {{"solutions", sol}};
}

std::string root_result_to_text(const RootResult& r) {
  std::ostringstream os;
  os << "k = " << r.k() << ", b_final = " << r.b_final << "\n";
  for (int i = 0; i < r.k(); ++i) {
    const ComplexDisk& d = r.disks[i];
    const double im = d.center.im.to_double();
    os << "  " << d.center.re.to_double() << (im < 0 ? " - " : " + ") << std::abs(im) << "i"
       << "  radius 2^" << (d.radius.is_zero() ? std::string("-inf") : std::to_string(d.radius.log2_ceil()))
       << "  multiplicity " << r.multiplicities[i];
    if (i < static_cast<int>(r.real_flags.size()) && r.real_flags[i]) os << "  real";
    os << "\n";
  }
  return os.str();
}

std::string topology_to_text(const Topology& t) {
  std::ostringstream os;
  os << "vertices " << t.graph.vertices.size() << ", edges " << t.graph.edges.size()
     << ", components " << t.graph.components() << ", cycles " << t.graph.cycles()
     << ", shear " << t.job.shear_s.get_str() << ", prime " << t.counts.prime_used << "\n";
  for (size_t i = 0; i < t.graph.vertices.size(); ++i) {
    const auto& v = t.graph.vertices[i];
    os << "  v" << i << " x " << interval_text(v.x) << " y " << interval_text(v.y)
       << (v.kind == VertexKind::critical ? " critical" : "") << "\n";
  }
  for (auto [a, b] : t.graph.edges) os << "  v" << a << " -- v" << b << "\n";
  return os.str();
}

std::string solutions_to_text(const SolutionBoxes& s) {
  std::ostringstream os;
  os << s.count << " solutions\n";
  for (const auto& b : s.boxes) os << "  x " << interval_text(b.x) << " y " << interval_text(b.y) << "\n";
  return os.str();
}

}  // namespace rootforge::cli
