#include "qfold/dot.hpp"

#include <sstream>

namespace qf {

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

void emit_quiver_body(std::ostringstream& os, const Quiver& q) {
  for (int v = 0; v < q.nv; ++v) {
    std::string name = q.vertex_name.empty() || q.vertex_name[static_cast<size_t>(v)].empty()
                           ? std::to_string(v)
                           : q.vertex_name[static_cast<size_t>(v)];
    os << "  n" << v << " [label=" << quote(name) << ", tooltip=" << quote("a -> n" + std::to_string(q.a_vertex[static_cast<size_t>(v)]))
       << "];\n";
  }
  for (int h = 0; h < q.arrow_count(); h += 2)
    os << "  n" << q.H[static_cast<size_t>(h)].src << " -> n"
       << q.H[static_cast<size_t>(h)].dst << ";\n";
}

} // namespace

std::string quiver_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n  rankdir=LR;\n";
  emit_quiver_body(os, q);
  os << "}\n";
  return os.str();
}

std::string framed_quiver_dot(const FramedQuiver& f) {
  Quiver full = full_quiver(f);
  std::ostringstream os;
  os << "digraph framed_quiver {\n  rankdir=LR;\n";
  emit_quiver_body(os, full);
  os << "}\n";
  return os.str();
}

std::string crystal_dot(const Crystal& b) {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n";
  for (int v = 0; v < b.size(); ++v) {
    os << "  n" << v << " [label=" << quote(b.verts[static_cast<size_t>(v)].wt.str());
    if (!b.verts[static_cast<size_t>(v)].label.empty())
      os << ", tooltip=" << quote(b.verts[static_cast<size_t>(v)].label);
    if (v == b.hw) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (int i = 0; i < b.cd.rank; ++i)
    for (int v = 0; v < b.size(); ++v) {
      int t = b.f(i, v);
      if (t >= 0)
        os << "  n" << v << " -> n" << t << " [label=" << quote(std::to_string(i))
           << "];\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace qf
