// Grafts two corollas, closes a loop and reads off the surface.
#include <iostream>

#include "nsmod/nsmod.hpp"

int main() {
  using namespace nsmod;
  NsGraph x = corolla(text::parse_type("{(x v1 z u1)}"));
  NsGraph y = corolla(text::parse_type("{(y u2 v2)}"));

  NsGraph one_edge = graft(x, "v1", y, "v2");
  std::cout << "graft:     " << text::format(arity(one_edge)) << "\n";

  NsGraph closed = self_glue(one_edge, "u1", "u2");
  std::cout << "self-glue: " << text::format(arity(closed)) << "\n";

  for (const auto& f : faces(closed)) {
    LinearWord names;
    for (int h : f.flags) names.push_back(closed.flags[h]);
    std::cout << "  face " << text::format(names) << "\n";
  }

  SurfaceSignature s = surface_signature(normal_form(closed));
  std::cout << "surface:   " << format(s) << "\n";
  std::cout << io::dump_graph(canonize(closed).graph) << "\n";
}
