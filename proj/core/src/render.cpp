#include "gerst/render.hpp"

#include <sstream>

namespace gerst {

std::string render_layers(int dim, const Cells& cells) {
  if (dim != 2 && dim != 3) throw Error("only 2-D and 3-D shapes can be drawn", "dimension");
  if (cells.empty()) return "(empty)\n";
  const Point top = join(cells);
  const int layers = dim == 3 ? top[2] + 1 : 1;
  std::ostringstream os;
  for (int z = 0; z < layers; ++z) {
    if (dim == 3) os << "a3 = " << z << '\n';
    for (int y = top[1]; y >= 0; --y) {
      for (int x = 0; x <= top[0]; ++x) {
        Point p(dim);
        p[0] = x;
        p[1] = y;
        if (dim == 3) p[2] = z;
        os << (contains(cells, p) ? '#' : '.');
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace gerst
