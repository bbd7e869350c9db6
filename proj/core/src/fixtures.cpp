#include "ccomb/fixtures.hpp"

namespace ccomb::fixtures {

Graph fig1_g1() { return Graph(3, {{0, 1}, {1, 2}}, 0, 0); }

Graph fig1_g2() { return Graph(4, {{0, 1}, {1, 2}, {1, 3}}, 0, 1); }

Graph fig2_g1() { return Graph(3, {{0, 0}, {0, 1}, {1, 2}}, 0, 0); }

Graph fig2_g2() { return Graph(4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}}, 0, 1); }

Graph edge() { return Graph::path(2, 0); }

Graph isolated() { return Graph::isolated(); }

Graph loop() { return Graph::loop_vertex(); }

}  // namespace ccomb::fixtures
