#ifndef CCOMB_FIXTURES_HPP
#define CCOMB_FIXTURES_HPP

// The example graphs of the two figures. The same graphs ship as files under
// fixtures/ in the repository.

#include "ccomb/graphs.hpp"

namespace ccomb::fixtures {

/// Path e1 - x - x' rooted at its end e1 = 0, with f1 = e1.
Graph fig1_g1();
/// Tree e2 - f2 with leaves y, y' on f2: vertices e2 = 0, f2 = 1, y = 2, y' = 3.
Graph fig1_g2();
/// fig1_g1 with a loop at e1.
Graph fig2_g1();
/// fig1_g2 with a loop at e2.
Graph fig2_g2();

/// Path on two vertices rooted at vertex 0.
Graph edge();
/// One vertex, no edges.
Graph isolated();
/// One vertex carrying a loop.
Graph loop();

}  // namespace ccomb::fixtures

#endif  // CCOMB_FIXTURES_HPP
