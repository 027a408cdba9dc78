// Small hand-built networks shared by the tests.
#pragma once

#include "reinet/reinet.hpp"

namespace fx {

using namespace reinet;

// Two inhibitory nodes in a mutual loop with autoregulation, fed by node 3.
inline ReiNetwork looped_inhibitory_pair() {
  return ReiNetwork(parse_types("IIE"), SquareMatrix{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}},
                    SquareMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
}
inline ReiNetwork inhibitory_pair() {
  return ReiNetwork(parse_types("IIE"), SquareMatrix{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}},
                    SquareMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
}
// crp, tam, IsrR.
inline ReiNetwork fiber_motif() {
  return ReiNetwork(parse_types("EEI"), SquareMatrix{{0, 0, 0}, {1, 0, 0}, {1, 0, 0}},
                    SquareMatrix{{0, 0, 0}, {0, 0, 1}, {0, 0, 1}});
}
inline ReiNetwork fiber_motif_reduced() {
  return ReiNetwork(parse_types("EEI"), SquareMatrix{{0, 0, 0}, {1, 0, 0}, {1, 0, 0}},
                    SquareMatrix{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}});
}
inline ReiNetwork split_target() {
  return ReiNetwork(parse_types("EEI"), SquareMatrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}},
                    SquareMatrix{{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
}
inline ReiNetwork split_target_quotient() {
  return ReiNetwork(parse_types("EI"), SquareMatrix{{0, 0}, {1, 0}}, SquareMatrix{{0, 1}, {0, 0}});
}

}  // namespace fx
