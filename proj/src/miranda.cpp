#include "trig/miranda.hpp"

namespace trig {

std::string to_string(FiberType t) {
    switch (t) {
        case FiberType::etale: return "etale";
        case FiberType::node_like: return "node_like";
        case FiberType::cusp_like: return "cusp_like";
        case FiberType::triple_point: return "triple_point";
        case FiberType::non_gorenstein: return "non_gorenstein";
    }
    return "unknown";
}

} // namespace trig
