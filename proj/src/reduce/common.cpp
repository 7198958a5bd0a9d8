#include "detail.hpp"

#include <numeric>

namespace eksr {

const char* to_string(ReductionKind kind) {
    switch (kind) {
    case ReductionKind::Pad: return "pad";
    case ReductionKind::Horn: return "horn";
    case ReductionKind::Width: return "width";
    case ReductionKind::Np3Raw: return "np3-raw";
    case ReductionKind::Np3: return "np3";
    case ReductionKind::Np4: return "np4";
    case ReductionKind::Npk: return "npk";
    }
    return "unknown";
}

namespace detail {

ReductionOutput make_output(ReductionKind kind, Instance instance, Formula source) {
    return ReductionOutput{kind, std::move(instance), std::nullopt, {}, {}, std::move(source), std::nullopt, {}};
}

std::vector<int> identity_map(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 1);
    return m;
}

}  // namespace detail
}  // namespace eksr
