#include "hsx/alpha.hpp"

#include <stdexcept>

namespace hsx {

AlphaFunction make_alpha(PiecewiseLinear profile) {
    double lo = pl_min_value(profile);
    double hi = pl_max_value(profile);
    if (lo < 0.0 || hi > 1.0)
        throw std::invalid_argument("make_alpha: alpha values must lie in [0,1]");
    AlphaFunction a;
    a.lipschitz = pl_max_abs_slope(profile);
    bool all_one = (lo == 1.0);
    if (hi < 1.0)
        a.cls = AlphaClass::strictly_below_one;
    else if (all_one)
        a.cls = AlphaClass::identically_one;
    else
        a.cls = AlphaClass::invalid;
    a.profile = std::move(profile);
    return a;
}

AlphaFunction alpha_constant(double c) { return make_alpha(make_const_pl(c)); }

AlphaFunction alpha_sample(const std::function<double(double)>& f,
                           const std::vector<double>& grid) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f(grid[i]);
    return make_alpha(make_pl(grid, v));
}

AlphaClass alpha_validate(const AlphaFunction& a) { return a.cls; }

const char* alpha_class_name(AlphaClass c) {
    switch (c) {
        case AlphaClass::strictly_below_one: return "strictly_below_one";
        case AlphaClass::identically_one: return "identically_one";
        default: return "invalid";
    }
}

}  // namespace hsx
