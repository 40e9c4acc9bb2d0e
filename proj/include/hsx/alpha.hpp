#pragma once

#include <functional>
#include <vector>

#include "hsx/piecewise.hpp"

namespace hsx {

enum class AlphaClass { strictly_below_one, identically_one, invalid };

// Dissipation coefficient alpha: piecewise linear in x with clamped constant
// extension, Lipschitz constant = max |slope|, and a validity class.
struct AlphaFunction {
    PiecewiseLinear profile;
    double lipschitz = 0.0;
    AlphaClass cls = AlphaClass::strictly_below_one;

    double operator()(double x) const { return profile(x); }
};

// Validates 0 <= alpha <= 1 (values outside are rejected outright) and
// classifies.  The invalid class is constructible here but solvers accept it
// only behind an explicit override.
AlphaFunction make_alpha(PiecewiseLinear profile);
AlphaFunction alpha_constant(double c);
// Samples a smooth coefficient onto an explicit knot grid; the grid is part of
// the scenario so runs reproduce bit-for-bit.
AlphaFunction alpha_sample(const std::function<double(double)>& f,
                           const std::vector<double>& grid);

AlphaClass alpha_validate(const AlphaFunction& a);

const char* alpha_class_name(AlphaClass c);

}  // namespace hsx
