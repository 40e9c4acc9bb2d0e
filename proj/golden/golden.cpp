#include "golden.hpp"

#include <cmath>
#include <stdexcept>

namespace golden {

// ---------------------------------------------------------------------------
// Hat profile with alpha(x) = x^2 / (x^2 + 1)
// ---------------------------------------------------------------------------

Point a1_state(double xi, double t) {
    Point p;
    // H is constant in time.
    if (xi <= -1.0)
        p.H = 0.0;
    else if (xi <= 3.0)
        p.H = 0.5 * (xi + 1.0);
    else
        p.H = 2.0;
    if (t < 2.0) {
        if (xi <= -1.0) {
            p.y = xi - 0.25 * t * t;
            p.U = -0.5 * t;
        } else if (xi <= 1.0) {
            p.y = 0.5 * (xi - 1.0) + 0.5 * (xi + 1.0) * t + 0.125 * (xi - 1.0) * t * t;
            p.U = 0.5 * (xi + 1.0) + 0.25 * (xi - 1.0) * t;
        } else if (xi <= 3.0) {
            p.y = 0.5 * (xi - 1.0) - 0.5 * (xi - 3.0) * t + 0.125 * (xi - 1.0) * t * t;
            p.U = -0.5 * (xi - 3.0) + 0.25 * (xi - 1.0) * t;
        } else {
            p.y = xi - 2.0 + 0.25 * t * t;
            p.U = 0.5 * t;
        }
        p.V = p.H;
    } else {
        if (xi <= -1.0) {
            p.y = -(3.0 / 20.0) * t * t - (2.0 / 5.0) * t + xi + 2.0 / 5.0;
            p.U = -(3.0 / 10.0) * t - 2.0 / 5.0;
            p.V = 0.0;
        } else if (xi <= 1.0) {
            p.y = 0.5 * (xi - 0.2) + 0.5 * (xi + 0.2) * t + 0.125 * (xi - 0.2) * t * t;
            p.U = 0.5 * (xi + 0.2) + 0.25 * (xi - 0.2) * t;
            p.V = 0.5 * (xi + 1.0);
        } else if (xi <= 3.0) {
            p.y = 0.1 * (xi + 3.0) - 0.1 * (xi - 7.0) * t + 0.025 * (xi + 3.0) * t * t;
            p.U = -0.1 * (xi - 7.0) + 0.05 * (xi + 3.0) * t;
            p.V = (xi + 9.0) / 10.0;
        } else {
            p.y = (3.0 / 20.0) * t * t + (2.0 / 5.0) * t + xi - 12.0 / 5.0;
            p.U = (3.0 / 10.0) * t + 2.0 / 5.0;
            p.V = 6.0 / 5.0;
        }
    }
    return p;
}

double a1_u(double x, double t) {
    if (t < 2.0) {
        double xl = -0.25 * t * t - 1.0;
        double xr = 0.25 * t * t + 1.0;
        if (x <= xl) return -0.5 * t;
        if (x <= t) return (x - 0.5 * t + 1.0) / (1.0 + 0.5 * t);
        if (x <= xr) return (-x + 0.5 * t + 1.0) / (1.0 - 0.5 * t);
        return 0.5 * t;
    }
    double x1 = -(3.0 / 20.0) * t * t - (2.0 / 5.0) * t - 3.0 / 5.0;
    double x2 = 0.1 * t * t + (3.0 / 5.0) * t + 2.0 / 5.0;
    double x3 = (3.0 / 20.0) * t * t + (2.0 / 5.0) * t + 3.0 / 5.0;
    if (x <= x1) return -(3.0 / 10.0) * t - 2.0 / 5.0;
    if (x <= x2) return (x + 0.2 * (1.0 - 0.5 * t)) / (1.0 + 0.5 * t);
    if (x <= x3) return (x - 0.5 * t - 1.0) / (0.5 * t - 1.0);
    return (3.0 / 10.0) * t + 2.0 / 5.0;
}

double a1_nu_extra(double x, double t) {
    if (t <= 2.0) return 0.0;
    double x2 = 0.1 * t * t + (3.0 / 5.0) * t + 2.0 / 5.0;
    double x3 = (3.0 / 20.0) * t * t + (2.0 / 5.0) * t + 3.0 / 5.0;
    if (x < x2 || x > x3) return 0.0;
    double s = 0.5 * t - 1.0;
    return 4.0 / (s * s);
}

double a1_mu_total(double t) { return t < 2.0 ? 2.0 : 6.0 / 5.0; }

// ---------------------------------------------------------------------------
// Profile with a density jump (valid for 0 <= t < 2)
// ---------------------------------------------------------------------------

double intro_u(double x, double t) {
    double a = 1.0 - 0.5 * t;
    double xr = 0.25 * t * t + 1.0;
    if (x <= -a * a) return a;
    if (x <= 0.0) return -x / a;
    if (x <= xr) return t * x / (0.5 * t * t + 2.0);
    return 0.5 * t;
}

double intro_rho(double x, double t) {
    double xr = 0.25 * t * t + 1.0;
    if (x <= 0.0 || x > xr) return 0.0;
    return 1.0 / (0.25 * t * t + 1.0);
}

// ---------------------------------------------------------------------------
// eps-perturbed pair, constant alpha
// ---------------------------------------------------------------------------

Point a2_X(double xi, double t, double eps, double al) {
    Point p;
    if (xi <= -1.0)
        p.H = 0.0;
    else if (xi <= 1.0 + 2.0 * eps)
        p.H = 0.5 * (xi + 1.0);
    else
        p.H = 1.0 + eps;
    if (t < 2.0) {
        if (xi <= -1.0) {
            p.y = xi - 0.125 * (1.0 + eps) * t * t;
            p.U = -0.25 * (1.0 + eps) * t;
        } else if (xi <= 1.0) {
            p.y = 0.5 * (xi - 1.0) + 0.5 * (xi + 1.0) * t + 0.125 * (xi - eps) * t * t;
            p.U = 0.5 * (xi + 1.0) + 0.25 * (xi - eps) * t;
        } else if (xi <= 1.0 + 2.0 * eps) {
            p.y = 0.5 * (xi - 1.0) - 0.5 * (xi - 3.0) * t + 0.125 * (xi - eps) * t * t;
            p.U = -0.5 * (xi - 3.0) + 0.25 * (xi - eps) * t;
        } else {
            p.y = xi - 1.0 - eps + (1.0 - eps) * t + 0.125 * (1.0 + eps) * t * t;
            p.U = 1.0 - eps + 0.25 * (1.0 + eps) * t;
        }
        p.V = p.H;
    } else {
        double b = 1.0 - al;
        if (xi <= -1.0) {
            p.y = xi + 0.5 * al * eps - 0.5 * al * eps * t -
                  0.125 * (1.0 + b * eps) * t * t;
            p.U = -0.5 * al * eps - 0.25 * (1.0 + b * eps) * t;
            p.V = 0.0;
        } else if (xi <= 1.0) {
            p.y = 0.5 * (xi - 1.0) + 0.5 * al * eps + 0.5 * (xi + 1.0 - al * eps) * t +
                  0.125 * (xi - b * eps) * t * t;
            p.U = 0.5 * (xi + 1.0 - al * eps) + 0.25 * (xi - b * eps) * t;
            p.V = 0.5 * (xi + 1.0);
        } else if (xi <= 1.0 + 2.0 * eps) {
            p.y = 0.5 * b * (xi - 1.0) + 0.5 * al * eps +
                  (-0.5 * b * (xi - 1.0) + 1.0 - 0.5 * al * eps) * t +
                  0.125 * (b * (xi - 1.0 - eps) + 1.0) * t * t;
            p.U = -0.5 * b * (xi - 1.0) + 1.0 - 0.5 * al * eps +
                  0.25 * (b * (xi - 1.0 - eps) + 1.0) * t;
            p.V = 0.5 * b * xi + 0.5 * (1.0 + al);
        } else {
            p.y = xi - 1.0 - eps - 0.5 * al * eps + (1.0 - eps + 0.5 * al * eps) * t +
                  0.125 * (1.0 + b * eps) * t * t;
            p.U = 1.0 - eps + 0.5 * al * eps + 0.25 * (1.0 + b * eps) * t;
            p.V = 1.0 + b * eps;
        }
    }
    return p;
}

Point a2_Xbar(double xi, double t, double eps, double /*al*/) {
    Point p;
    if (xi <= -1.0)
        p.H = 0.0;
    else if (xi <= 1.0 + 2.0 * eps)
        p.H = 0.5 * (xi + 1.0);
    else
        p.H = 1.0 + eps;
    if (xi <= -1.0) {
        p.y = xi - 2.0 * eps * t - 0.125 * (1.0 + eps) * t * t;
        p.U = -2.0 * eps - 0.25 * (1.0 + eps) * t;
    } else if (xi <= 1.0 + 2.0 * eps) {
        p.y = 0.5 * (xi - 1.0) + 0.5 * (xi + 1.0 - 4.0 * eps) * t +
              0.125 * (xi - eps) * t * t;
        p.U = 0.5 * (xi + 1.0 - 4.0 * eps) + 0.25 * (xi - eps) * t;
    } else {
        p.y = xi - 1.0 - eps + (1.0 - eps) * t + 0.125 * (1.0 + eps) * t * t;
        p.U = 1.0 - eps + 0.25 * (1.0 + eps) * t;
    }
    p.V = p.H;
    return p;
}

A2Norms a2_norms(double eps, double al, double t) {
    A2Norms n;
    double s = std::sqrt(2.0 * eps);
    if (t < 2.0) {
        n.sup_y = 2.0 * eps * t;
        n.sup_U = 2.0 * eps;
        n.l2_yxi = s * t;
        n.l2_Uxi = s;
        n.l2_g = s * (t + 0.5 * al);
    } else {
        double q = t - 2.0;
        n.sup_y = eps * (2.0 * t + 0.125 * al * q * q);
        n.sup_U = 2.0 * eps + 0.25 * al * eps * q;
        n.l2_yxi = s * (t + 0.125 * al * q * q);
        n.l2_Uxi = s * (1.0 + 0.25 * al * q);
        n.l2_Vxi = s * 0.5 * al;
        n.l2_g = s * (0.5 * al + t + 0.125 * al * q * q);
    }
    n.dtilde = n.sup_y + n.sup_U + n.l1_Hxi +
               (n.l2_yxi + n.l2_Uxi + n.l2_Hxi + n.l2_r) + n.l2_g + n.l2_g2 + n.l2_g3;
    return n;
}

// ---------------------------------------------------------------------------
// Two-breaking-times profile
// ---------------------------------------------------------------------------

double a3_alpha(double x) {
    if (x <= 0.0) return 0.0;
    if (x <= 3.0) return 0.25 * x;
    return 0.75;
}

static double a3_H0(double xi) {
    if (xi <= -1.0) return 0.0;
    if (xi <= 1.0) return 0.5 * (xi + 1.0);
    if (xi <= 3.5) return 0.2 * (xi + 4.0);
    return 1.5;
}

Point a3_X0(double xi) {
    Point p;
    p.H = a3_H0(xi);
    p.V = p.H;
    if (xi <= -1.0) {
        p.y = xi;
        p.U = 1.0;
    } else if (xi <= 1.0) {
        p.y = 0.5 * (xi - 1.0);
        p.U = -0.5 * (xi - 1.0);
    } else if (xi <= 3.5) {
        p.y = 0.8 * (xi - 1.0);
        p.U = -0.4 * (xi - 1.0);
    } else {
        p.y = xi - 1.5;
        p.U = -1.0;
    }
    return p;
}

static Point a3_X2(double xi, double t) {
    Point p;
    p.H = a3_H0(xi);
    if (t < 4.0) {
        p.V = p.H;
        if (xi <= -1.0) {
            p.y = xi + t - (3.0 / 16.0) * t * t;
            p.U = 1.0 - (3.0 / 8.0) * t;
        } else if (xi <= 1.0) {
            p.y = 0.5 * (xi - 1.0) - 0.5 * (xi - 1.0) * t + 0.125 * (xi - 0.5) * t * t;
            p.U = -0.5 * (xi - 1.0) + 0.25 * (xi - 0.5) * t;
        } else if (xi <= 3.5) {
            p.y = 0.8 * (xi - 1.0) - 0.4 * (xi - 1.0) * t + 0.05 * (xi + 0.25) * t * t;
            p.U = -0.4 * (xi - 1.0) + 0.1 * (xi + 0.25) * t;
        } else {
            p.y = xi - 1.5 - t + (3.0 / 16.0) * t * t;
            p.U = -1.0 + (3.0 / 8.0) * t;
        }
    } else {
        double q = t - 4.0;
        if (xi <= -1.0) {
            p.y = xi + 1.0 - 0.5 * q - (11.0 / 64.0) * q * q;
            p.U = -0.5 - (11.0 / 32.0) * q;
            p.V = 0.0;
        } else if (xi <= 1.0) {
            p.y = 0.5 * (xi + 1.0) + 0.5 * xi * q + 0.125 * (xi - 3.0 / 8.0) * q * q;
            p.U = 0.5 * xi + 0.25 * (xi - 3.0 / 8.0) * q;
            p.V = 0.5 * (xi + 1.0);
        } else if (xi <= 3.5) {
            double c = 37.0 / 8.0 + 12.0 * xi - xi * xi;
            p.y = 1.0 + 0.5 * q + (1.0 / 200.0) * c * q * q;
            p.U = 0.5 + (1.0 / 100.0) * c * q;
            p.V = (1.0 / 50.0) * (39.0 + 12.0 * xi - xi * xi);
        } else {
            p.y = xi - 2.5 + 0.5 * q + (11.0 / 64.0) * q * q;
            p.U = 0.5 + (11.0 / 32.0) * q;
            p.V = 11.0 / 8.0;
        }
    }
    return p;
}

static Point a3_X3(double xi, double t) {
    if (t < 2.0) return a3_X2(xi, t);
    Point p;
    p.H = a3_H0(xi);
    if (t < 4.0) {
        double q = t - 2.0;
        if (xi <= -1.0) {
            p.y = xi + 1.25 + 0.25 * q - (23.0 / 128.0) * q * q;
            p.U = 0.25 - (23.0 / 64.0) * q;
            p.V = 0.0;
        } else if (xi <= 1.0) {
            p.y = 0.25 + 0.25 * q + (1.0 / 128.0) * (15.0 * xi - 8.0) * q * q;
            p.U = 0.25 + 0.125 * ((15.0 / 8.0) * xi - 1.0) * q;
            p.V = (15.0 / 32.0) * (xi + 1.0);
        } else if (xi <= 3.5) {
            p.y = 0.2 * (xi + 0.25) - 0.2 * (xi - 2.25) * q +
                  0.05 * (xi + 3.0 / 32.0) * q * q;
            p.U = -0.2 * (xi - 2.25) + 0.1 * (xi + 3.0 / 32.0) * q;
            p.V = 0.2 * xi + 59.0 / 80.0;
        } else {
            p.y = xi - 2.75 - 0.25 * q + (23.0 / 128.0) * q * q;
            p.U = -0.25 + (23.0 / 64.0) * q;
            p.V = 23.0 / 16.0;
        }
    } else {
        double q = t - 4.0;
        if (xi <= -1.0) {
            p.y = xi + 33.0 / 32.0 - (15.0 / 32.0) * q - (21.0 / 128.0) * q * q;
            p.U = -15.0 / 32.0 - (21.0 / 64.0) * q;
            p.V = 0.0;
        } else if (xi <= 1.0) {
            p.y = (15.0 / 32.0) * xi + 0.5 + (15.0 / 32.0) * xi * q +
                  (1.0 / 128.0) * (15.0 * xi - 6.0) * q * q;
            p.U = (15.0 / 32.0) * xi + (1.0 / 64.0) * (15.0 * xi - 6.0) * q;
            p.V = (15.0 / 32.0) * (xi + 1.0);
        } else if (xi <= 3.5) {
            p.y = 31.0 / 32.0 + (15.0 / 32.0) * q + (3.0 / 80.0) * (xi + 7.0 / 8.0) * q * q;
            p.U = 15.0 / 32.0 + (3.0 / 40.0) * (xi + 7.0 / 8.0) * q;
            p.V = (3.0 / 20.0) * (xi + 21.0 / 4.0);
        } else {
            p.y = xi - 81.0 / 32.0 + (15.0 / 32.0) * q + (21.0 / 128.0) * q * q;
            p.U = 15.0 / 32.0 + (21.0 / 64.0) * q;
            p.V = 21.0 / 16.0;
        }
    }
    return p;
}

static Point a3_X4(double xi, double t) {
    if (t < 4.0) return a3_X3(xi, t);
    Point p;
    p.H = a3_H0(xi);
    double q = t - 4.0;
    if (xi <= -1.0) {
        p.y = xi + 33.0 / 32.0 - (15.0 / 32.0) * q - (337.0 / 2048.0) * q * q;
        p.U = -15.0 / 32.0 - (337.0 / 1024.0) * q;
        p.V = 0.0;
    } else if (xi <= 1.0) {
        p.y = (15.0 / 32.0) * xi + 0.5 + (15.0 / 32.0) * xi * q +
              (1.0 / 2048.0) * (240.0 * xi - 97.0) * q * q;
        p.U = (15.0 / 32.0) * xi + (1.0 / 1024.0) * (240.0 * xi - 97.0) * q;
        p.V = (15.0 / 32.0) * (xi + 1.0);
    } else if (xi <= 3.5) {
        p.y = 31.0 / 32.0 + (15.0 / 32.0) * q + (1.0 / 10240.0) * (388.0 * xi + 327.0) * q * q;
        p.U = 15.0 / 32.0 + (1.0 / 5120.0) * (388.0 * xi + 327.0) * q;
        p.V = (1.0 / 640.0) * (97.0 * xi + 503.0);
    } else {
        p.y = xi - 81.0 / 32.0 + (15.0 / 32.0) * q + (337.0 / 2048.0) * q * q;
        p.U = 15.0 / 32.0 + (337.0 / 1024.0) * q;
        p.V = 337.0 / 256.0;
    }
    return p;
}

Point a3_iterate(int n, double xi, double t) {
    switch (n) {
        case 1: return a3_X0(xi);
        case 2: return a3_X2(xi, t);
        case 3: return a3_X3(xi, t);
        default: return a3_X4(xi, t);
    }
}

double a3_weight(int n, int cell) {
    if (cell == 0) return n <= 1 ? 0.0 : 1.0 / 16.0;
    if (n <= 2) return 1.0 / 4.0;  // n = 1 gives the cell-midpoint value 1/4 too
    return 31.0 / 128.0;
}

Point a3_solution(double xi, double t) { return a3_X4(xi, t); }

// ---------------------------------------------------------------------------
// Degenerate dissipation profile
// ---------------------------------------------------------------------------

double a4_alpha(double x) {
    if (x <= 0.0) return 0.0;
    if (x <= 0.25) return 4.0 * x;
    if (x <= 0.5) return 1.5 - 2.0 * x;
    return 0.5;
}

Point a4_S4(double xi) {
    Point p;
    p.H = a3_H0(xi);
    p.U = 0.0;
    if (xi <= -1.0)
        p.y = xi + 1.5;
    else if (xi <= 3.5)
        p.y = 0.5;
    else
        p.y = xi - 3.0;
    if (xi <= 1.0)
        p.V = 0.0;
    else if (xi <= 3.5)
        p.V = 0.1 * (xi - 1.0);
    else
        p.V = 0.25;
    return p;
}

Point a4_pi(double xi) {
    Point p;
    p.U = 0.0;
    if (xi <= 0.5) {
        p.y = xi;
        p.H = 0.0;
    } else if (xi <= 2.0) {
        p.y = 0.5;
        p.H = xi - 0.5;
    } else {
        p.y = xi - 1.5;
        p.H = 1.5;
    }
    if (xi <= 1.5)
        p.V = 0.0;
    else if (xi <= 2.0)
        p.V = 0.5 * xi - 0.75;
    else
        p.V = 0.25;
    return p;
}

Point a4_LM(double xi) {
    Point p = a4_pi(xi);
    if (xi <= 0.5)
        p.V = 0.0;
    else if (xi <= 2.0)
        p.V = (1.0 / 6.0) * xi - 1.0 / 12.0;
    else
        p.V = 0.25;
    return p;
}

}  // namespace golden
