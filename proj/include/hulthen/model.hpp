#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hulthen {

/// Spin alignment selecting the sign of the spin-orbit number kappa.
enum class Alignment { aligned, unaligned };

/// Physical parameters of the screened potential and the mass function,
/// in natural units (hbar = c = 1).
struct ModelParams {
    double Z;      ///< potential strength, > 0
    double alpha;  ///< screening parameter (inverse length), > 0
    double mu0;    ///< mass integration constant, >= 0

    ModelParams(double Z_, double alpha_, double mu0_) : Z(Z_), alpha(alpha_), mu0(mu0_) {
        if (!(Z > 0.0)) throw std::domain_error("ModelParams: Z must be > 0");
        if (!(alpha > 0.0)) throw std::domain_error("ModelParams: alpha must be > 0");
        if (!(mu0 >= 0.0)) throw std::domain_error("ModelParams: mu0 must be >= 0");
    }
};

/// Quantum numbers of a radial state. D is an integer spatial dimension by
/// default; the continuous_dimension constructor admits real D > 0 for
/// continuous-dimension scans.
class QuantumState {
  public:
    QuantumState(int n_r, int ell, int D, Alignment alignment)
        : n_r_(n_r), ell_(ell), D_(static_cast<double>(D)), alignment_(alignment), continuous_(false) {
        validate();
        if (D < 1) throw std::domain_error("QuantumState: D must be >= 1");
    }

    static QuantumState continuous_dimension(int n_r, int ell, double D, Alignment alignment) {
        QuantumState st;
        st.n_r_ = n_r;
        st.ell_ = ell;
        st.D_ = D;
        st.alignment_ = alignment;
        st.continuous_ = true;
        st.validate();
        if (!(D > 0.0)) throw std::domain_error("QuantumState: continuous D must be > 0");
        return st;
    }

    int n_r() const { return n_r_; }
    int ell() const { return ell_; }
    double dimension() const { return D_; }
    Alignment alignment() const { return alignment_; }
    bool continuous() const { return continuous_; }

    /// |kappa| = (2*ell + D - 1)/2
    double kappa_abs() const { return (2.0 * ell_ + D_ - 1.0) / 2.0; }

    /// Signed kappa: -|kappa| for aligned spin, +|kappa| for unaligned.
    double kappa() const { return alignment_ == Alignment::aligned ? -kappa_abs() : kappa_abs(); }

  private:
    QuantumState() = default;
    void validate() const {
        if (n_r_ < 0) throw std::domain_error("QuantumState: n_r must be >= 0");
        if (ell_ < 0) throw std::domain_error("QuantumState: ell must be >= 0");
    }

    int n_r_ = 0;
    int ell_ = 0;
    double D_ = 3.0;
    Alignment alignment_ = Alignment::unaligned;
    bool continuous_ = false;
};

enum class EnergyStatus { real, imaginary };
enum class Branch { plus, minus };
enum class EnergySource { dirac_eq23, coulomb_eq24, kg_eq30, kg_eq32, dirac_eq33, oracle };

/// Branch-tagged energy. When the discriminant of the source formula is
/// negative the status is imaginary, value is NaN and radicand records the
/// (negative) discriminant so threshold scans can see the sign flip.
struct EnergyResult {
    double value;
    double radicand;
    EnergyStatus status;
    Branch branch;
    EnergySource source;

    bool real() const { return status == EnergyStatus::real; }
};

/// Hulthen potential -Z*alpha*exp(-alpha r)/(1 - exp(-alpha r)).
double hulthen_potential(double r, const ModelParams& p);

/// Mass function mu0 + Z*alpha/(1 - exp(-alpha r)); satisfies dmu/dr = dV/dr.
double mass_function(double r, const ModelParams& p);

/// Exact centrifugal factor 1/r^2.
double centrifugal_exact(double r);

/// Exponential approximation alpha^2 exp(-alpha r)/(1 - exp(-alpha r))^2.
double centrifugal_approx(double r, double alpha);

/// Signed spin-orbit number of a state.
double kappa_of(const QuantumState& state);

/// Radial grid: log-spaced up to 1/alpha, linear from there to r_max.
/// Default r_max = 50/alpha, where exp(-alpha r) ~ 2e-22.
std::vector<double> make_radial_grid(double alpha, std::size_t n_points = 2000, double r_max_scale = 50.0);

}  // namespace hulthen
