#include "eosvac/units.hpp"

namespace eosvac::units {

double thz_to_angular(double nu_thz) { return two_pi * nu_thz * 1e12; }

double angular_to_thz(double omega) { return omega / (two_pi * 1e12); }

double wavenumber_cm_to_angular(double k_cm) { return two_pi * c0 * k_cm * 100.0; }

double angular_to_wavenumber_cm(double omega) { return omega / (two_pi * c0 * 100.0); }

}  // namespace eosvac::units
