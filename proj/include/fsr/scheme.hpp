// Scheme families and parameter presets.
//
// SR2  : fluxes of reconstructed solutions (second order; Fromm, YH)
// FSR  : direct flux reconstruction from stored flux-tensor derivatives
// CFSR : flux derivatives by the chain rule from solution derivatives
// QFSR : quadratic flux expansion in the reconstructed solution difference
#pragma once

#include <string>
#include <vector>

#include "fsr/errors.hpp"

namespace fsr {

enum class Family { SR2, FSR, CFSR, QFSR };
enum class ReconVar { Primitive, Parameter };

struct SchemeConfig {
    std::string name = "custom";
    Family family = Family::SR2;
    int order = 2; // nominal order tag

    double kappa = 0.0;   // solution reconstruction
    double kappa3 = 0.0;  // cubic solution term
    double theta = 1.0 / 3.0;  // direct/chain flux reconstruction
    double theta3 = 0.0;       // cubic flux term
    double theta2 = 2.0 / 3.0; // quadratic flux term
    double aq5 = 0.0, bq5 = 0.0, cq5 = 0.0; // QFSR5 extra terms

    ReconVar recon_var = ReconVar::Primitive;
    bool dissipation = true;

    bool need_solution_hessian() const {
        return kappa3 != 0.0 || (family == Family::QFSR && (bq5 != 0.0 || cq5 != 0.0));
    }
    bool need_flux_fields() const { return family == Family::FSR; }
    bool need_flux_hessian() const { return family == Family::FSR && theta3 != 0.0; }

    static const std::vector<std::string>& preset_names() {
        static const std::vector<std::string> names = {"fromm",  "yh",    "fsr3",  "fsr4",
                                                       "fsr5",   "cfsr3", "cfsr4", "cfsr5",
                                                       "qfsr3",  "qfsr4", "qfsr5", "qfsr5z"};
        return names;
    }

    static SchemeConfig preset(const std::string& name) {
        SchemeConfig c;
        c.name = name;
        const double third = 1.0 / 3.0;
        if (name == "fromm") {
            c.family = Family::SR2;
            c.order = 2;
            c.kappa = 0.0;
            c.kappa3 = 0.0;
        } else if (name == "yh") {
            c.family = Family::SR2;
            c.order = 2;
            c.kappa = third;
            c.kappa3 = -2.0 / 3.0;
        } else if (name == "fsr3" || name == "fsr4" || name == "fsr5" || name == "cfsr3" ||
                   name == "cfsr4" || name == "cfsr5") {
            c.family = name[0] == 'c' ? Family::CFSR : Family::FSR;
            c.order = name.back() - '0';
            c.kappa = 0.5;
            c.kappa3 = (c.order >= 4) ? c.kappa - 1.0 : 0.0;
            c.theta = third;
            c.theta3 = (c.order == 5) ? -8.0 / 15.0 : 0.0;
        } else if (name == "qfsr3" || name == "qfsr4" || name == "qfsr5" || name == "qfsr5z") {
            c.family = Family::QFSR;
            c.order = name[4] - '0';
            c.kappa = third;
            c.kappa3 = (c.order >= 4) ? c.kappa - 1.0 : 0.0;
            c.theta2 = 2.0 / 3.0;
            if (c.order == 5) {
                c.aq5 = 2.0 / 15.0;
                c.bq5 = 16.0 / 45.0;
                c.cq5 = 4.0 / 5.0;
            }
            if (name == "qfsr5z") c.recon_var = ReconVar::Parameter;
        } else {
            std::string msg = "unknown scheme '" + name + "'; valid names:";
            for (const auto& s : preset_names()) msg += " " + s;
            throw InvalidParameter(msg);
        }
        return c;
    }
};

} // namespace fsr
