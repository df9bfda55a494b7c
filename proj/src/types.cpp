#include "polyexp/types.hpp"

namespace polyexp {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::closed_form: return "closed_form";
        case Method::incgamma: return "incgamma";
        case Method::ein: return "ein";
        case Method::recursion: return "recursion";
        case Method::hankel: return "hankel";
        case Method::taylor_shift: return "taylor_shift";
        case Method::asymptotic: return "asymptotic";
        case Method::mellin_integral: return "mellin_integral";
        case Method::quadrature: return "quadrature";
    }
    return "unknown";
}

std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::domain: return "domain";
        case ErrorKind::pole: return "pole";
        case ErrorKind::convergence: return "convergence";
        case ErrorKind::parse: return "parse";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::unsupported: return "unsupported";
        case ErrorKind::ill_conditioned: return "ill_conditioned";
        case ErrorKind::overflow: return "overflow";
        case ErrorKind::contour: return "contour";
    }
    return "unknown";
}

}  // namespace polyexp
