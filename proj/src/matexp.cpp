// matexp.cpp - Pade scaling-and-squaring matrix exponential (Higham 2005 degrees 3..13)

#include "eqo/matexp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "eqo/errors.hpp"

namespace eqo::matexp {

void require_finite(const ComplexMatrix& a, const char* context) {
    if (!a.allFinite()) {
        throw NumericError(std::string(context) + ": non-finite matrix entries");
    }
}

double one_norm(const ComplexMatrix& a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: inner dimensions disagree, " +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
    }
    require_finite(a, "mat_mul lhs");
    require_finite(b, "mat_mul rhs");
    ComplexMatrix c = a * b;
    require_finite(c, "mat_mul result");
    return c;
}

namespace {

// 1-norm bounds under which the degree-m diagonal Pade approximant reaches
// unit roundoff for exp (Higham, SIAM J. Matrix Anal. Appl. 26(4), 2005).
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

// Solve (V - U) X = (V + U) for the Pade ratio.
ComplexMatrix pade_ratio(const ComplexMatrix& u, const ComplexMatrix& v) {
    ComplexMatrix p = v + u;
    ComplexMatrix q = v - u;
    return Eigen::PartialPivLU<ComplexMatrix>(q).solve(p);
}

ComplexMatrix pade_small(const ComplexMatrix& a, const ComplexMatrix& a2, int degree) {
    const Eigen::Index n = a.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    ComplexMatrix u, v;
    switch (degree) {
    case 3: {
        static constexpr std::array<double, 4> b{120.0, 60.0, 12.0, 1.0};
        u = a * (b[3] * a2 + b[1] * id);
        v = b[2] * a2 + b[0] * id;
        break;
    }
    case 5: {
        static constexpr std::array<double, 6> b{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
        ComplexMatrix a4 = a2 * a2;
        u = a * (b[5] * a4 + b[3] * a2 + b[1] * id);
        v = b[4] * a4 + b[2] * a2 + b[0] * id;
        break;
    }
    case 7: {
        static constexpr std::array<double, 8> b{17297280.0, 8648640.0, 1995840.0, 277200.0,
                                                 25200.0,    1512.0,    56.0,      1.0};
        ComplexMatrix a4 = a2 * a2;
        ComplexMatrix a6 = a4 * a2;
        u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
        v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
        break;
    }
    default: {
        static constexpr std::array<double, 10> b{17643225600.0, 8821612800.0, 2075673600.0,
                                                  302702400.0,   30270240.0,   2162160.0,
                                                  110880.0,      3960.0,       90.0,
                                                  1.0};
        ComplexMatrix a4 = a2 * a2;
        ComplexMatrix a6 = a4 * a2;
        ComplexMatrix a8 = a4 * a4;
        u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
        v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
        break;
    }
    }
    return pade_ratio(u, v);
}

ComplexMatrix pade13(const ComplexMatrix& a) {
    static constexpr std::array<double, 14> b{
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};
    const Eigen::Index n = a.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    ComplexMatrix a2 = a * a;
    ComplexMatrix a4 = a2 * a2;
    ComplexMatrix a6 = a4 * a2;
    ComplexMatrix u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
             b[1] * id);
    ComplexMatrix v =
        a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    return pade_ratio(u, v);
}

} // namespace

ComplexMatrix expm(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) {
        throw DimensionError("expm: matrix must be square, got " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()));
    }
    if (!(tol > 0.0) || tol > 1e-6) {
        throw DomainError("expm: tol must lie in (0, 1e-6], got " + std::to_string(tol));
    }
    require_finite(a, "expm input");

    const double norm = one_norm(a);
    ComplexMatrix result;
    if (norm <= kTheta9) {
        ComplexMatrix a2 = a * a;
        int degree = 9;
        if (norm <= kTheta3) {
            degree = 3;
        } else if (norm <= kTheta5) {
            degree = 5;
        } else if (norm <= kTheta7) {
            degree = 7;
        }
        result = pade_small(a, a2, degree);
    } else {
        int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
        ComplexMatrix scaled = a / std::pow(2.0, squarings);
        result = pade13(scaled);
        for (int i = 0; i < squarings; ++i) {
            result = result * result;
        }
    }
    require_finite(result, "expm result");
    return result;
}

} // namespace eqo::matexp
