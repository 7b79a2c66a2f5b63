#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hardy {

using Index = Eigen::Index;

template <typename Real>
using VectorC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
using MatrixR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
inline constexpr Real pi_v = Real(3.14159265358979323846L);

// Contract violations carry their own type so callers can catch precisely.
struct ZeroConstantTerm : std::invalid_argument {
    ZeroConstantTerm() : std::invalid_argument("series has zero constant term") {}
};

struct ComplexData : std::invalid_argument {
    ComplexData() : std::invalid_argument("boundary samples have a nonzero imaginary part") {}
};

struct BadOrders : std::invalid_argument {
    BadOrders() : std::invalid_argument("requires 0 <= k < n") {}
};

struct SingularSystem : std::runtime_error {
    SingularSystem() : std::runtime_error("separation system is singular (coincident gammas)") {}
};

struct BadExponent : std::invalid_argument {
    explicit BadExponent(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroFunction : std::invalid_argument {
    ZeroFunction() : std::invalid_argument("input function is identically zero") {}
};

struct BadParams : std::invalid_argument {
    explicit BadParams(const std::string& what) : std::invalid_argument(what) {}
};

struct SymbolNotVanishing : std::invalid_argument {
    SymbolNotVanishing() : std::invalid_argument("symbol must satisfy g(0) = g'(0) = 0") {}
};

// Default seed for every randomized run ("HARDY" in ASCII).
inline constexpr std::uint64_t kDefaultSeed = 0x4841524459ULL;

// SplitMix64: tiny deterministic generator, identical output on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform on the closed unit disc (area measure)
    template <typename Real = double>
    std::complex<Real> unit_disc() {
        const Real r = std::sqrt(static_cast<Real>(uniform()));
        const Real t = Real(2) * pi_v<Real> * static_cast<Real>(uniform());
        return std::polar(r, t);
    }

    template <typename Real = double>
    std::complex<Real> phase() {
        return std::polar(Real(1), Real(2) * pi_v<Real> * static_cast<Real>(uniform()));
    }

  private:
    std::uint64_t state_;
};

}  // namespace hardy
