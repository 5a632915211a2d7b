#ifndef LAME_ERRORS_HPP
#define LAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lame {

/// Expansion point a coincides with b or c; the series about z = x - a
/// does not exist.
class degenerate_singularity_error : public std::domain_error {
public:
    explicit degenerate_singularity_error(const std::string& what)
        : std::domain_error(what) {}
};

/// Characteristic equation r^2 - A r - B = 0 has no real roots
/// (A^2 + 4B < 0), so the distinct-moduli hypothesis cannot hold.
class complex_roots_error : public std::domain_error {
public:
    explicit complex_roots_error(const std::string& what)
        : std::domain_error(what) {}
};

/// The two characteristic roots differ but share a modulus; the
/// coefficient-ratio limit does not exist.
class equal_moduli_error : public std::domain_error {
public:
    explicit equal_moduli_error(const std::string& what)
        : std::domain_error(what) {}
};

/// A tail coefficient needed by a ratio diagnostic is exactly zero.
class zero_coefficient_error : public std::runtime_error {
public:
    explicit zero_coefficient_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Generating function evaluated at a zero of its denominator.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what)
        : std::domain_error(what) {}
};

/// An output file could not be opened or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace lame

#endif // LAME_ERRORS_HPP
