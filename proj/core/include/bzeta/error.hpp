#ifndef BZETA_ERROR_HPP
#define BZETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bzeta {

enum class Errc {
    domain,          // argument outside the mathematical domain (e.g. nu <= -1)
    bad_argument,    // structurally invalid argument (e.g. pole index not admissible)
    nonconvergence,  // a term budget or bracket was exhausted
    removed_point,   // representation undefined at a removed singular point
    pole,            // evaluation requested at a pole
    io,              // cache file problems
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace bzeta

#endif
