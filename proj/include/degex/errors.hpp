#ifndef DEGEX_ERRORS_HPP
#define DEGEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degex {

// Thrown when an exhaustive routine is asked to run beyond its hard size cap.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace degex

#endif
