#pragma once

#include <stdexcept>
#include <string>

namespace swc {

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Point on a coordinate hyperplane / potential singularity.
class singular_point_error : public domain_error {
public:
  explicit singular_point_error(const std::string& msg) : domain_error(msg) {}
};

// A series or iteration failed to reach its tolerance within budget.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested at (or too near) a pole.
class pole_error : public std::runtime_error {
public:
  explicit pole_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace swc
