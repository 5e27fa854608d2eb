#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wayfinder {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// closest_point_on_ellipse called with a point inside the ellipse.
struct PointInsideEllipseError : Error {
  using Error::Error;
};

// No path exists between the query point and any target.
struct UnreachableError : Error {
  using Error::Error;
};

// locate_room found no room containing the point.
struct OutsideAllRoomsError : Error {
  using Error::Error;
};

// pop_entry on an empty traversal stack.
struct EmptyStackError : Error {
  using Error::Error;
};

// The agent has no forward candidate and nothing left to backtrack through.
struct NoRouteFoundError : Error {
  using Error::Error;
};

// Scenario text is not syntactically valid. The message carries the
// line/column reported by the JSON parser.
struct ParseError : Error {
  using Error::Error;
};

// A model invariant is violated. Always names the offending entity.
class ValidationError : public Error {
 public:
  ValidationError(std::string entity, const std::string& reason)
      : Error(std::string(entity) + ": " + reason), entity_(std::move(entity)) {}

  const std::string& entity() const noexcept { return entity_; }

 private:
  std::string entity_;
};

}  // namespace wayfinder
