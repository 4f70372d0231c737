#include "dedekind/report.hpp"

namespace dedekind {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::reported_only:
      return "reported-only";
  }
  return "fail";
}

}  // namespace dedekind
