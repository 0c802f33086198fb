#include "curvkit/cli.hpp"

#include <ostream>

namespace curvkit {

int cli_run(const std::vector<std::string>&, std::ostream&, std::ostream& err) {
  err << "not yet implemented\n";
  return 2;
}

}  // namespace curvkit
