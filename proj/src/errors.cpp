#include "arrowgraph/errors.hpp"

namespace arrowgraph {

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : Error([&] {
        std::string msg = "syntax error at offset " + std::to_string(offset) + ": found " +
                          found + ", expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i) msg += i + 1 == expected.size() ? " or " : ", ";
          msg += expected[i];
        }
        return msg;
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace arrowgraph
