#pragma once

#include "domino/insertion.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace domino {

// Parse a whitespace-separated window such as "2 -4 -3 1".
SignedPermutation parse_signed_permutation(const std::string& text);

std::string format_window(const SignedPermutation& sigma);

struct RenderedTableau {
  std::vector<std::string> lines;

  std::string str() const;
};

// One line per diagram row; core squares print as 0, labels are padded to a
// common width.
RenderedTableau render_ascii(const DominoTableau& tableau);

nlohmann::json serialize(const DominoTableau& tableau);
nlohmann::json serialize(const TableauPair& pair);

// Both readers reject documents that do not describe a standard tableau.
DominoTableau deserialize_tableau(const nlohmann::json& doc);
TableauPair deserialize_pair(const nlohmann::json& doc);

}  // namespace domino
