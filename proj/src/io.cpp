#include "domino/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace domino {

namespace {

int parse_integer(const std::string& token) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw Error("'" + token + "' is not an integer");
  }
}

const nlohmann::json& require_field(const nlohmann::json& doc,
                                    const char* name) {
  if (!doc.is_object() || !doc.contains(name))
    throw Error("document is missing the field '" + std::string(name) + "'");
  return doc.at(name);
}

int require_int(const nlohmann::json& value, const char* what) {
  if (!value.is_number_integer())
    throw Error("field '" + std::string(what) + "' must be an integer");
  return value.get<int>();
}

Square require_square(const nlohmann::json& value) {
  if (!value.is_array() || value.size() != 2)
    throw Error("a square must be a [row, column] pair");
  return {require_int(value[0], "row"), require_int(value[1], "column")};
}

}  // namespace

SignedPermutation parse_signed_permutation(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> window;
  std::string token;
  while (in >> token) window.push_back(parse_integer(token));
  return SignedPermutation::from_window(window);
}

std::string format_window(const SignedPermutation& sigma) {
  std::string out;
  for (int entry : sigma.window()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(entry);
  }
  return out;
}

std::string RenderedTableau::str() const {
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

RenderedTableau render_ascii(const DominoTableau& tableau) {
  const Shape& shape = tableau.shape();
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (int row = 1; row <= static_cast<int>(shape.rows().size()); ++row) {
    std::vector<std::string> line;
    for (int col = 1; col <= shape.row_length(row); ++col) {
      ExtendedLabel label = tableau.label_at(row, col);
      std::string text =
          label.is_finite() ? std::to_string(label.value()) : "0";
      width = std::max(width, text.size());
      line.push_back(std::move(text));
    }
    cells.push_back(std::move(line));
  }

  RenderedTableau rendered;
  for (const auto& row : cells) {
    std::string line;
    for (const std::string& text : row) {
      if (!line.empty()) line += ' ';
      line += std::string(width - text.size(), ' ');
      line += text;
    }
    rendered.lines.push_back(std::move(line));
  }
  return rendered;
}

nlohmann::json serialize(const DominoTableau& tableau) {
  nlohmann::json dominoes = nlohmann::json::array();
  for (const Domino& d : tableau.dominoes())
    dominoes.push_back(
        {{"label", d.label},
         {"squares", {{d.first.row, d.first.col}, {d.second.row, d.second.col}}}});
  return {{"rank", tableau.rank()},
          {"n", static_cast<int>(tableau.size())},
          {"dominoes", std::move(dominoes)}};
}

nlohmann::json serialize(const TableauPair& pair) {
  return {{"left", serialize(pair.left())}, {"right", serialize(pair.right())}};
}

DominoTableau deserialize_tableau(const nlohmann::json& doc) {
  int rank = require_int(require_field(doc, "rank"), "rank");
  int n = require_int(require_field(doc, "n"), "n");
  const nlohmann::json& entries = require_field(doc, "dominoes");
  if (!entries.is_array())
    throw Error("field 'dominoes' must be an array");

  std::vector<Domino> dominoes;
  for (const nlohmann::json& entry : entries) {
    int label = require_int(require_field(entry, "label"), "label");
    const nlohmann::json& squares = require_field(entry, "squares");
    if (!squares.is_array() || squares.size() != 2)
      throw Error("field 'squares' must list exactly two squares");
    dominoes.push_back(make_domino(label, require_square(squares[0]),
                                   require_square(squares[1])));
  }

  DominoTableau tableau = validate_tableau(rank, dominoes);
  if (static_cast<int>(tableau.size()) != n)
    throw Error("field 'n' does not match the number of dominoes");
  return tableau;
}

TableauPair deserialize_pair(const nlohmann::json& doc) {
  return TableauPair(deserialize_tableau(require_field(doc, "left")),
                     deserialize_tableau(require_field(doc, "right")));
}

}  // namespace domino
