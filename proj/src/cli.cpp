#include "domino/cli.hpp"

#include "domino/io.hpp"
#include "domino/rankmaps.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace domino {

namespace {

struct OutputOptions {
  std::string format = "ascii";
  std::string path;
};

void add_output_options(CLI::App* cmd, OutputOptions* options) {
  cmd->add_option("--format", options->format, "ascii or json")
      ->check(CLI::IsMember({"ascii", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", options->path,
                  "write to this file instead of stdout");
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void emit(const OutputOptions& options, const std::string& text,
          std::ostream& out) {
  if (options.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(options.path);
  if (!file) throw Error("cannot open '" + options.path + "'");
  file << text;
}

nlohmann::json parse_document(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::string show_pair(const TableauPair& pair, const std::string& format) {
  if (format == "json") return dump(serialize(pair));
  return "left:\n" + render_ascii(pair.left()).str() + "right:\n" +
         render_ascii(pair.right()).str();
}

std::string show_tableau(const DominoTableau& tableau,
                         const std::string& format) {
  if (format == "json") return dump(serialize(tableau));
  return render_ascii(tableau).str();
}

std::string show_square(const Square& square) {
  return "(" + std::to_string(square.row) + "," + std::to_string(square.col) +
         ")";
}

std::string show_cycle(const Cycle& cycle) {
  std::string out = "{";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cycle[i]);
  }
  return out + "}";
}

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

std::pair<int, int> parse_rank_range(const std::string& text) {
  std::size_t split = text.find("..");
  if (split == std::string::npos)
    throw Error("rank range must look like 0..4");
  int low = parse_integer(text.substr(0, split));
  int high = parse_integer(text.substr(split + 2));
  if (low < 0 || high < low) throw Error("rank range must be nonnegative");
  return {low, high};
}

int worker_count() {
  if (const char* env = std::getenv("DOMINO_THREADS")) {
    std::string text(env);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(text, &used);
      if (used != text.size()) value = 0;
    } catch (const std::exception&) {
      value = 0;
    }
    if (value < 1) throw Error("DOMINO_THREADS must be a positive integer");
    return value;
  }
  unsigned hardware = std::thread::hardware_concurrency();
  return hardware ? static_cast<int>(hardware) : 1;
}

std::string join_window(const std::vector<std::string>& parts,
                        std::istream& in) {
  if (parts.empty()) return read_source("-", in);
  std::string text;
  for (const std::string& part : parts) {
    if (!text.empty()) text += ' ';
    text += part;
  }
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"rank-r domino insertion for signed permutations"};
  app.require_subcommand(1);

  auto* rs = app.add_subcommand(
      "rs", "insert a signed permutation into a tableau pair");
  int rs_rank = 0;
  std::vector<std::string> rs_window;
  OutputOptions rs_output;
  rs->add_option("--rank", rs_rank, "tableau rank")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  rs->add_option("window", rs_window,
                 "window entries, e.g. \"2 -4 -3 1\" (stdin when omitted)");
  add_output_options(rs, &rs_output);

  auto* rs_inverse_cmd = app.add_subcommand(
      "rs-inverse", "recover the signed permutation of a tableau pair");
  std::string rs_inverse_input = "-";
  OutputOptions rs_inverse_output;
  rs_inverse_cmd->add_option("input", rs_inverse_input,
                             "pair document ('-' for stdin)");
  add_output_options(rs_inverse_cmd, &rs_inverse_output);

  auto* mmt_cmd = app.add_subcommand(
      "mmt", "move a pair through gamma and raise its rank");
  std::string mmt_input = "-";
  OutputOptions mmt_output;
  mmt_cmd->add_option("input", mmt_input, "pair document ('-' for stdin)");
  add_output_options(mmt_cmd, &mmt_output);

  auto* cycles_cmd =
      app.add_subcommand("cycles", "list the cycles of a tableau");
  std::string cycles_input = "-";
  OutputOptions cycles_output;
  cycles_cmd->add_option("input", cycles_input,
                         "tableau document ('-' for stdin)");
  add_output_options(cycles_cmd, &cycles_output);

  auto* delta_cmd = app.add_subcommand(
      "delta", "show the diagonal squares and cycles of a tableau");
  std::string delta_input = "-";
  OutputOptions delta_output;
  delta_cmd->add_option("input", delta_input,
                        "tableau document ('-' for stdin)");
  add_output_options(delta_cmd, &delta_output);

  auto* tmap_cmd =
      app.add_subcommand("tmap", "carry a tableau to another rank");
  std::string tmap_input = "-";
  int tmap_to_rank = 0;
  OutputOptions tmap_output;
  tmap_cmd->add_option("--to-rank", tmap_to_rank, "target rank")
      ->required()
      ->check(CLI::NonNegativeNumber);
  tmap_cmd->add_option("input", tmap_input,
                       "tableau document ('-' for stdin)");
  add_output_options(tmap_cmd, &tmap_output);

  auto* verify_cmd = app.add_subcommand(
      "verify", "check the rank relation over whole groups");
  int verify_max_n = 4;
  std::string verify_ranks = "0..4";
  OutputOptions verify_output;
  verify_cmd->add_option("--max-n", verify_max_n, "largest degree to check")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--ranks", verify_ranks, "rank range, e.g. 0..4")
      ->capture_default_str();
  add_output_options(verify_cmd, &verify_output);

  auto* render_cmd =
      app.add_subcommand("render", "pretty print a tableau document");
  std::string render_input = "-";
  OutputOptions render_output;
  render_cmd->add_option("input", render_input,
                         "tableau document ('-' for stdin)");
  add_output_options(render_cmd, &render_output);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("domino");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (rs->parsed()) {
      SignedPermutation sigma =
          parse_signed_permutation(join_window(rs_window, in));
      emit(rs_output, show_pair(robinson_schensted(sigma, rs_rank),
                                rs_output.format),
           out);
    } else if (rs_inverse_cmd->parsed()) {
      TableauPair pair =
          deserialize_pair(parse_document(read_source(rs_inverse_input, in)));
      SignedPermutation sigma = rs_inverse(pair);
      std::string text;
      if (rs_inverse_output.format == "json") {
        nlohmann::json triples = nlohmann::json::array();
        for (int position = 1; position <= sigma.size(); ++position)
          triples.push_back({{"value", sigma.value_at(position)},
                             {"position", position},
                             {"sign", sigma.sign_at(position)}});
        text = dump(nlohmann::json{{"window", sigma.window()},
                                   {"triples", std::move(triples)}});
      } else {
        text = format_window(sigma) + "\n";
      }
      emit(rs_inverse_output, text, out);
    } else if (mmt_cmd->parsed()) {
      TableauPair pair =
          deserialize_pair(parse_document(read_source(mmt_input, in)));
      emit(mmt_output, show_pair(mmt(pair), mmt_output.format), out);
    } else if (cycles_cmd->parsed()) {
      DominoTableau tableau =
          deserialize_tableau(parse_document(read_source(cycles_input, in)));
      if (cycles_output.format == "json") {
        nlohmann::json listed = nlohmann::json::array();
        for (const Cycle& c : all_cycles(tableau)) {
          CycleClass cls = classify_cycle(tableau, c);
          nlohmann::json entry = {
              {"labels", c},
              {"kind", cls.kind == CycleKind::open ? "open" : "closed"}};
          if (cls.kind == CycleKind::open) {
            entry["back"] = {cls.back->row, cls.back->col};
            entry["front"] = {cls.front->row, cls.front->col};
          }
          listed.push_back(std::move(entry));
        }
        emit(cycles_output,
             dump({{"rank", tableau.rank()}, {"cycles", std::move(listed)}}),
             out);
      } else {
        std::string text;
        for (const Cycle& c : all_cycles(tableau)) {
          CycleClass cls = classify_cycle(tableau, c);
          text += show_cycle(c);
          if (cls.kind == CycleKind::open)
            text += ": open back=" + show_square(*cls.back) +
                    " front=" + show_square(*cls.front);
          else
            text += ": closed";
          text += '\n';
        }
        emit(cycles_output, text, out);
      }
    } else if (delta_cmd->parsed()) {
      DominoTableau tableau =
          deserialize_tableau(parse_document(read_source(delta_input, in)));
      if (delta_output.format == "json") {
        nlohmann::json squares = nlohmann::json::array();
        for (const Square& s : tableau.delta_squares())
          squares.push_back({s.row, s.col});
        emit(delta_output,
             dump({{"delta_squares", std::move(squares)},
                   {"delta_cycles", delta_cycles(tableau)}}),
             out);
      } else {
        std::string text = "delta squares:";
        for (const Square& s : tableau.delta_squares())
          text += ' ' + show_square(s);
        text += "\ndelta cycles:";
        for (const Cycle& c : delta_cycles(tableau)) text += ' ' + show_cycle(c);
        text += '\n';
        emit(delta_output, text, out);
      }
    } else if (tmap_cmd->parsed()) {
      DominoTableau tableau =
          deserialize_tableau(parse_document(read_source(tmap_input, in)));
      emit(tmap_output,
           show_tableau(t_map(tableau, tmap_to_rank), tmap_output.format),
           out);
    } else if (verify_cmd->parsed()) {
      auto [rank_low, rank_high] = parse_rank_range(verify_ranks);
      int workers = worker_count();
      std::uint64_t checked = 0;
      std::uint64_t failed = 0;
      nlohmann::json reports = nlohmann::json::array();
      std::string text;
      for (int n = 0; n <= verify_max_n; ++n)
        for (int rank = rank_low; rank <= rank_high; ++rank) {
          VerificationReport report = verify_all(n, rank, workers);
          checked += report.checked;
          failed += report.failures.size();
          if (verify_output.format == "json") {
            nlohmann::json failures = nlohmann::json::array();
            for (const VerificationFailure& failure : report.failures)
              failures.push_back({{"window", format_window(failure.sigma)},
                                  {"mismatch", failure.mismatch}});
            reports.push_back({{"n", report.n},
                               {"rank", report.rank},
                               {"checked", report.checked},
                               {"failures", std::move(failures)}});
          } else {
            text += "n=" + std::to_string(report.n) +
                    " rank=" + std::to_string(report.rank) + ": " +
                    std::to_string(report.checked) + " checked, " +
                    std::to_string(report.failures.size()) + " failed\n";
            for (const VerificationFailure& failure : report.failures)
              text += "  window '" + format_window(failure.sigma) +
                      "': " + failure.mismatch + "\n";
          }
        }
      if (verify_output.format == "json") {
        emit(verify_output,
             dump({{"reports", std::move(reports)},
                   {"checked", checked},
                   {"failed", failed}}),
             out);
      } else {
        text += "total: " + std::to_string(checked) + " checked, " +
                std::to_string(failed) + " failed\n";
        emit(verify_output, text, out);
      }
      if (failed > 0) return 1;
    } else if (render_cmd->parsed()) {
      DominoTableau tableau =
          deserialize_tableau(parse_document(read_source(render_input, in)));
      emit(render_output, show_tableau(tableau, render_output.format), out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace domino
