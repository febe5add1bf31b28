#include "pcb/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pcb::cli {

namespace {

using nlohmann::json;

struct Request {
  std::string command;
  std::string path;
  std::string field;
  std::string level = "identities";
  bool pretty = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int execute(const Request& req, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string text = read_file(req.path);
    const MatrixFile file = parse_matrix_file(text);
    const PcbMatrix p = PcbMatrix::validate(file.L);

    json payload;
    int code = kExitOk;
    if (req.command == "analyze") {
      payload = analyze_payload(p);
    } else if (req.command == "snf") {
      payload = snf_payload(p);
    } else if (req.command == "decompose") {
      payload = decompose_payload(p, FieldChoice::parse(req.field.empty() ? "symbolic" : req.field));
    } else {
      const VerifyOutcome v = verify_payload(p, FieldChoice::parse(req.field.empty() ? "q" : req.field),
                                             req.level == "full");
      payload = v.payload;
      if (!v.ok) code = kExitVerification;
    }

    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    json envelope = {{"tool", kToolName},
                     {"version", kToolVersion},
                     {"command", req.command},
                     {"input_digest", "sha256:" + sha256_hex(text)},
                     {"payload", std::move(payload)},
                     {"timing_ms", ms}};
    if (req.pretty)
      out << render_pretty(envelope);
    else
      out << envelope.dump() << "\n";
    if (code == kExitVerification) err << "pcb: verification failed\n";
    return code;
  } catch (const ParseError& e) {
    err << "pcb: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "pcb: invalid PCB matrix: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BadPrime& e) {
    err << "pcb: " << e.what() << "\n";
    return kExitBadPrime;
  } catch (const VerificationFailed& e) {
    err << "pcb: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "pcb: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "pcb: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive critical binomial ideals: invariants, decompositions and checks", kToolName};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Request req;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", req.path, "matrix file {\"n\": ..., \"L\": [[...]]}")->required();
    sub->add_flag("--pretty", req.pretty, "human-readable output");
  };

  auto* analyze = app.add_subcommand("analyze", "associated vector, invariant factors, syzygies, counts");
  add_common(analyze);
  auto* snf = app.add_subcommand("snf", "normalized Smith normal form");
  add_common(snf);
  auto* decompose = app.add_subcommand("decompose", "isolated and embedded components");
  add_common(decompose);
  decompose->add_option("--field", req.field, "symbolic | fp:<p>")->default_str("symbolic");
  auto* verify = app.add_subcommand("verify", "symbolic identities and oracle checks");
  add_common(verify);
  verify->add_option("--field", req.field, "q | fp:<p>")->default_str("q");
  verify->add_option("--level", req.level, "identities | full")
      ->check(CLI::IsMember({"identities", "full"}))
      ->default_str("identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  for (auto* sub : {analyze, snf, decompose, verify})
    if (sub->parsed()) req.command = sub->get_name();
  return execute(req, out, err);
}

}  // namespace pcb::cli
