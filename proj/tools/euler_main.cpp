#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "euler/cli.hpp"
#include "euler/errors.hpp"

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("EULER_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    std::cerr << "ignoring EULER_SEED=" << env << "\n";
    return 0;
  }
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

// One statement per input line; errors are reported and the session goes on.
int repl(const euler::cli::Options& options) {
  using namespace euler::cli;
  Session session(options);
  std::vector<Statement> history;
  std::string line;
  while (std::cout << "euler> " << std::flush, std::getline(std::cin, line)) {
    std::vector<Statement> batch;
    try {
      batch = parse_session(line);
      std::vector<Statement> all = history;
      all.insert(all.end(), batch.begin(), batch.end());
      resolve(all);
    } catch (const euler::Error& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      continue;
    }
    for (const auto& s : batch) {
      try {
        session.execute(s, std::cout);
        history.push_back(s);
      } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
      }
    }
  }
  std::cout << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler class groups and cohomotopy sessions"};
  app.require_subcommand(1);

  euler::cli::Options options;
  options.seed = default_seed();
  std::string order = "degrevlex";
  std::string file;

  auto add_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", options.seed, "seed for every randomized search (default $EULER_SEED or 0)");
    sub->add_option("--degree-cap", options.degree_cap, "degree bound for random perturbations");
    sub->add_option("--attempts", options.attempts, "attempt cap for randomized searches");
    sub->add_flag("--witnesses", options.witnesses, "print homotopies and CRT data");
    sub->add_option("--order", order, "monomial order of declared rings")
        ->check(CLI::IsMember({"lex", "degrevlex"}));
  };

  CLI::App* run = app.add_subcommand("run", "execute a session file");
  run->add_option("FILE", file, "session file")->required();
  add_flags(run);
  CLI::App* repl_cmd = app.add_subcommand("repl", "read statements from standard input");
  add_flags(repl_cmd);
  CLI::App* check = app.add_subcommand("check", "parse and resolve a session file");
  check->add_option("FILE", file, "session file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : euler::cli::kParseFailed;
  }
  options.order = order == "lex" ? euler::cli::OrderChoice::Lex : euler::cli::OrderChoice::DegRevLex;

  if (*repl_cmd) return repl(options);
  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "cannot read " << file << "\n";
    return euler::cli::kParseFailed;
  }
  if (*check) return euler::cli::check(text, std::cout, std::cerr);
  return euler::cli::run(text, options, std::cout, std::cerr);
}
