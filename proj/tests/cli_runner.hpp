#ifndef EULERINT_CLI_RUNNER_HPP
#define EULERINT_CLI_RUNNER_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Runs the CLI binary through the shell, capturing exit code, stdout and
// stderr. Callers embed any quoting in `args`.
namespace eulerint_test {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CliResult run_cli(const std::string& cli_path, const std::string& args) {
  static int counter = 0;
  std::string base = "/tmp/eulerint_cli_" + std::to_string(getpid()) + "_" +
                     std::to_string(counter++);
  std::string out_path = base + ".out";
  std::string err_path = base + ".err";
  std::string cmd = cli_path + " " + args + " >" + out_path + " 2>" + err_path;
  int raw = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace eulerint_test

#endif
