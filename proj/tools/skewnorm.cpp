#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "skewnorm/cli.hpp"

namespace {

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("SKEWNORM_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos == std::string(s).size()) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "skewnorm: ignoring malformed SKEWNORM_SEED\n";
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact skew polynomial computations over HQ and Q(x); one JSON request on stdin, one JSON response on stdout"};
  std::string in_file, demo;
  bool list = false;
  app.add_option("--in", in_file, "read the request from FILE instead of stdin");
  app.add_option("--demo", demo, "run a named demo");
  app.add_flag("--verbs", list, "list verbs and demos");
  CLI11_PARSE(app, argc, argv);

  const auto seed = env_seed();
  if (list) {
    for (const auto& v : skewnorm::verb_list()) std::cout << v.name << "  " << v.summary << "\n";
    std::cout << "\ndemos:\n";
    for (const auto& d : skewnorm::demo_list()) std::cout << d.name << "  " << d.summary << "\n";
    return 0;
  }

  skewnorm::Response resp;
  if (!demo.empty()) {
    resp = skewnorm::run_demo(demo, seed.value_or(0));
  } else {
    std::string text;
    if (in_file.empty()) {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(in_file);
      if (!in) {
        std::cerr << "skewnorm: cannot open " << in_file << "\n";
        return 2;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    resp = skewnorm::dispatch_text(text, seed);
  }
  for (const auto& d : resp.diagnostics) std::cerr << d["code"].get<std::string>() << ": " << d["message"].get<std::string>() << "\n";
  std::cout << resp.dump() << "\n";
  return resp.exit_code;
}
