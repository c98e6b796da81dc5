#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "commands.hpp"
#include "instance.hpp"

int main(int argc, char** argv) {
  using namespace extlift::cli;

  CLI::App app{"extlift: bases of an oriented matroid and its compatible reorientations"};
  std::string command;
  std::string path;
  Options options;
  std::uint64_t seed = 0;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--instance", path, "Instance file (reads stdin when omitted or '-')");
  app.add_flag("--json", options.json, "JSON output");
  auto* seed_opt = app.add_option("--seed", seed, "Sampling seed for signatures the instance does not fix");
  app.add_option("--max-n", options.max_n, "Largest accepted ground set")
      ->check(CLI::Range(1, kHardMaxN))
      ->capture_default_str();
  app.add_option("--vector", options.vector, "Extension vector v, e.g. 1,1");
  app.add_option("--heights", options.heights, "Lifting heights h, e.g. 0,1,0,1");
  app.add_option("--reorientation", options.reorientation, "Subset A for 'inverse', e.g. 2,4 ('-' for empty)");

  CLI11_PARSE(app, argc, argv);
  if (*seed_opt) options.seed = seed;

  Instance instance;
  try {
    if (path.empty() || path == "-") {
      const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
      instance = parse_instance(text);
    } else {
      instance = read_instance(path);
    }
  } catch (const std::exception& e) {
    std::cerr << "extlift: " << (path.empty() ? "<stdin>" : path) << ": " << e.what() << '\n';
    return 2;
  }

  const CommandResult result = run_command(command, instance, options);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "extlift: " << result.error << '\n';
  return result.exit_code;
}
