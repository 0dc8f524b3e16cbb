// mannheim: analyze ruled surfaces and their Mannheim offsets.

#include <CLI11.hpp>
#include <iostream>

#include "mannheim/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Dual-number analysis of ruled surfaces and Mannheim offsets"};
  app.require_subcommand(1, 1);

  mannheim::CommandLine cl;
  std::vector<double> v_range;
  std::size_t v_count = 0;

  for (const char* name : {"analyze", "offset", "mesh", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", cl.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", cl.out_dir, "Output directory");
    sub->add_option("--v-range", v_range, "Ruling parameter range for meshes")->expected(2);
    sub->add_option("--v-count", v_count, "Vertices per ruling for meshes");
    sub->add_option("--tolerance", cl.tolerance_overrides, "Override a named tolerance: name=value")
        ->take_all();
    sub->callback([&cl, name] { cl.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? mannheim::kExitOk : mannheim::kExitInputError;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mannheim::kExitInputError;
  }

  if (!v_range.empty()) cl.v_range = mannheim::Interval{v_range[0], v_range[1]};
  if (v_count != 0) cl.v_count = v_count;
  return mannheim::run_command(cl, std::cout, std::cerr);
}
