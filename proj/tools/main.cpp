#include <CLI11.hpp>

#include "qfold/cliapp.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact quantum-group module, crystal and braiding checks"};
  qf::RunOptions opt;
  long depth = -1;
  app.add_option("--config", opt.config_path, "job configuration file")->required();
  app.add_option("--command", opt.command,
                 "fold | module | crystal | fold-crystal | tensor | theta | ybe | "
                 "forms | all")
      ->required();
  app.add_option("--depth", depth, "override the config depth window");
  app.add_option("--out", opt.out_dir, "output directory (default .)");
  app.add_option("--jobs", opt.jobs, "worker threads for block checks");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (depth >= 0) opt.depth = depth;
  return qf::run_command(opt);
}
