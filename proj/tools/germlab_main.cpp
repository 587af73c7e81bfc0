#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "germlab/document.hpp"
#include "germlab/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) germlab::fail(germlab::Errc::invalid_input, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of finite polynomial map germs"};
  app.require_subcommand(1);

  std::string file;
  germlab::DispatchOptions options;
  std::string h, arc, samples;
  int truncation = 0, random_samples = 0;
  unsigned seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input JSON document")->required();
    return cmd;
  };

  auto* multiplicity = add_common(app.add_subcommand("multiplicity", "local multiplicity m0"));
  auto* exponent = add_common(
      app.add_subcommand("exponent", "Lojasiewicz exponent l0 and per-coordinate exponents"));
  auto* charpoly = add_common(
      app.add_subcommand("charpoly", "characteristic polynomial of h relative to the germ"));
  charpoly->add_option("--h", h, "polynomial h in the germ variables");
  charpoly->add_option("--truncation", truncation, "series truncation override");
  auto* polygon =
      add_common(app.add_subcommand("polygon", "Newton polygon of h relative to the germ"));
  polygon->add_option("--h", h, "polynomial h in the germ variables");
  polygon->add_option("--truncation", truncation, "series truncation override");
  auto* arc_cmd = add_common(app.add_subcommand("arc", "order quotient along an arc"));
  arc_cmd->add_option("--arc", arc, "comma-separated arc components in s");
  auto* deform = add_common(
      app.add_subcommand("deform", "semicontinuity report on a deformation family"));
  deform->add_option("--h", h, "polynomial h in the germ variables");
  deform->add_option("--samples", samples, "semicolon-separated rational sample tuples");
  deform->add_option("--random-samples", random_samples, "extra random sample count");
  deform->add_option("--seed", seed, "seed for --random-samples");
  auto* prop23 = add_common(
      app.add_subcommand("prop23", "rank criterion for upper semicontinuity of l0"));
  prop23->add_option("--samples", samples, "semicolon-separated rational sample tuples");

  CLI11_PARSE(app, argc, argv);

  auto* cmd = app.get_subcommands().front();
  if (cmd->count("--h")) options.h = h;
  if (cmd == arc_cmd && arc_cmd->count("--arc")) options.arc = arc;
  if (cmd->count("--samples")) options.samples = samples;
  if (cmd->count("--truncation")) options.truncation = truncation;
  if (cmd == deform && deform->count("--random-samples")) options.random_samples = random_samples;
  if (cmd == deform && deform->count("--seed")) options.seed = seed;
  (void)multiplicity;
  (void)exponent;
  (void)charpoly;
  (void)polygon;
  (void)prop23;

  try {
    germlab::InputDocument doc = germlab::parse_input(read_file(file));
    std::cout << germlab::run_command(cmd->get_name(), doc, options);
    return 0;
  } catch (const germlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
