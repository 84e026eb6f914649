#include "k72/runner.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"k72: exact-arithmetic case suite for the degree <= 72 Fano threefold bound"};

  std::string selector = "all";
  std::string format = "text";
  std::string out_path;
  bool strict_flags = false;
  bool list_only = false;

  app.add_option("selector", selector, "case id, id prefix, or 'all'")
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this path instead of stdout");
  app.add_flag("--strict-flags", strict_flags, "treat FLAG results as a failing run (exit 2)");
  app.add_flag("--list", list_only, "print 'id<TAB>anchor' for every case, without running");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 64;
  }

  std::string payload;
  int code = 0;
  if (list_only) {
    payload = k72::list_cases_text();
  } else {
    k72::SuiteReport report;
    try {
      report = k72::run(selector);
    } catch (const k72::UsageError& error) {
      std::cerr << error.what() << "\n";
      return 64;
    }
    payload = k72::emit(report,
                        format == "json" ? k72::EmitFormat::Json : k72::EmitFormat::Text);
    code = k72::exit_code_for(report, strict_flags);
  }

  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    out << payload;
    out.flush();
    if (!out) {
      std::cerr << "cannot write to " << out_path << "\n";
      return 64;
    }
  }
  return code;
}
