// arr4: exact invariants of hyperplane arrangements in real projective 3-space.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "arr4/arrangement_file.hpp"
#include "arr4/parallel.hpp"
#include "arr4/report.hpp"

namespace {

constexpr int kChecksFailed = 1;
constexpr int kParseError = 2;
constexpr int kValidationError = 3;
constexpr int kUnknownLabel = 4;

int write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kParseError;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analyzer for hyperplane arrangements in P^3(R)"};
  app.require_subcommand(1);

  std::string analyze_path;
  bool as_json = false, chambers = false, no_chambers = false;
  std::size_t max_chambers = 0;
  auto* analyze = app.add_subcommand("analyze", "Report every invariant of an arrangement file");
  analyze->add_option("path", analyze_path, "arrangement file")->required();
  analyze->add_flag("--json", as_json, "emit JSON");
  analyze->add_flag("--chambers", chambers, "enumerate chambers regardless of size");
  analyze->add_flag("--no-chambers", no_chambers, "never enumerate chambers");
  analyze->add_option("--max-chambers", max_chambers, "stop enumeration after N chambers");

  std::string label, output;
  auto* generate = app.add_subcommand("generate", "Write a built-in arrangement as a canonical file");
  generate->add_option("label", label, "A4, D4, B4, F4, H4 or a table label")->required();
  generate->add_option("-o,--output", output, "output path")->required();

  auto* cat = app.add_subcommand("catalogue", "The table of known simplicial arrangements");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "Print all rows");
  std::string verify_label;
  bool verify_all_rows = false, verify_json = false;
  auto* verify = cat->add_subcommand("verify", "Check one row or all rows");
  verify->add_option("label", verify_label, "row label");
  verify->add_flag("--all", verify_all_rows, "verify every row");
  verify->add_flag("--json", verify_json, "emit JSON");
  std::string export_path;
  auto* exp = cat->add_subcommand("export", "Write the table as JSON");
  exp->add_option("-o,--output", export_path, "output path")->required();

  CLI11_PARSE(app, argc, argv);
  const unsigned threads = arr4::worker_count();

  try {
    if (*analyze) {
      arr4::Arrangement a = arr4::read_arrangement(analyze_path);
      arr4::AnalyzeOptions options;
      options.force_chambers = chambers;
      options.skip_chambers = no_chambers;
      options.max_chambers = max_chambers;
      options.threads = threads;
      arr4::Json report = arr4::analyze(a, options);
      std::cout << (as_json ? report.dump(2) + "\n" : arr4::analyze_text(report));
      return 0;
    }
    if (*generate) {
      return write_text(output, arr4::emit_arrangement(arr4::builtin(label)));
    }
    if (*list) {
      for (const arr4::CatalogueEntry& e : arr4::catalogue()) {
        std::cout << e.label << "  n=" << e.n << "  h=" << arr4::to_json(e.h).dump()
                  << "  t=" << arr4::to_json(e.t).dump() << "  f=(" << e.f[0] << "," << e.f[1] << "," << e.f[2]
                  << "," << e.f[3] << ")  " << e.comments << (e.has_vectors ? "  [vectors]" : "") << "\n";
      }
      return 0;
    }
    if (*verify) {
      if (verify_all_rows == !verify_label.empty()) {
        std::cerr << "error: give either a label or --all\n";
        return kParseError;
      }
      arr4::VerifyOptions options;
      options.threads = threads;
      std::vector<arr4::RowReport> rows;
      if (verify_all_rows) {
        rows = arr4::verify_all(options);
      } else {
        rows.push_back(arr4::verify_row(verify_label, options));
      }
      std::size_t failures = 0;
      for (const auto& r : rows) failures += r.failed();
      if (verify_json) {
        arr4::Json doc;
        doc["rows"] = arr4::Json::array();
        for (const auto& r : rows) doc["rows"].push_back(arr4::to_json(r));
        doc["row_count"] = rows.size();
        doc["failures"] = failures;
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const auto& r : rows) std::cout << arr4::row_text(r);
        std::cout << rows.size() << " rows, " << failures << " failures\n";
      }
      return failures == 0 ? 0 : kChecksFailed;
    }
    if (*exp) {
      return write_text(export_path, arr4::catalogue_json().dump(2) + "\n");
    }
  } catch (const arr4::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const arr4::ArrangementError& e) {
    std::cerr << "invalid arrangement: " << e.what() << "\n";
    return kValidationError;
  } catch (const arr4::CatalogueError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknownLabel;
  }
  return 0;
}
