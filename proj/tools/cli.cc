// Copyright 2026 The TIE-ML Tools Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tieml/conll.h"
#include "tieml/json_format.h"
#include "tieml/stats.h"
#include "tieml/tieml_io.h"
#include "tieml/timeline.h"
#include "tieml/timeml.h"
#include "tieml/validator.h"

namespace tieml::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kFormats = {"tieml", "timeml", "conll", "json"};

struct InputOptions {
  std::string from = "tieml";
  bool lenient = false;
  bool raw_text = false;
};

// Outcome of reading and parsing one input.
struct Loaded {
  std::string path;
  int status = kExitOk;
  std::optional<Corpus> corpus;
  std::vector<ParseWarning> warnings;
  LossReport loss;
  // Set on failure: one line, already prefixed with the path.
  std::string error;
  Json error_json;
};

class Inputs {
 public:
  explicit Inputs(std::istream &in) : in_(in) {}

  // stdin is read at most once and cached.
  std::optional<std::string> Read(const std::string &path) {
    if (path == "-") {
      if (!stdin_) {
        std::ostringstream buffer;
        buffer << in_.rdbuf();
        stdin_ = buffer.str();
      }
      return stdin_;
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) return std::nullopt;
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (file.bad()) return std::nullopt;
    return buffer.str();
  }

 private:
  std::istream &in_;
  std::optional<std::string> stdin_;
};

Loaded Decode(const std::string &path, const std::string &text, const InputOptions &options) {
  Loaded loaded;
  loaded.path = path;
  auto fail = [&](const std::string &code, const std::string &message, Json extra) {
    loaded.status = kExitContent;
    loaded.error = path + ": " + message;
    loaded.error_json = Json{{"file", path}, {"code", code}, {"severity", "error"}};
    for (auto it = extra.begin(); it != extra.end(); ++it) loaded.error_json[it.key()] = it.value();
    loaded.error_json["message"] = message;
  };
  try {
    if (options.from == "tieml") {
      ParseResult result = Parse(text, {options.lenient, options.raw_text});
      loaded.corpus = std::move(result.corpus);
      loaded.warnings = std::move(result.warnings);
    } else if (options.from == "json") {
      loaded.corpus = FromJson(text);
    } else if (options.from == "conll") {
      loaded.corpus = FromConll(text);
    } else {
      std::vector<TimeMLDoc> docs = ReadTimeML(text);
      TimeMLImport imported = FromTimeML(docs);
      loaded.corpus = std::move(imported.corpus);
      loaded.loss = std::move(imported.loss);
    }
  } catch (const ParseError &e) {
    fail("PARSE_ERROR", e.what(), Json{{"line", e.line()}, {"column", e.column()}});
  } catch (const FormatError &e) {
    fail("FORMAT_ERROR", e.what(), Json{{"at", e.location()}});
  } catch (const ConversionError &e) {
    fail("CONVERSION_ERROR", e.what(), Json::object());
  } catch (const std::exception &e) {
    fail("INPUT_ERROR", e.what(), Json::object());
  }
  return loaded;
}

// Loads every path, optionally on several threads; results keep input order.
std::vector<Loaded> LoadAll(const std::vector<std::string> &paths, const InputOptions &options,
                            Inputs &inputs, int jobs) {
  std::vector<std::optional<std::string>> texts;
  for (const std::string &path : paths) texts.push_back(inputs.Read(path));

  auto load = [&](std::size_t i) {
    if (!texts[i]) {
      Loaded loaded;
      loaded.path = paths[i];
      loaded.status = kExitEnvironment;
      loaded.error = paths[i] + ": cannot read file";
      loaded.error_json = Json{{"file", paths[i]}, {"code", "IO_ERROR"}, {"severity", "error"},
                               {"message", "cannot read file"}};
      return loaded;
    }
    return Decode(paths[i], *texts[i], options);
  };

  std::vector<Loaded> out(paths.size());
  std::size_t step = static_cast<std::size_t>(std::max(jobs, 1));
  for (std::size_t start = 0; start < paths.size(); start += step) {
    std::size_t end = std::min(paths.size(), start + step);
    if (step == 1) {
      out[start] = load(start);
      continue;
    }
    std::vector<std::future<Loaded>> pending;
    for (std::size_t i = start; i < end; ++i) pending.push_back(std::async(std::launch::async, load, i));
    for (std::size_t i = start; i < end; ++i) out[i] = pending[i - start].get();
  }
  return out;
}

Json DiagnosticJson(const Diagnostic &d, const std::string &file) {
  return Json{{"file", file},
              {"code", DiagnosticCodeName(d.code)},
              {"severity", SeverityName(d.severity)},
              {"document", d.location.document + 1},
              {"sentence", d.location.sentence + 1},
              {"clause", d.location.clause + 1},
              {"message", d.message}};
}

Json WarningJson(const ParseWarning &w, const std::string &file) {
  return Json{{"file", file},
              {"code", DiagnosticCodeName(DiagnosticCode::kUnknownAttribute)},
              {"severity", SeverityName(Severity::kWarning)},
              {"line", w.line},
              {"column", w.column},
              {"message", w.detail}};
}

std::string WarningText(const ParseWarning &w, const std::string &file) {
  return file + ":" + std::to_string(w.line) + ":" + std::to_string(w.column) + " " +
         std::string(DiagnosticCodeName(DiagnosticCode::kUnknownAttribute)) + " warning " + w.detail;
}

struct ValidateOptions {
  std::vector<std::string> paths;
  InputOptions input;
  std::string format = "text";
  int jobs = 1;
};

int CmdValidate(const ValidateOptions &options, Inputs &inputs, std::ostream &out, std::ostream &err) {
  std::vector<Loaded> loaded = LoadAll(options.paths, options.input, inputs, options.jobs);

  // Validation per file, in parallel when asked; merged in input order.
  std::vector<std::vector<Diagnostic>> findings(loaded.size());
  auto check = [&](std::size_t i) {
    if (loaded[i].corpus) findings[i] = Validate(*loaded[i].corpus);
  };
  if (options.jobs > 1) {
    std::vector<std::future<void>> pending;
    for (std::size_t i = 0; i < loaded.size(); ++i) pending.push_back(std::async(std::launch::async, check, i));
    for (auto &f : pending) f.get();
  } else {
    for (std::size_t i = 0; i < loaded.size(); ++i) check(i);
  }

  int status = kExitOk;
  Json report = Json::array();
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    const Loaded &file = loaded[i];
    status = std::max(status, file.status);
    if (!file.corpus) {
      if (options.format == "json") {
        report.push_back(file.error_json);
      } else {
        err << file.error << "\n";
      }
      continue;
    }
    if (HasErrors(findings[i])) status = std::max(status, kExitContent);
    std::size_t counts[3] = {0, 0, 0};
    for (const Diagnostic &d : findings[i]) ++counts[static_cast<int>(d.severity)];
    counts[static_cast<int>(Severity::kWarning)] += file.warnings.size();
    if (options.format == "json") {
      for (const ParseWarning &w : file.warnings) report.push_back(WarningJson(w, file.path));
      for (const Diagnostic &d : findings[i]) report.push_back(DiagnosticJson(d, file.path));
    } else {
      for (const ParseWarning &w : file.warnings) out << WarningText(w, file.path) << "\n";
      for (const Diagnostic &d : findings[i]) out << FormatDiagnostic(d, file.path) << "\n";
      out << file.path << ": " << counts[0] << " error(s), " << counts[1] << " warning(s), "
          << counts[2] << " info\n";
    }
  }
  if (options.format == "json") out << report.dump(2) << "\n";
  return status;
}

struct TimelineOptions {
  std::string path;
  InputOptions input;
  std::string format = "tiers";
};

int CmdTimeline(const TimelineOptions &options, Inputs &inputs, std::ostream &out, std::ostream &err) {
  Loaded file = LoadAll({options.path}, options.input, inputs, 1).front();
  if (!file.corpus) {
    err << file.error << "\n";
    return file.status;
  }
  std::vector<Diagnostic> diagnostics = Validate(*file.corpus);
  if (HasErrors(diagnostics)) {
    for (const Diagnostic &d : diagnostics) {
      if (d.severity == Severity::kError) err << FormatDiagnostic(d, file.path) << "\n";
    }
    return kExitContent;
  }

  Json documents = Json::array();
  const auto &docs = file.corpus->documents;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    Timeline timeline = BuildTimeline(docs[d]);
    std::uint64_t inversions = InversionCount(timeline);
    if (options.format == "json") {
      Json entry = Json{{"document", d + 1}, {"id", docs[d].id}};
      Json body = TimelineToJson(timeline);
      for (auto it = body.begin(); it != body.end(); ++it) entry[it.key()] = it.value();
      documents.push_back(std::move(entry));
      continue;
    }
    out << "document " << d + 1;
    if (!docs[d].id.empty()) out << " (" << docs[d].id << ")";
    out << ":\n";
    if (timeline.slots.empty()) {
      out << "no timeline: no timeslot annotations\n";
      continue;
    }
    out << RenderTiers(timeline);
    if (inversions > 0) {
      out << "warning: " << inversions << " inversion(s): presentation order differs from temporal order\n";
    }
  }
  if (options.format == "json") out << Json{{"file", file.path}, {"documents", documents}}.dump(2) << "\n";
  return kExitOk;
}

struct ConvertOptions {
  std::string path;
  InputOptions input;
  std::string to;
  std::string out = "-";
};

int CmdConvert(const ConvertOptions &options, Inputs &inputs, std::ostream &out, std::ostream &err) {
  if (options.input.from == "timeml" && options.to == "timeml") {
    err << "error: unsupported conversion timeml -> timeml\n";
    return kExitEnvironment;
  }
  Loaded file = LoadAll({options.path}, options.input, inputs, 1).front();
  if (!file.corpus) {
    err << file.error << "\n";
    return file.status;
  }

  std::string text;
  try {
    if (options.to == "tieml") {
      text = Serialize(*file.corpus);
    } else if (options.to == "json") {
      text = ToJson(*file.corpus) + "\n";
    } else if (options.to == "conll") {
      text = ToConll(*file.corpus);
    } else {
      text = WriteTimeML(ToTimeML(*file.corpus));
    }
  } catch (const ConversionError &e) {
    err << file.path << ": " << e.what() << "\n";
    return kExitContent;
  }

  std::string loss;
  if (options.input.from == "timeml") loss = file.loss.ToJsonValue().dump(2) + "\n";

  if (options.out == "-") {
    out << text;
    if (!loss.empty()) err << loss;
    return kExitOk;
  }
  std::ofstream output(options.out, std::ios::binary);
  output << text;
  if (!output) {
    err << options.out << ": cannot write file\n";
    return kExitEnvironment;
  }
  if (!loss.empty()) {
    std::string sidecar = options.out + ".loss.json";
    std::ofstream loss_output(sidecar, std::ios::binary);
    loss_output << loss;
    if (!loss_output) {
      err << sidecar << ": cannot write file\n";
      return kExitEnvironment;
    }
  }
  return kExitOk;
}

struct StatsOptions {
  std::vector<std::string> paths;
  InputOptions input;
  std::string format = "text";
};

int CmdStats(const StatsOptions &options, Inputs &inputs, std::ostream &out, std::ostream &err) {
  std::vector<Loaded> loaded = LoadAll(options.paths, options.input, inputs, 1);
  int status = kExitOk;
  CorpusStats stats;
  for (const Loaded &file : loaded) {
    if (!file.corpus) {
      err << file.error << "\n";
      status = std::max(status, file.status);
      continue;
    }
    stats.Add(*file.corpus);
  }
  if (status != kExitOk) return status;
  if (options.format == "json") {
    out << stats.ToJsonValue().dump(2) << "\n";
  } else {
    out << stats.ToTable();
  }
  return kExitOk;
}

void AddInputOptions(CLI::App *command, InputOptions &input) {
  command->add_option("--from", input.from, "Input format")->check(CLI::IsMember(kFormats));
  command->add_flag("--lenient", input.lenient, "Report unknown TIE-ML attributes as warnings");
  command->add_flag("--raw-text", input.raw_text, "Keep clause text whitespace as written");
}

}  // namespace

Environment EnvironmentFromProcess() {
  Environment env;
  const char *lenient = std::getenv("TIEML_LENIENT");
  env.lenient = lenient != nullptr && std::string(lenient) == "1";
  return env;
}

int Run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err, const Environment &env) {
  CLI::App app{"Parse, validate, analyze and convert TIE-ML annotated corpora", "tieml"};
  app.require_subcommand(1);

  ValidateOptions validate;
  CLI::App *validate_cmd = app.add_subcommand("validate", "Check corpora and report diagnostics");
  validate_cmd->add_option("paths", validate.paths, "Input files ('-' for stdin)")->required();
  validate_cmd->add_option("--format", validate.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  validate_cmd->add_option("--jobs", validate.jobs, "Files processed concurrently")
      ->check(CLI::Range(1, 256));
  AddInputOptions(validate_cmd, validate.input);

  TimelineOptions timeline;
  CLI::App *timeline_cmd = app.add_subcommand("timeline", "Show event/timeslot tiers per document");
  timeline_cmd->add_option("path", timeline.path, "Input file ('-' for stdin)")->required();
  timeline_cmd->add_option("--format", timeline.format, "Output format")
      ->check(CLI::IsMember({"tiers", "json"}));
  AddInputOptions(timeline_cmd, timeline.input);

  ConvertOptions convert;
  CLI::App *convert_cmd = app.add_subcommand("convert", "Convert between TIE-ML, TimeML, CoNLL and JSON");
  convert_cmd->add_option("path", convert.path, "Input file ('-' for stdin)")->required();
  convert_cmd->add_option("--to", convert.to, "Output format")->required()->check(CLI::IsMember(kFormats));
  convert_cmd->add_option("--out", convert.out, "Output file ('-' for stdout)");
  AddInputOptions(convert_cmd, convert.input);

  StatsOptions stats;
  CLI::App *stats_cmd = app.add_subcommand("stats", "Aggregate corpus statistics");
  stats_cmd->add_option("paths", stats.paths, "Input files ('-' for stdin)")->required();
  stats_cmd->add_option("--format", stats.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  AddInputOptions(stats_cmd, stats.input);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    err << "run 'tieml --help' for usage\n";
    return kExitEnvironment;
  }

  for (InputOptions *input : {&validate.input, &timeline.input, &convert.input, &stats.input}) {
    input->lenient = input->lenient || env.lenient;
  }

  Inputs inputs(in);
  if (validate_cmd->parsed()) return CmdValidate(validate, inputs, out, err);
  if (timeline_cmd->parsed()) return CmdTimeline(timeline, inputs, out, err);
  if (convert_cmd->parsed()) return CmdConvert(convert, inputs, out, err);
  return CmdStats(stats, inputs, out, err);
}

}  // namespace tieml::cli
