// Copyright 2026 The Chant Authors
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

// chant: scan, split and render Sanskrit verse from the command line.
//
//   chant units "kārtsnyam"
//   chant scan verse.txt
//   chant synth verse.txt -o verse.wav

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chant/errors.hpp"
#include "chant/sandhi.hpp"
#include "chant/synthesis.hpp"
#include "chant/utf8.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPipeline = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string input;
  std::string out_path;
  double beat = chant::kDefaultBeatSeconds;
  int rate = chant::kDefaultSampleRate;
  double base_freq = chant::kDefaultBaseFrequency;
  std::string metre_db;
  std::string clips;
  bool no_crossfade = false;
  bool promote = false;
  bool no_require_metre = false;
  bool devanagari = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App& cmd, Options& o) {
  cmd.add_option("input", o.input, "Verse text or a file holding it ('-' or none reads stdin)");
  cmd.add_option("--beat", o.beat, "Seconds per beat")->check(CLI::PositiveNumber);
  cmd.add_option("--rate", o.rate, "Output sample rate")->check(CLI::PositiveNumber);
  cmd.add_option("--base-freq", o.base_freq, "Voice fundamental in Hz")
      ->check(CLI::Range(80.0, 1000.0));
  cmd.add_option("--metre-db", o.metre_db, "Metre database file")->check(CLI::ExistingFile);
  cmd.add_option("--clips", o.clips, "Directory of <unit>_<l|g>.wav recordings")
      ->check(CLI::ExistingDirectory);
  cmd.add_flag("--no-crossfade", o.no_crossfade, "Join clips without crossfades");
  cmd.add_flag("--promote-prbrkrh", o.promote,
               "Let pr, br, kr and h clusters lengthen a short vowel");
  cmd.add_flag("--no-require-metre", o.no_require_metre,
               "Render unclassified verse with a flat contour");
  cmd.add_flag("--devanagari", o.devanagari, "Treat the input as Devanagari");
}

chant::Config make_config(const Options& o) {
  chant::Config c;
  c.beat_seconds = o.beat;
  c.sample_rate = o.rate;
  c.base_freq = o.base_freq;
  c.crossfade = !o.no_crossfade;
  c.promote_prbrkrh = o.promote;
  c.require_metre = !o.no_require_metre;
  c.script = o.devanagari ? chant::Script::Devanagari : chant::Script::Auto;
  if (!o.metre_db.empty()) c.metre_db_path = o.metre_db;
  if (!o.clips.empty()) c.clip_dir = o.clips;
  return c;
}

std::string read_input(const std::string& input) {
  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else if (std::error_code ec; std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input, std::ios::binary);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    text = input;
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw UsageError("no verse given");
  }
  return text;
}

std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (char32_t cp : chant::utf8::decode(s)) {
    // Combining marks take no column.
    if (!(cp >= 0x0300 && cp <= 0x036F)) ++width;
  }
  return width;
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string bits(const std::vector<chant::TimedUnit>& units, bool contextual) {
  std::string out;
  for (const auto& u : units) {
    if (!out.empty()) out += ' ';
    out += std::to_string(chant::bit_of(contextual ? u.contextual : u.isolated));
  }
  return out;
}

void print_scan(const chant::Synthesis& s, std::ostream& out) {
  const auto& a = s.analysis;
  out << "metre: " << (a.metre ? a.metre->name : std::string("unclassified (flat contour)"))
      << "\n";
  for (std::size_t q = 0; q < s.timed.size(); ++q) {
    const auto& timed = s.timed[q];
    std::vector<chant::Weight> t, v;
    for (const auto& u : timed) {
      t.push_back(u.isolated);
      v.push_back(u.contextual);
    }
    std::string caesura;
    for (int c : a.caesuras(q)) {
      if (!caesura.empty()) caesura += ',';
      caesura += std::to_string(c);
    }
    out << "\nquarter " << q + 1 << ": units=" << timed.size()
        << " T_E=" << chant::expected_time(v) << " T_A=" << chant::actual_time(t)
        << " caesura=" << caesura << "\n";
    out << "  #   unit      t  v  p   beats  silence\n";
    for (std::size_t i = 0; i < timed.size(); ++i) {
      const auto& u = timed[i];
      out << "  " << pad(std::to_string(i + 1), 4) << pad(u.unit.text(), 10)
          << chant::bit_of(u.isolated) << "  " << chant::bit_of(u.contextual) << "  "
          << pad(std::to_string(u.pitch), 4) << pad(std::to_string(u.render_beats), 7)
          << u.trailing_silence_beats << "\n";
    }
    out << "  t: " << bits(timed, false) << "\n";
    out << "  v: " << bits(timed, true) << "\n";
  }
}

void print_error(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
}

int run_units(const Options& o) {
  const chant::Config config = make_config(o);
  const auto s = chant::scan(read_input(o.input), [&] {
    auto c = config;
    c.require_metre = false;
    return c;
  }());
  for (const auto& u : s.units) std::cout << u.text() << "\n";
  return kExitOk;
}

int run_scan(const Options& o) {
  const auto s = chant::scan(read_input(o.input), make_config(o));
  print_scan(s, std::cout);
  return kExitOk;
}

int run_synth(const Options& o) {
  const auto s = chant::synthesize(read_input(o.input), make_config(o), nullptr,
                                   std::filesystem::path(o.out_path));
  std::cout << "wrote " << o.out_path << ": " << s.audio.frames() << " frames, "
            << s.audio.duration_seconds() << " s at " << s.audio.sample_rate
            << " Hz; metre "
            << (s.analysis.metre ? s.analysis.metre->name : std::string("unclassified"))
            << ", " << s.timed.size() << " quarters\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tuneful chanting of Sanskrit verse"};
  app.require_subcommand(1);

  Options options;
  auto* units = app.add_subcommand("units", "Print the pronounceable units, one per line");
  add_common(*units, options);
  auto* scan = app.add_subcommand("scan", "Print weights, pitches and beats per quarter");
  add_common(*scan, options);
  auto* synth = app.add_subcommand("synth", "Render the verse to a WAV file");
  add_common(*synth, options);
  synth->add_option("-o,--out", options.out_path, "Output WAV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*units) return run_units(options);
    if (*scan) return run_scan(options);
    return run_synth(options);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    print_error(e, std::cerr);
    return kExitPipeline;
  }
}
