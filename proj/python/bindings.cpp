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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "chant/dsp.hpp"
#include "chant/errors.hpp"
#include "chant/sandhi.hpp"
#include "chant/synthesis.hpp"
#include "chant/wav.hpp"

namespace py = pybind11;

namespace {

py::array_t<std::int16_t> to_array(const chant::AudioClip& clip) {
  py::array_t<std::int16_t> out(static_cast<py::ssize_t>(clip.samples.size()));
  std::copy(clip.samples.begin(), clip.samples.end(), out.mutable_data());
  return out;
}

chant::AudioClip from_array(const py::array_t<std::int16_t, py::array::c_style |
                                                                py::array::forcecast>& samples,
                            int sample_rate) {
  if (samples.ndim() != 1) throw std::invalid_argument("samples must be one-dimensional");
  chant::AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.assign(samples.data(), samples.data() + samples.size());
  return clip;
}

py::list weights_list(const std::vector<chant::TimedUnit>& timed, bool contextual) {
  py::list out;
  for (const auto& u : timed) out.append(chant::bit_of(contextual ? u.contextual : u.isolated));
  return out;
}

py::dict scan_dict(const chant::Synthesis& s) {
  py::dict out;
  out["latin"] = s.latin;
  out["metre"] = s.analysis.metre ? py::object(py::str(s.analysis.metre->name)) : py::none();
  py::list quarters;
  for (std::size_t q = 0; q < s.timed.size(); ++q) {
    const auto& timed = s.timed[q];
    py::dict quarter;
    py::list units, pitch, beats, silence;
    std::vector<chant::Weight> t, v;
    for (const auto& u : timed) {
      units.append(u.unit.text());
      pitch.append(u.pitch);
      beats.append(u.render_beats);
      silence.append(u.trailing_silence_beats);
      t.push_back(u.isolated);
      v.push_back(u.contextual);
    }
    quarter["units"] = units;
    quarter["t"] = weights_list(timed, false);
    quarter["v"] = weights_list(timed, true);
    quarter["pitch"] = pitch;
    quarter["render_beats"] = beats;
    quarter["silence"] = silence;
    quarter["caesura"] = s.analysis.caesuras(q);
    quarter["expected_time"] = chant::expected_time(v);
    quarter["actual_time"] = chant::actual_time(t);
    quarters.append(quarter);
  }
  out["quarters"] = quarters;
  return out;
}

}  // namespace

PYBIND11_MODULE(_chant, m) {
  m.doc() = "Tuneful speech synthesis for Sanskrit verse";

  static py::exception<chant::Error> base(m, "ChantError");
  static py::exception<chant::NoMatchingMetre> no_metre(m, "NoMatchingMetre", base.ptr());
  static py::exception<chant::ClipUnavailable> no_clip(m, "ClipUnavailable", base.ptr());
  static py::exception<chant::BadWav> bad_wav(m, "BadWav", base.ptr());
  static py::exception<chant::UnknownCharacter> unknown(m, "UnknownCharacter", base.ptr());
  static py::exception<chant::UnsupportedCodePoint> unsupported(m, "UnsupportedCodePoint",
                                                               base.ptr());

  // Pipeline errors surface as the type of the error they wrap.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const chant::PipelineError& e) {
      PyObject* type = base.ptr();
      try {
        std::rethrow_if_nested(e);
      } catch (const chant::NoMatchingMetre&) {
        type = no_metre.ptr();
      } catch (const chant::ClipUnavailable&) {
        type = no_clip.ptr();
      } catch (const chant::BadWav&) {
        type = bad_wav.ptr();
      } catch (const chant::UnknownCharacter&) {
        type = unknown.ptr();
      } catch (const chant::UnsupportedCodePoint&) {
        type = unsupported.ptr();
      } catch (...) {
      }
      PyErr_SetString(type, e.what());
    } catch (const chant::NoMatchingMetre& e) {
      PyErr_SetString(no_metre.ptr(), e.what());
    } catch (const chant::ClipUnavailable& e) {
      PyErr_SetString(no_clip.ptr(), e.what());
    } catch (const chant::BadWav& e) {
      PyErr_SetString(bad_wav.ptr(), e.what());
    } catch (const chant::UnknownCharacter& e) {
      PyErr_SetString(unknown.ptr(), e.what());
    } catch (const chant::UnsupportedCodePoint& e) {
      PyErr_SetString(unsupported.ptr(), e.what());
    } catch (const chant::Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  py::class_<chant::Config>(m, "Config")
      .def(py::init<>())
      .def_readwrite("beat_seconds", &chant::Config::beat_seconds)
      .def_readwrite("sample_rate", &chant::Config::sample_rate)
      .def_readwrite("base_freq", &chant::Config::base_freq)
      .def_readwrite("crossfade", &chant::Config::crossfade)
      .def_readwrite("crossfade_ms", &chant::Config::crossfade_ms)
      .def_readwrite("promote_prbrkrh", &chant::Config::promote_prbrkrh)
      .def_readwrite("metre_db_path", &chant::Config::metre_db_path)
      .def_readwrite("clip_dir", &chant::Config::clip_dir)
      .def_readwrite("require_metre", &chant::Config::require_metre)
      .def_readwrite("apply_pitch", &chant::Config::apply_pitch)
      .def_property("devanagari",
                    [](const chant::Config& c) { return c.script == chant::Script::Devanagari; },
                    [](chant::Config& c, bool on) {
                      c.script = on ? chant::Script::Devanagari : chant::Script::Auto;
                    })
      .def("crossfade_frames", &chant::Config::crossfade_frames);

  m.def("devanagari_to_latin", &chant::devanagari_to_latin, py::arg("text"));
  m.def("normalize", py::overload_cast<std::string_view>(&chant::normalize), py::arg("text"));

  m.def(
      "tokenize",
      [](std::string_view text) {
        py::list out;
        for (const auto& l : chant::tokenize(text).letters) {
          out.append(py::make_tuple(l.text, std::string(chant::category_name(l.category))));
        }
        return out;
      },
      py::arg("text"), "Letters of an IAST string as (text, category) pairs.");

  m.def(
      "apply_sandhi",
      [](std::string_view text) {
        return chant::sandhi::apply_all(chant::tokenize(text)).render();
      },
      py::arg("text"));

  m.def(
      "split_units",
      [](std::string_view text, bool sandhi) {
        auto stream = chant::tokenize(text);
        if (sandhi) stream = chant::sandhi::apply_all(std::move(stream));
        std::vector<std::string> out;
        for (const auto& u : chant::split_into_units(stream)) out.push_back(u.text());
        return out;
      },
      py::arg("text"), py::arg("sandhi") = true);

  m.def("expected_time",
        [](const std::vector<int>& v) {
          std::vector<chant::Weight> w;
          for (int x : v) w.push_back(x ? chant::Weight::Guru : chant::Weight::Laghu);
          return chant::expected_time(w);
        },
        py::arg("contextual"));
  m.def("actual_time",
        [](const std::vector<int>& t) {
          std::vector<chant::Weight> w;
          for (int x : t) w.push_back(x ? chant::Weight::Guru : chant::Weight::Laghu);
          return chant::actual_time(w);
        },
        py::arg("isolated"));

  m.def(
      "metre_db",
      [](std::optional<std::filesystem::path> path) {
        const auto db = path ? chant::load_metre_db(*path) : chant::builtin_metre_db();
        py::list out;
        for (const auto& r : db) {
          py::dict d;
          d["name"] = r.name;
          d["syllables"] = std::vector<int>(r.syllables_per_quarter.begin(),
                                            r.syllables_per_quarter.end());
          d["caesura"] = r.caesura_positions;
          d["pitch"] = std::vector<std::vector<int>>(r.pitch_arrays.begin(),
                                                     r.pitch_arrays.end());
          out.append(d);
        }
        return out;
      },
      py::arg("path") = py::none());

  m.def(
      "scan",
      [](std::string_view text, const chant::Config& config) {
        return scan_dict(chant::scan(text, config));
      },
      py::arg("text"), py::arg("config") = chant::Config{});

  m.def(
      "synthesize",
      [](std::string_view text, const chant::Config& config,
         std::optional<std::filesystem::path> output) {
        chant::Synthesis s;
        {
          py::gil_scoped_release release;
          s = chant::synthesize(text, config, nullptr, output);
        }
        py::dict out = scan_dict(s);
        out["samples"] = to_array(s.audio);
        out["sample_rate"] = s.audio.sample_rate;
        out["joins"] = s.joins;
        return out;
      },
      py::arg("text"), py::arg("config") = chant::Config{}, py::arg("output") = py::none());

  m.def(
      "read_wav",
      [](const std::filesystem::path& path) {
        const auto clip = chant::read_wav(path);
        return py::make_tuple(to_array(clip), clip.sample_rate);
      },
      py::arg("path"));
  m.def(
      "write_wav",
      [](const py::array_t<std::int16_t, py::array::c_style | py::array::forcecast>& samples,
         int sample_rate, const std::filesystem::path& path) {
        chant::write_wav(from_array(samples, sample_rate), path);
      },
      py::arg("samples"), py::arg("sample_rate"), py::arg("path"));

  m.def(
      "pitch_shift",
      [](const py::array_t<std::int16_t, py::array::c_style | py::array::forcecast>& samples,
         int sample_rate, int semitones) {
        return to_array(chant::dsp::pitch_shift(from_array(samples, sample_rate), semitones));
      },
      py::arg("samples"), py::arg("sample_rate"), py::arg("semitones"));
  m.def(
      "time_stretch",
      [](const py::array_t<std::int16_t, py::array::c_style | py::array::forcecast>& samples,
         int sample_rate, double factor) {
        return to_array(chant::dsp::time_stretch(from_array(samples, sample_rate), factor));
      },
      py::arg("samples"), py::arg("sample_rate"), py::arg("factor"));
}
