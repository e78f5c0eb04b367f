// src/synth/synthetic_corpus.cc

// Copyright 2026 The voxsan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "voxsan/synth/synthetic_corpus.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>

#include "voxsan/common/error.h"
#include "voxsan/corpus/wav.h"

namespace voxsan {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::array<Formants, 5> kVowels = {{
    {730, 1090, 2440},  // a
    {270, 2290, 3010},  // i
    {300, 870, 2240},   // u
    {530, 1840, 2480},  // e
    {570, 840, 2410},   // o
}};

const std::array<const char *, 4> kSentences = {
    "kids are talking by the door",
    "dogs are sitting by the door",
    "kids are talking by the door",
    "dogs are sitting by the door",
};

// Magnitude of a unit-DC-gain two-pole resonance.
double Resonance(double f, double formant, double bandwidth) {
  const double r = f / formant;
  const double q = f * bandwidth / (formant * formant);
  return 1.0 / std::sqrt((1.0 - r * r) * (1.0 - r * r) + q * q);
}

Formants Lerp(const Formants &a, const Formants &b, double w) {
  return {a[0] + w * (b[0] - a[0]), a[1] + w * (b[1] - a[1]),
          a[2] + w * (b[2] - a[2])};
}

}  // namespace

AudioClip SynthesizeVoice(const VoiceSpec &spec, std::uint64_t seed) {
  if (spec.f0_hz <= 0.0 || spec.duration_s <= 0.0 || spec.sample_rate <= 0 ||
      spec.vowels.empty())
    throw Error(ErrorCode::kInvalidArgument, "invalid voice spec");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double fs = spec.sample_rate;
  const double nyquist = 0.5 * fs;
  const std::size_t total = static_cast<std::size_t>(std::llround(spec.duration_s * fs));
  const std::size_t lead = std::min(
      total / 2, static_cast<std::size_t>(std::llround(spec.lead_silence_s * fs)));
  const std::size_t voiced = total - 2 * lead;
  const double wobble_phase = kTwoPi * uniform(rng);
  const double tilt_exponent = spec.tilt_db_per_octave / (20.0 * std::log10(2.0));
  const std::size_t fade = static_cast<std::size_t>(0.02 * fs);
  const double glide = 0.06 * fs;  // samples spent moving between vowels

  AudioClip clip;
  clip.sample_rate = spec.sample_rate;
  clip.samples.assign(total, 0.0);
  double phase = 0.0;
  const double segment = static_cast<double>(voiced) / spec.vowels.size();
  for (std::size_t i = 0; i < voiced; ++i) {
    const double t = static_cast<double>(i) / fs;
    const double progress = static_cast<double>(i) / std::max<std::size_t>(voiced, 1);
    const double f0 = spec.f0_hz * (1.05 - 0.1 * progress) *
                      (1.0 + spec.f0_modulation *
                                 std::sin(kTwoPi * 1.3 * t + wobble_phase));
    phase += kTwoPi * f0 / fs;
    if (phase > kTwoPi * 1e6) phase = std::fmod(phase, kTwoPi);

    const double pos = static_cast<double>(i) / segment;
    const std::size_t k =
        std::min(static_cast<std::size_t>(pos), spec.vowels.size() - 1);
    Formants formants = spec.vowels[k];
    // Glide across the nearest vowel boundary.
    const std::size_t j = static_cast<std::size_t>(std::llround(pos));
    if (j > 0 && j < spec.vowels.size()) {
      const double offset = static_cast<double>(i) - j * segment;
      if (std::abs(offset) < glide / 2)
        formants = Lerp(spec.vowels[j - 1], spec.vowels[j], offset / glide + 0.5);
    }

    double x = 0.0;
    for (int h = 1; h * f0 < nyquist * 0.95; ++h) {
      const double f = h * f0;
      double gain = 1.0 / h;
      for (double formant : formants)
        gain *= Resonance(f, formant, 60.0 + 0.04 * formant);
      if (tilt_exponent != 0.0) gain *= std::pow(f / 1000.0, tilt_exponent);
      x += gain * std::sin(h * phase);
    }
    double envelope = 1.0;
    if (i < fade) envelope = 0.5 - 0.5 * std::cos(std::numbers::pi * i / fade);
    if (voiced - i <= fade)
      envelope = 0.5 - 0.5 * std::cos(std::numbers::pi * (voiced - i) / fade);
    clip.samples[lead + i] = envelope * x;
  }
  double peak = 0.0;
  for (double v : clip.samples) peak = std::max(peak, std::abs(v));
  const double scale = peak > 0.0 ? spec.peak / peak : 0.0;
  for (double &v : clip.samples) v = v * scale + spec.noise_level * normal(rng);
  return clip;
}

AudioClip SteadyVowel(double f0_hz, const Formants &formants, double seconds,
                      int sample_rate) {
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.resize(static_cast<std::size_t>(std::llround(seconds * sample_rate)));
  const double nyquist = 0.5 * sample_rate;
  std::vector<double> amps;
  for (int h = 1; h * f0_hz < nyquist * 0.95; ++h) {
    double gain = 1.0 / h;
    for (double formant : formants)
      gain *= Resonance(h * f0_hz, formant, 60.0 + 0.04 * formant);
    amps.push_back(gain);
  }
  double peak = 0.0;
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    const double phase = kTwoPi * f0_hz * static_cast<double>(i) / sample_rate;
    double x = 0.0;
    for (std::size_t h = 0; h < amps.size(); ++h)
      x += amps[h] * std::sin(static_cast<double>(h + 1) * phase);
    clip.samples[i] = x;
    peak = std::max(peak, std::abs(x));
  }
  if (peak > 0.0)
    for (double &v : clip.samples) v *= 0.5 / peak;
  return clip;
}

SyntheticCorpus WriteSyntheticCorpus(const std::string &dir,
                                     const SyntheticCorpusOptions &options) {
  if (options.speakers < 1 || options.clips_per_domain < 1)
    throw Error(ErrorCode::kInvalidArgument, "need speakers and clips");
  namespace fs = std::filesystem;
  const std::string emotion_name(EmotionName(options.emotion));
  for (const std::string &sub : {emotion_name, std::string("neutral")}) {
    std::error_code ec;
    fs::create_directories(fs::path(dir) / sub, ec);
    if (ec)
      throw Error(ErrorCode::kOutputDirUnwritable,
                  "cannot create " + (fs::path(dir) / sub).string());
  }

  SyntheticCorpus out;
  out.emotional.root_dir = out.neutral.root_dir = dir;
  std::mt19937_64 rng(options.seed);
  for (int i = 0; i < options.clips_per_domain; ++i) {
    const int speaker = i % options.speakers;
    const double spread =
        options.speakers > 1 ? static_cast<double>(speaker) / (options.speakers - 1) : 0.5;
    // Vocal-tract scale plus a speaker-specific third-formant offset.
    const double scale = 0.88 + 0.3 * spread;
    const double f3_shift = (speaker % 2 == 0 ? 1.0 : -1.0) * 150.0;
    std::array<int, 5> order = {0, 1, 2, 3, 4};
    for (int k = 4; k > 0; --k) std::swap(order[k], order[rng() % (k + 1)]);
    VoiceSpec voice;
    voice.vowels.clear();
    for (int k = 0; k < 3; ++k) {
      Formants f = kVowels[order[k]];
      for (double &v : f) v *= scale;
      f[2] += f3_shift;
      voice.vowels.push_back(f);
    }
    voice.f0_hz = 100.0 + 50.0 * spread;
    voice.duration_s = options.duration_s;
    voice.sample_rate = options.sample_rate;
    const std::uint64_t clip_seed = rng();
    const char *sentence = kSentences[rng() % kSentences.size()];

    char name[64];
    std::snprintf(name, sizeof(name), "spk%d_%03d.wav", speaker + 1, i);
    for (bool emotional : {true, false}) {
      VoiceSpec v = voice;
      if (emotional) {
        v.f0_hz *= options.f0_ratio;
        v.tilt_db_per_octave = options.tilt_db_per_octave;
      }
      const std::string sub = emotional ? emotion_name : "neutral";
      CorpusEntry entry;
      entry.relative_path = sub + "/" + name;
      entry.path = (fs::path(dir) / entry.relative_path).string();
      entry.labels.speaker_id = "spk" + std::to_string(speaker + 1);
      entry.labels.emotion = emotional ? options.emotion : Emotion::kNeutral;
      entry.labels.transcript = SplitWords(sentence);
      WriteWav(SynthesizeVoice(v, clip_seed), entry.path);
      (emotional ? out.emotional : out.neutral).entries.push_back(entry);
    }
  }
  out.emotional_manifest = (fs::path(dir) / (emotion_name + ".csv")).string();
  out.neutral_manifest = (fs::path(dir) / "neutral.csv").string();
  WriteManifest(out.emotional, out.emotional_manifest);
  WriteManifest(out.neutral, out.neutral_manifest);
  return out;
}

}  // namespace voxsan
