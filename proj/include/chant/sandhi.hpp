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

// Pronunciation-affecting sandhi corrections, applied to the written verse
// before it is split into units. None of these changes the letter count.
// Junction rules never act across a quarter break.

#pragma once

#include "chant/transliteration.hpp"

namespace chant::sandhi {

/// "hn" inside a word is pronounced "nh": vahni -> vanhi.
LetterStream correct_hn(LetterStream stream);

/// Anusvāra (or m) before a stop or nasal inside a word becomes the nasal of
/// that stop's row: samnyāsa -> sannyāsa, saṃgīta -> saṅgīta. Left alone
/// before semivowels, sibilants and h.
LetterStream correct_anusvara(LetterStream stream);

/// Word-final visarga before a word starting with ś/ṣ/s becomes that
/// sibilant and the two words merge: namaḥ śivāya -> namaśśivāya.
LetterStream correct_visarga(LetterStream stream);

/// Visarga before k/kh becomes 'z' (jihvāmūlīya), before p/ph 'f'
/// (upadhmānīya). Word breaks are kept.
LetterStream correct_visarga_aspirates(LetterStream stream);

/// All four corrections in the order above.
LetterStream apply_all(LetterStream stream);

}  // namespace chant::sandhi
