"""Tuneful speech synthesis for Sanskrit verse."""

from ._chant import (
    BadWav,
    ChantError,
    ClipUnavailable,
    Config,
    NoMatchingMetre,
    UnknownCharacter,
    UnsupportedCodePoint,
    actual_time,
    apply_sandhi,
    devanagari_to_latin,
    expected_time,
    metre_db,
    normalize,
    pitch_shift,
    read_wav,
    scan,
    split_units,
    synthesize,
    time_stretch,
    tokenize,
    write_wav,
)

__all__ = [
    "BadWav",
    "ChantError",
    "ClipUnavailable",
    "Config",
    "NoMatchingMetre",
    "UnknownCharacter",
    "UnsupportedCodePoint",
    "actual_time",
    "apply_sandhi",
    "devanagari_to_latin",
    "expected_time",
    "metre_db",
    "normalize",
    "pitch_shift",
    "read_wav",
    "scan",
    "split_units",
    "synthesize",
    "time_stretch",
    "tokenize",
    "write_wav",
]
