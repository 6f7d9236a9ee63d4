"""Inference modification: apply a schedule to an explicit-DPE model.

The encoder runs once on the original symbol sequence.  Entries with
repeat > 1 have their single encoder state duplicated, never re-encoded,
so a split phoneme stays one phoneme.  Each duplicated state's predicted
duration is divided by its repeat count before the schedule's duration
scale applies (an unscaled split preserves total length), and pitch/energy
offsets are added to the predictor outputs before the embedding lookup.
Decoding proceeds unmodified.
"""

from __future__ import annotations

import wave
from dataclasses import dataclass

import numpy as np

from .errors import UnknownToken
from .model_api import check_model
from .schedule_io import Schedule


@dataclass(frozen=True)
class SynthesisDetails:
    """Per-subphoneme bookkeeping, mostly for tests and debugging."""
    expanded_states: int
    frames_per_subphoneme: np.ndarray  # [sum(repeats)] ints
    pitch_values: np.ndarray
    energy_values: np.ndarray

    @property
    def total_frames(self) -> int:
        return int(self.frames_per_subphoneme.sum())


def _round_half_up(values: np.ndarray) -> np.ndarray:
    return np.floor(values + 0.5).astype(np.int64)


def synthesize(schedule: Schedule, model, return_details: bool = False):
    """Run schedule-modified inference; returns a float waveform in [-1, 1]."""
    check_model(model)
    try:
        token_ids = np.array([model.token_id(e.symbol) for e in schedule.entries],
                             dtype=np.int64)
    except KeyError as exc:
        raise UnknownToken(str(exc.args[0])) from None

    states = model.encode(token_ids)
    repeats = np.array([e.repeat for e in schedule.entries], dtype=np.int64)
    expanded = np.repeat(states, repeats, axis=0)

    scale = np.array([s for e in schedule.entries for s in e.duration_scale])
    per_state_repeat = np.repeat(repeats, repeats)
    duration_pred = model.predict_duration(expanded)
    frames = _round_half_up(duration_pred / per_state_repeat * scale)
    frames = np.maximum(frames, 0)
    # a zero duration scale must contribute exactly zero frames
    frames[scale == 0.0] = 0

    pitch = model.predict_pitch(expanded) + np.array(
        [p for e in schedule.entries for p in e.pitch_offset])
    energy = model.predict_energy(expanded) + np.array(
        [v for e in schedule.entries for v in e.energy_offset])
    adapted = expanded + model.embed_pitch(pitch) + model.embed_energy(energy)

    upsampled = np.repeat(adapted, frames, axis=0)
    waveform = model.vocode(model.decode(upsampled))
    if return_details:
        return waveform, SynthesisDetails(
            expanded_states=int(expanded.shape[0]),
            frames_per_subphoneme=frames,
            pitch_values=pitch,
            energy_values=energy)
    return waveform


def infer_unmodified(symbols: list[str], model) -> np.ndarray:
    """Plain FastSpeech2-style inference, written without the schedule path.

    This is the reference the neutral-schedule identity law compares
    against.
    """
    check_model(model)
    try:
        token_ids = np.array([model.token_id(s) for s in symbols], dtype=np.int64)
    except KeyError as exc:
        raise UnknownToken(str(exc.args[0])) from None
    states = model.encode(token_ids)
    frames = np.maximum(_round_half_up(model.predict_duration(states)), 0)
    pitch = model.predict_pitch(states)
    energy = model.predict_energy(states)
    adapted = states + model.embed_pitch(pitch) + model.embed_energy(energy)
    return model.vocode(model.decode(np.repeat(adapted, frames, axis=0)))


def write_wav(path, waveform: np.ndarray, sample_rate: int) -> None:
    """16-bit PCM mono WAV."""
    clipped = np.clip(waveform, -1.0, 1.0)
    pcm = (clipped * 32767.0).astype("<i2")
    with wave.open(str(path), "wb") as fh:
        fh.setnchannels(1)
        fh.setsampwidth(2)
        fh.setframerate(sample_rate)
        fh.writeframes(pcm.tobytes())
