"""The model surface the bridge drives.

Any FastSpeech2-family model with explicit duration/pitch/energy
prediction fits: the bridge needs the encoder output per input token, the
three scalar predictors over encoder states, additive pitch/energy
embeddings, and the decoder + vocoder tail.  Wiring a pretrained
checkpoint (e.g. an LJSpeech JETS) means implementing this protocol around
its internals; the shapes below are the only contract.
"""

from __future__ import annotations

from typing import Protocol, runtime_checkable

import numpy as np

from .errors import ModelWithoutExplicitDPE

REQUIRED = (
    "token_id", "encode", "predict_duration", "predict_pitch",
    "predict_energy", "embed_pitch", "embed_energy", "decode", "vocode",
    "sample_rate",
)


@runtime_checkable
class ExplicitDpeModel(Protocol):
    sample_rate: int

    def token_id(self, symbol: str) -> int: ...

    def encode(self, token_ids: np.ndarray) -> np.ndarray:
        """[T] int ids -> [T, H] encoder hidden states."""
        ...

    def predict_duration(self, states: np.ndarray) -> np.ndarray:
        """[T, H] -> [T] predicted frames per state (positive floats)."""
        ...

    def predict_pitch(self, states: np.ndarray) -> np.ndarray: ...

    def predict_energy(self, states: np.ndarray) -> np.ndarray: ...

    def embed_pitch(self, values: np.ndarray) -> np.ndarray:
        """[T] pitch values -> [T, H] additive embedding."""
        ...

    def embed_energy(self, values: np.ndarray) -> np.ndarray: ...

    def decode(self, states: np.ndarray) -> np.ndarray:
        """[F, H] frame-rate states -> [F, M] acoustic frames."""
        ...

    def vocode(self, frames: np.ndarray) -> np.ndarray:
        """[F, M] frames -> [F * hop] waveform in [-1, 1]."""
        ...


def check_model(model) -> None:
    missing = [name for name in REQUIRED if not hasattr(model, name)]
    if missing:
        raise ModelWithoutExplicitDPE(missing)
