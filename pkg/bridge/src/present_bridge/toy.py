"""A tiny deterministic FastSpeech2-family model for exercising the bridge.

Seeded random weights, numpy only.  It is structurally faithful where the
bridge cares: one encoder state per input token with neighbor context (so
re-encoding a repeated phoneme differs from duplicating its state),
explicit positive duration predictions, scalar pitch/energy predictors
with additive embeddings, then a frame decoder and a fixed-hop vocoder.

It stands in for a pretrained checkpoint; wiring a real LJSpeech JETS
means implementing the same `ExplicitDpeModel` surface around its
variance adaptor.
"""

from __future__ import annotations

import numpy as np

ARPABET = [
    "AA", "AE", "AH", "AO", "AW", "AX", "AY", "B", "CH", "D", "DH", "EH",
    "ER", "EY", "F", "G", "HH", "IH", "IY", "JH", "K", "L", "M", "N", "NG",
    "OW", "OY", "P", "R", "S", "SH", "T", "TH", "UH", "UW", "V", "W", "Y",
    "Z", "ZH", ",",
]


def _softplus(x: np.ndarray) -> np.ndarray:
    return np.logaddexp(0.0, x)


class TinyDpeModel:
    sample_rate = 22050
    hop = 64

    def __init__(self, seed: int = 0, hidden: int = 24, mel: int = 12):
        rng = np.random.default_rng(seed)
        self.token_table = {s: i for i, s in enumerate(ARPABET)}
        vocab = len(ARPABET)
        self.embedding = rng.normal(0.0, 1.0, (vocab, hidden))
        self.w_prev = rng.normal(0.0, 0.3, (hidden, hidden))
        self.w_self = rng.normal(0.0, 0.6, (hidden, hidden))
        self.w_next = rng.normal(0.0, 0.3, (hidden, hidden))
        self.w_dur = rng.normal(0.0, 0.4, hidden)
        self.b_dur = 0.5
        self.w_pitch = rng.normal(0.0, 0.4, hidden)
        self.w_energy = rng.normal(0.0, 0.4, hidden)
        self.v_pitch = rng.normal(0.0, 0.15, hidden)
        self.v_energy = rng.normal(0.0, 0.15, hidden)
        self.w_dec = rng.normal(0.0, 0.4, (hidden, mel))
        self.w_voc = rng.normal(0.0, 0.3, (mel, self.hop))

    def token_id(self, symbol: str) -> int:
        return self.token_table[symbol]

    def encode(self, token_ids: np.ndarray) -> np.ndarray:
        emb = self.embedding[token_ids]
        prev = np.roll(emb, 1, axis=0)
        prev[0] = 0.0
        nxt = np.roll(emb, -1, axis=0)
        if len(nxt):
            nxt[-1] = 0.0
        return np.tanh(emb @ self.w_self + prev @ self.w_prev + nxt @ self.w_next)

    def predict_duration(self, states: np.ndarray) -> np.ndarray:
        return _softplus(states @ self.w_dur + self.b_dur) * 6.0 + 1.0

    def predict_pitch(self, states: np.ndarray) -> np.ndarray:
        return states @ self.w_pitch

    def predict_energy(self, states: np.ndarray) -> np.ndarray:
        return states @ self.w_energy

    def embed_pitch(self, values: np.ndarray) -> np.ndarray:
        return np.outer(values, self.v_pitch)

    def embed_energy(self, values: np.ndarray) -> np.ndarray:
        return np.outer(values, self.v_energy)

    def decode(self, states: np.ndarray) -> np.ndarray:
        return np.tanh(states @ self.w_dec)

    def vocode(self, frames: np.ndarray) -> np.ndarray:
        return np.tanh(frames @ self.w_voc).reshape(-1)
