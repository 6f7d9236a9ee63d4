"""Inference-side consumer of present/1 prosody schedules."""

__version__ = "0.1.0"
