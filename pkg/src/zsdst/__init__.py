"""Zero-shot dialogue state tracking with a chat model."""

__version__ = "0.1.0"
