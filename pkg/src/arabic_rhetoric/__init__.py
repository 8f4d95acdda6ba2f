"""Dictionary-based topic classification of Arabic tweets, with weekly
ratio series aligned against an offline event timeline."""

__version__ = "0.1.0"
