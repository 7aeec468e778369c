"""Graph minors, projective-plane embeddings and link conditions for small graphs."""

__version__ = "0.1.0"
