"""Complete pairs and C5 witnesses in tournaments, with checkable certificates."""

__version__ = "0.1.0"
