"""Immutable domain types: polynomials, truncated series, random-variable models, enums."""
