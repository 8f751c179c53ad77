"""Exact LP-based certificates for polytopes of valuation images."""
