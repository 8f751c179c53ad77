"""Iterated sequences, valuations and Plücker ideals for Grassmannians."""
