"""Trivalent trees, their canonical forms and the tree graph."""
