"""Binomial ideals of collections of cells."""
