"""Bumpless pipe dreams, Schubert polynomials, and bijective Monk's rule."""
