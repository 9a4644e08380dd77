"""Clique colourings of geometric graphs."""
from ._geoclique import *  # noqa: F401,F403
