"""Missing faces of simplicial spheres."""

from ._mfaces import *  # noqa: F401,F403
from ._mfaces import SimplicialComplex, ParseError  # noqa: F401
