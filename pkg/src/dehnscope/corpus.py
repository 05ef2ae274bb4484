"""The bundled test corpus of named graphs."""

from functools import lru_cache
from importlib import resources

from .graph import SimplicialGraph, parse_graph

NAMES = ("P4", "C4", "K3", "OCT", "GAMMA1", "GAMMA2", "GAMMA3")


@lru_cache(maxsize=None)
def load(name: str) -> SimplicialGraph:
    if name not in NAMES:
        raise KeyError(f"no corpus graph named {name!r}")
    text = resources.files("dehnscope").joinpath("data", f"{name}.graph").read_text("utf-8")
    return parse_graph(text)


def corpus() -> dict[str, SimplicialGraph]:
    return {n: load(n) for n in NAMES}
