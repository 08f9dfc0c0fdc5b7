"""Local independent-set algorithms on random regular graphs and the overlap gap."""

__version__ = "0.1.0"
