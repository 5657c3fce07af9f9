"""网络层：数据模型、文件格式、校验、PLSA 分层"""

from .model import Arc, CutSet, Network, cut_of, edge_nodes_of, neighbors
from .parser import format_network, load_fixture, load_network, parse_network
from .layers import Layering, Renumbering, plsa_connected, plsa_layers, renumber, surviving_connected
from .validate import ValidationReport, validate

__all__ = [
    "Arc", "CutSet", "Network", "cut_of", "edge_nodes_of", "neighbors",
    "format_network", "load_fixture", "load_network", "parse_network",
    "Layering", "Renumbering", "plsa_connected", "plsa_layers", "renumber", "surviving_connected",
    "ValidationReport", "validate",
]
